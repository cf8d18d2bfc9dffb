#pragma once

#include <cstdint>
#include <vector>

#include "surd/numbers.hpp"

namespace surd {

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

bool is_prime(std::uint64_t n);

// Complete factorization, primes ascending. n must be >= 1.
std::vector<PrimePower> factor(std::uint64_t n);

// Rejects inputs that do not fit 64 bits with a resource error.
std::vector<PrimePower> factor(const Int& n);

}  // namespace surd
