#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "surd/numbers.hpp"

namespace surd {

// Reduced fractional exponent in [0, 1).
struct Exponent {
  std::uint32_t num = 0;
  std::uint32_t den = 1;

  friend bool operator==(const Exponent&, const Exponent&) = default;
};

// Reduces num/den into [0,1); the shed integer part is returned in carry.
Exponent reduce_exponent(std::uint64_t num, std::uint64_t den,
                         std::uint64_t& carry);

// A product of prime bases raised to exponents in [0, 1).  The empty
// product is the unit monomial.  Distinct monomials of this shape are
// linearly independent over the rationals, which is what makes map
// equality on elements sound.
class RadicalMonomial {
 public:
  RadicalMonomial() = default;

  // factors must be (prime, reduced exponent) pairs; validates and sorts.
  explicit RadicalMonomial(
      std::vector<std::pair<std::uint64_t, Exponent>> factors);

  static RadicalMonomial unit() { return RadicalMonomial(); }

  bool is_unit() const { return factors_.empty(); }
  const std::vector<std::pair<std::uint64_t, Exponent>>& factors() const {
    return factors_;
  }

  // Sum of exponents; the grading used for canonical ordering.
  Rational total_degree() const;

  // Exponent of the given prime (0/1 when absent).
  Exponent exponent_of(std::uint64_t prime) const;

  friend bool operator==(const RadicalMonomial&,
                         const RadicalMonomial&) = default;

 private:
  friend class MonomialBuilder;
  std::vector<std::pair<std::uint64_t, Exponent>> factors_;
};

// Graded order: by total degree, then lexicographically by (prime,
// exponent).  The unit monomial comes first.
struct MonomialLess {
  bool operator()(const RadicalMonomial& a, const RadicalMonomial& b) const;
};

// Accumulates prime powers with fractional (possibly negative or >= 1)
// exponents; integer parts are folded into a rational scale factor on
// build(), leaving every stored exponent in [0, 1).
class MonomialBuilder {
 public:
  void multiply(std::uint64_t prime, std::int64_t num, std::uint64_t den);
  void multiply(std::uint64_t prime, const Exponent& e) {
    multiply(prime, static_cast<std::int64_t>(e.num), e.den);
  }

  // Finishes the monomial; scale is multiplied by p^k for each integer
  // carry k (negative k contributes 1/p^|k|).
  RadicalMonomial build(Rational& scale) &&;

 private:
  struct Slot {
    std::uint64_t prime;
    std::int64_t num;
    std::uint64_t den;
  };
  std::vector<Slot> raw_;
};

}  // namespace surd
