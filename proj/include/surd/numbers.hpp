#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>

namespace surd {

using Int = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

// GMP keeps mpq_t canonical (reduced, positive denominator), which is
// exactly the invariant Rational promises.

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

Int int_pow(Int base, unsigned long exponent);
Rational rational_pow(const Rational& base, long long exponent);

std::string to_string(const Rational& q);
std::string to_string(const Int& n);

}  // namespace surd
