#include "surd/numbers.hpp"

#include "surd/errors.hpp"

namespace surd {

Int int_pow(Int base, unsigned long exponent) {
  Int result;
  mpz_pow_ui(result.backend().data(), base.backend().data(), exponent);
  return result;
}

Rational rational_pow(const Rational& base, long long exponent) {
  if (exponent == 0) return Rational(1);
  if (base == 0 && exponent < 0) throw DomainError("division by zero");
  const unsigned long e =
      exponent < 0 ? -static_cast<unsigned long long>(exponent)
                   : static_cast<unsigned long long>(exponent);
  Int num = int_pow(numerator(base), e);
  Int den = int_pow(denominator(base), e);
  if (exponent < 0) num.swap(den);
  return Rational(num, den);
}

std::string to_string(const Rational& q) { return q.str(); }
std::string to_string(const Int& n) { return n.str(); }

}  // namespace surd
