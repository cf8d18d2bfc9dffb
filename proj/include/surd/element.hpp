#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "surd/config.hpp"
#include "surd/monomial.hpp"
#include "surd/numbers.hpp"

namespace surd {

// An element of Q(p1^(1/m1), ..., pk^(1/mk)): a finite sum of rational
// coefficients times radical monomials.  No stored coefficient is zero;
// the zero element is the empty sum.  Because distinct prime-radical
// monomials are linearly independent over Q, equality is map equality.
class RadicalElement {
 public:
  using TermMap = std::map<RadicalMonomial, Rational, MonomialLess>;

  RadicalElement() = default;
  RadicalElement(const Rational& value);  // NOLINT: implicit by design
  RadicalElement(int value) : RadicalElement(Rational(value)) {}

  static RadicalElement term(const Rational& coefficient,
                             const RadicalMonomial& monomial);

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  // The value as a rational if the element is one (zero included).
  std::optional<Rational> rational_value() const;

  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  Rational coefficient(const RadicalMonomial& m) const;

  void add_term(const RadicalMonomial& m, const Rational& coefficient);

  RadicalElement& operator+=(const RadicalElement& other);
  RadicalElement& operator-=(const RadicalElement& other);
  RadicalElement& operator*=(const RadicalElement& other);

  friend RadicalElement operator+(RadicalElement a, const RadicalElement& b) {
    a += b;
    return a;
  }
  friend RadicalElement operator-(RadicalElement a, const RadicalElement& b) {
    a -= b;
    return a;
  }
  friend RadicalElement operator*(const RadicalElement& a,
                                  const RadicalElement& b);
  friend RadicalElement operator-(const RadicalElement& a);

  friend bool operator==(const RadicalElement&,
                         const RadicalElement&) = default;

 private:
  TermMap terms_;
};

// radicand^(1/degree) as a single-term element over the prime basis,
// under principal real roots.  radicand must be positive, degree >= 1.
RadicalElement normalize_radical(const Rational& radicand, unsigned degree);

// Exact integer power by repeated squaring; negative exponents invert
// first (zero base with negative exponent is a division-by-zero error).
RadicalElement pow(const RadicalElement& a, long long n,
                   unsigned dimension_bound = kDefaultDimensionBound);

// Multiplicative inverse by exact linear solve on the monomial basis of
// the element's field signature.
RadicalElement inverse(const RadicalElement& a,
                       unsigned dimension_bound = kDefaultDimensionBound);

// The (prime -> degree) components spanning a set of elements; degree is
// the lcm of exponent denominators of that prime.
class FieldSignature {
 public:
  FieldSignature() = default;

  static FieldSignature of(const RadicalElement& e);

  void extend(std::uint64_t prime, unsigned degree);
  void merge(const FieldSignature& other);

  const std::map<std::uint64_t, unsigned>& components() const {
    return components_;
  }

  Int dimension() const;

  // All dimension() monomials of the signature, in canonical order.
  std::vector<RadicalMonomial> basis() const;

  friend bool operator==(const FieldSignature&,
                         const FieldSignature&) = default;

 private:
  std::map<std::uint64_t, unsigned> components_;
};

}  // namespace surd
