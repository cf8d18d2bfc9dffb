#pragma once

#include <mpfr.h>

#include <string>

#include "surd/config.hpp"
#include "surd/element.hpp"
#include "surd/numbers.hpp"

namespace surd {

// Value wrapper over mpfr_t.  All arithmetic takes an explicit target
// precision and rounding mode so interval code can round outward.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t prec = 64);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(BigFloat other) noexcept;
  ~BigFloat();

  static BigFloat zero();
  static BigFloat from(const Rational& q, mpfr_prec_t prec, mpfr_rnd_t rnd);
  static BigFloat from(const Int& n, mpfr_prec_t prec, mpfr_rnd_t rnd);
  static BigFloat from_ui(unsigned long v, mpfr_prec_t prec, mpfr_rnd_t rnd);
  // 2^exponent, exact.
  static BigFloat pow2(long exponent, mpfr_prec_t prec);

  static BigFloat add(const BigFloat& a, const BigFloat& b, mpfr_prec_t prec,
                      mpfr_rnd_t rnd);
  static BigFloat sub(const BigFloat& a, const BigFloat& b, mpfr_prec_t prec,
                      mpfr_rnd_t rnd);
  static BigFloat mul(const BigFloat& a, const BigFloat& b, mpfr_prec_t prec,
                      mpfr_rnd_t rnd);
  static BigFloat div(const BigFloat& a, const BigFloat& b, mpfr_prec_t prec,
                      mpfr_rnd_t rnd);
  static BigFloat rootn(const BigFloat& a, unsigned long n, mpfr_prec_t prec,
                        mpfr_rnd_t rnd);
  static BigFloat mul_2si(const BigFloat& a, long e, mpfr_prec_t prec,
                          mpfr_rnd_t rnd);

  BigFloat negated() const;  // exact
  BigFloat abs() const;      // exact

  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int compare(const BigFloat& other) const { return mpfr_cmp(v_, other.v_); }
  bool operator<(const BigFloat& o) const { return compare(o) < 0; }
  bool operator<=(const BigFloat& o) const { return compare(o) <= 0; }

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  std::string str(int significant_digits = 20) const;

  mpfr_srcptr raw() const { return v_; }
  mpfr_ptr raw() { return v_; }

 private:
  mpfr_t v_;
};

// Closed interval [lo, hi] guaranteed to contain the represented real.
class Interval {
 public:
  Interval() : lo_(BigFloat::zero()), hi_(BigFloat::zero()) {}
  Interval(BigFloat lo, BigFloat hi);

  static Interval exact_zero() { return Interval(); }
  static Interval of(const Rational& q, mpfr_prec_t prec);
  static Interval of_int(const Int& n, mpfr_prec_t prec);

  static Interval add(const Interval& a, const Interval& b, mpfr_prec_t prec);
  static Interval sub(const Interval& a, const Interval& b, mpfr_prec_t prec);
  static Interval mul(const Interval& a, const Interval& b, mpfr_prec_t prec);
  static Interval pow_ui(const Interval& a, unsigned long n, mpfr_prec_t prec);
  // Requires a nonnegative interval.
  static Interval rootn(const Interval& a, unsigned long n, mpfr_prec_t prec);

  Interval negated() const;

  const BigFloat& lo() const { return lo_; }
  const BigFloat& hi() const { return hi_; }

  bool contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }
  bool disjoint(const Interval& other) const;

  BigFloat midpoint(mpfr_prec_t prec) const;
  // Upper bound on |true - midpoint(prec)|.
  BigFloat radius_bound(mpfr_prec_t prec) const;

 private:
  BigFloat lo_, hi_;
};

struct Approximation {
  BigFloat value;
  BigFloat radius;
  unsigned precision_bits;
};

// Certified enclosure of the element's value at the given working
// precision (outward rounding throughout).
Interval eval_interval(const RadicalElement& e, mpfr_prec_t working_bits);

// Midpoint/radius approximation with radius <= 2^(4-precision_bits) *
// max(1, |value|); exact (0, 0) for the zero element.
Approximation eval_numeric(const RadicalElement& e, unsigned precision_bits);

// Exact sign: 0 iff the element is zero (decided symbolically); otherwise
// refines precision until the enclosure excludes zero.
int sign(const RadicalElement& e,
         unsigned initial_bits = kDefaultPrecisionBits);

}  // namespace surd
