#include "surd/numeric.hpp"

#include <algorithm>

#include "surd/errors.hpp"

namespace surd {

BigFloat::BigFloat(mpfr_prec_t prec) {
  mpfr_init2(v_, std::max<mpfr_prec_t>(prec, MPFR_PREC_MIN));
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, other.v_);
}

BigFloat& BigFloat::operator=(BigFloat other) noexcept {
  mpfr_swap(v_, other.v_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::zero() { return BigFloat(MPFR_PREC_MIN); }

BigFloat BigFloat::from(const Rational& q, mpfr_prec_t prec, mpfr_rnd_t rnd) {
  BigFloat r(prec);
  mpfr_set_q(r.v_, q.backend().data(), rnd);
  return r;
}

BigFloat BigFloat::from(const Int& n, mpfr_prec_t prec, mpfr_rnd_t rnd) {
  BigFloat r(prec);
  mpfr_set_z(r.v_, n.backend().data(), rnd);
  return r;
}

BigFloat BigFloat::from_ui(unsigned long v, mpfr_prec_t prec, mpfr_rnd_t rnd) {
  BigFloat r(prec);
  mpfr_set_ui(r.v_, v, rnd);
  return r;
}

BigFloat BigFloat::pow2(long exponent, mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_set_ui_2exp(r.v_, 1, exponent, MPFR_RNDN);
  return r;
}

#define SURD_BINOP(name, fn)                                              \
  BigFloat BigFloat::name(const BigFloat& a, const BigFloat& b,           \
                          mpfr_prec_t prec, mpfr_rnd_t rnd) {             \
    BigFloat r(prec);                                                     \
    fn(r.v_, a.v_, b.v_, rnd);                                            \
    return r;                                                             \
  }

SURD_BINOP(add, mpfr_add)
SURD_BINOP(sub, mpfr_sub)
SURD_BINOP(mul, mpfr_mul)
SURD_BINOP(div, mpfr_div)
#undef SURD_BINOP

BigFloat BigFloat::rootn(const BigFloat& a, unsigned long n, mpfr_prec_t prec,
                         mpfr_rnd_t rnd) {
  BigFloat r(prec);
  mpfr_rootn_ui(r.v_, a.v_, n, rnd);
  return r;
}

BigFloat BigFloat::mul_2si(const BigFloat& a, long e, mpfr_prec_t prec,
                           mpfr_rnd_t rnd) {
  BigFloat r(prec);
  mpfr_mul_2si(r.v_, a.v_, e, rnd);
  return r;
}

BigFloat BigFloat::negated() const {
  BigFloat r(precision());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::abs() const {
  BigFloat r(precision());
  mpfr_abs(r.v_, v_, MPFR_RNDN);
  return r;
}

std::string BigFloat::str(int significant_digits) const {
  char* out = nullptr;
  mpfr_asprintf(&out, "%.*Rg", significant_digits, v_);
  std::string s(out);
  mpfr_free_str(out);
  return s;
}

Interval::Interval(BigFloat lo, BigFloat hi)
    : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_.compare(hi_) > 0) throw Error("inverted interval bounds");
}

Interval Interval::of(const Rational& q, mpfr_prec_t prec) {
  return Interval(BigFloat::from(q, prec, MPFR_RNDD),
                  BigFloat::from(q, prec, MPFR_RNDU));
}

Interval Interval::of_int(const Int& n, mpfr_prec_t prec) {
  return Interval(BigFloat::from(n, prec, MPFR_RNDD),
                  BigFloat::from(n, prec, MPFR_RNDU));
}

Interval Interval::add(const Interval& a, const Interval& b,
                       mpfr_prec_t prec) {
  return Interval(BigFloat::add(a.lo_, b.lo_, prec, MPFR_RNDD),
                  BigFloat::add(a.hi_, b.hi_, prec, MPFR_RNDU));
}

Interval Interval::sub(const Interval& a, const Interval& b,
                       mpfr_prec_t prec) {
  return Interval(BigFloat::sub(a.lo_, b.hi_, prec, MPFR_RNDD),
                  BigFloat::sub(a.hi_, b.lo_, prec, MPFR_RNDU));
}

Interval Interval::mul(const Interval& a, const Interval& b,
                       mpfr_prec_t prec) {
  const BigFloat* as[2] = {&a.lo_, &a.hi_};
  const BigFloat* bs[2] = {&b.lo_, &b.hi_};
  BigFloat lo, hi;
  bool first = true;
  for (const BigFloat* x : as) {
    for (const BigFloat* y : bs) {
      BigFloat down = BigFloat::mul(*x, *y, prec, MPFR_RNDD);
      BigFloat up = BigFloat::mul(*x, *y, prec, MPFR_RNDU);
      if (first) {
        lo = std::move(down);
        hi = std::move(up);
        first = false;
      } else {
        if (down.compare(lo) < 0) lo = std::move(down);
        if (up.compare(hi) > 0) hi = std::move(up);
      }
    }
  }
  return Interval(std::move(lo), std::move(hi));
}

Interval Interval::pow_ui(const Interval& a, unsigned long n,
                          mpfr_prec_t prec) {
  if (n == 0) {
    return Interval(BigFloat::from_ui(1, prec, MPFR_RNDD),
                    BigFloat::from_ui(1, prec, MPFR_RNDU));
  }
  Interval result = a;
  for (unsigned long i = 1; i < n; ++i) result = mul(result, a, prec);
  return result;
}

Interval Interval::rootn(const Interval& a, unsigned long n,
                         mpfr_prec_t prec) {
  if (a.lo_.sign() < 0) throw BranchError("root of a negative enclosure");
  return Interval(BigFloat::rootn(a.lo_, n, prec, MPFR_RNDD),
                  BigFloat::rootn(a.hi_, n, prec, MPFR_RNDU));
}

Interval Interval::negated() const {
  return Interval(hi_.negated(), lo_.negated());
}

bool Interval::disjoint(const Interval& other) const {
  return hi_.compare(other.lo_) < 0 || other.hi_.compare(lo_) < 0;
}

BigFloat Interval::midpoint(mpfr_prec_t prec) const {
  const BigFloat sum = BigFloat::add(lo_, hi_, prec, MPFR_RNDN);
  return BigFloat::mul_2si(sum, -1, prec, MPFR_RNDN);
}

BigFloat Interval::radius_bound(mpfr_prec_t prec) const {
  // half-width, rounded up, plus one ulp of the midpoint for the
  // rounding of the midpoint itself
  BigFloat half = BigFloat::mul_2si(BigFloat::sub(hi_, lo_, prec, MPFR_RNDU),
                                    -1, prec, MPFR_RNDU);
  const BigFloat mid = midpoint(prec);
  if (!mid.is_zero()) {
    const BigFloat ulp = BigFloat::pow2(mpfr_get_exp(mid.raw()) - prec, prec);
    half = BigFloat::add(half, ulp, prec, MPFR_RNDU);
  }
  return half;
}

Interval eval_interval(const RadicalElement& e, mpfr_prec_t working_bits) {
  const mpfr_prec_t w = std::max<mpfr_prec_t>(working_bits, MPFR_PREC_MIN);
  Interval sum = Interval::exact_zero();
  for (const auto& [m, c] : e.terms()) {
    Interval term = Interval::of(c, w);
    for (const auto& [p, exp] : m.factors()) {
      const Int p_num = int_pow(Int(p), exp.num);
      const Interval surd_value =
          Interval::rootn(Interval::of_int(p_num, w), exp.den, w);
      term = Interval::mul(term, surd_value, w);
    }
    sum = Interval::add(sum, term, w);
  }
  return sum;
}

Approximation eval_numeric(const RadicalElement& e, unsigned precision_bits) {
  if (precision_bits < 32) {
    throw DomainError("numeric evaluation requires at least 32 bits");
  }
  if (e.is_zero()) {
    return Approximation{BigFloat::zero(), BigFloat::zero(), precision_bits};
  }
  for (mpfr_prec_t w = precision_bits + 16;; w *= 2) {
    const Interval box = eval_interval(e, w);
    const BigFloat mid = box.midpoint(w);
    const BigFloat rad = box.radius_bound(w);
    BigFloat bound = mid.abs();
    const BigFloat one = BigFloat::from_ui(1, w, MPFR_RNDN);
    if (bound.compare(one) < 0) bound = one;
    bound = BigFloat::mul_2si(bound, -long(precision_bits) + 4, w, MPFR_RNDD);
    if (rad.compare(bound) <= 0) {
      return Approximation{mid, rad, precision_bits};
    }
    if (w > (1 << 24)) {
      throw ResourceError("numeric evaluation failed to converge");
    }
  }
}

int sign(const RadicalElement& e, unsigned initial_bits) {
  if (e.is_zero()) return 0;
  for (unsigned w = std::max(initial_bits, 32u);; w *= 2) {
    const Interval box = eval_interval(e, w);
    if (box.lo().sign() > 0) return 1;
    if (box.hi().sign() < 0) return -1;
    if (w >= kSignPrecisionCapBits) {
      throw ResourceError("sign refinement exceeded the precision cap");
    }
  }
}

}  // namespace surd
