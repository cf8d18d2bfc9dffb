#include "surd/monomial.hpp"

#include <algorithm>
#include <numeric>

#include "surd/errors.hpp"
#include "surd/factor.hpp"

namespace surd {

Exponent reduce_exponent(std::uint64_t num, std::uint64_t den,
                         std::uint64_t& carry) {
  if (den == 0) throw DomainError("exponent denominator must be positive");
  carry = num / den;
  num %= den;
  const std::uint64_t g = std::gcd(num, den);
  num /= g;
  den /= g;
  if (num > UINT32_MAX || den > UINT32_MAX) {
    throw ResourceError("exponent fraction exceeds 32 bits");
  }
  return Exponent{static_cast<std::uint32_t>(num),
                  static_cast<std::uint32_t>(den)};
}

RadicalMonomial::RadicalMonomial(
    std::vector<std::pair<std::uint64_t, Exponent>> factors)
    : factors_(std::move(factors)) {
  std::sort(factors_.begin(), factors_.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const auto& [p, e] = factors_[i];
    if (!is_prime(p)) throw DomainError("monomial base must be prime");
    if (i > 0 && factors_[i - 1].first == p) {
      throw DomainError("duplicate prime in monomial");
    }
    if (e.num == 0 || e.num >= e.den ||
        std::gcd<std::uint64_t>(e.num, e.den) != 1) {
      throw DomainError("monomial exponent must be reduced and in (0,1)");
    }
  }
}

Rational RadicalMonomial::total_degree() const {
  Rational sum;
  for (const auto& [p, e] : factors_) {
    sum += Rational(e.num, e.den);
  }
  return sum;
}

Exponent RadicalMonomial::exponent_of(std::uint64_t prime) const {
  for (const auto& [p, e] : factors_) {
    if (p == prime) return e;
  }
  return Exponent{0, 1};
}

bool MonomialLess::operator()(const RadicalMonomial& a,
                              const RadicalMonomial& b) const {
  const Rational da = a.total_degree();
  const Rational db = b.total_degree();
  if (da != db) return da < db;
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  for (std::size_t i = 0; i < std::min(fa.size(), fb.size()); ++i) {
    if (fa[i].first != fb[i].first) return fa[i].first < fb[i].first;
    // same prime: compare exponents num/den exactly
    const std::uint64_t lhs = std::uint64_t(fa[i].second.num) * fb[i].second.den;
    const std::uint64_t rhs = std::uint64_t(fb[i].second.num) * fa[i].second.den;
    if (lhs != rhs) return lhs < rhs;
  }
  return fa.size() < fb.size();
}

void MonomialBuilder::multiply(std::uint64_t prime, std::int64_t num,
                               std::uint64_t den) {
  if (den == 0) throw DomainError("exponent denominator must be positive");
  if (num == 0) return;
  for (auto& slot : raw_) {
    if (slot.prime == prime) {
      // common denominator accumulation
      const std::uint64_t g = std::gcd(slot.den, den);
      const std::uint64_t lcm = slot.den / g * den;
      slot.num = slot.num * std::int64_t(lcm / slot.den) +
                 num * std::int64_t(lcm / den);
      slot.den = lcm;
      return;
    }
  }
  raw_.push_back(Slot{prime, num, den});
}

RadicalMonomial MonomialBuilder::build(Rational& scale) && {
  std::vector<std::pair<std::uint64_t, Exponent>> factors;
  for (const auto& slot : raw_) {
    // floor division toward minus infinity
    std::int64_t k = slot.num / std::int64_t(slot.den);
    std::int64_t rem = slot.num - k * std::int64_t(slot.den);
    if (rem < 0) {
      rem += slot.den;
      --k;
    }
    if (k != 0) scale *= rational_pow(Rational(slot.prime), k);
    if (rem != 0) {
      std::uint64_t carry = 0;
      const Exponent e = reduce_exponent(std::uint64_t(rem), slot.den, carry);
      factors.emplace_back(slot.prime, e);
    }
  }
  std::sort(factors.begin(), factors.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  RadicalMonomial m;
  m.factors_ = std::move(factors);
  return m;
}

}  // namespace surd
