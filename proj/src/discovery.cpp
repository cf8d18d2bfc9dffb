#include "surd/discovery.hpp"

#include <algorithm>
#include <numeric>

#include "surd/errors.hpp"
#include "surd/factor.hpp"
#include "surd/numeric.hpp"

namespace surd {
namespace {

// |a| asc, then positives before negatives: 0, 1, -1, 2, -2, ...
bool scalar_order(const Rational& a, const Rational& b) {
  const Rational ma = abs(a);
  const Rational mb = abs(b);
  if (ma != mb) return ma < mb;
  return a > b;
}

}  // namespace

SearchDomain SearchDomain::integer_range(long long radius) {
  if (radius < 0) throw DomainError("radius must be nonnegative");
  SearchDomain d;
  d.values_.emplace_back(0);
  for (long long v = 1; v <= radius; ++v) {
    d.values_.emplace_back(v);
    d.values_.emplace_back(-v);
  }
  return d;
}

SearchDomain SearchDomain::rational_grid(long long max_abs_numerator,
                                         long long max_denominator) {
  if (max_abs_numerator < 0 || max_denominator < 1) {
    throw DomainError("invalid rational grid bounds");
  }
  SearchDomain d;
  for (long long q = 1; q <= max_denominator; ++q) {
    for (long long p = -max_abs_numerator; p <= max_abs_numerator; ++p) {
      d.values_.emplace_back(p, q);
    }
  }
  std::sort(d.values_.begin(), d.values_.end(), scalar_order);
  d.values_.erase(std::unique(d.values_.begin(), d.values_.end()),
                  d.values_.end());
  return d;
}

std::vector<Rational> SearchDomain::nonzero_values() const {
  std::vector<Rational> out;
  out.reserve(values_.size());
  for (const auto& v : values_) {
    if (v != 0) out.push_back(v);
  }
  return out;
}

std::vector<std::vector<Rational>> SearchDomain::tuples(
    std::size_t k, bool include_zero) const {
  const std::vector<Rational> pool =
      include_zero ? values_ : nonzero_values();
  std::vector<std::vector<Rational>> result;
  std::vector<std::size_t> idx(k, 0);
  if (pool.empty() && k > 0) return result;
  while (true) {
    std::vector<Rational> tuple(k);
    for (std::size_t i = 0; i < k; ++i) tuple[i] = pool[idx[i]];
    result.push_back(std::move(tuple));
    std::size_t pos = k;
    while (pos > 0) {
      if (++idx[pos - 1] < pool.size()) break;
      idx[pos - 1] = 0;
      --pos;
    }
    if (pos == 0) break;
  }
  // graded order: max-norm first, then the odometer (lex) order, which
  // std::stable_sort preserves within a grade
  std::stable_sort(result.begin(), result.end(),
                   [](const auto& a, const auto& b) {
                     Rational na, nb;
                     for (const auto& v : a) na = std::max(na, abs(v));
                     for (const auto& v : b) nb = std::max(nb, abs(v));
                     return na < nb;
                   });
  return result;
}

std::vector<PowerScanHit> power_scan(const RadicalElement& s, unsigned n_min,
                                     unsigned n_max, std::size_t max_terms) {
  if (n_min < 2 || n_min > n_max) {
    throw DomainError("need 2 <= n_min <= n_max");
  }
  std::vector<PowerScanHit> hits;
  RadicalElement current = pow(s, n_min);
  for (unsigned n = n_min; n <= n_max; ++n) {
    if (current.term_count() <= max_terms) {
      hits.push_back(PowerScanHit{n, current, current.term_count()});
    }
    if (n < n_max) current *= s;
  }
  return hits;
}

std::vector<CoeffScanHit> coeff_scan(const CoefficientTemplate& tmpl,
                                     const SearchDomain& domain) {
  const std::size_t n_slots = tmpl.slots.size();
  if (n_slots == 0) throw DomainError("template has no slots");
  for (const auto& slot : tmpl.slots) {
    if (slot.term_count() != 1) {
      throw DomainError("template slots must be single-term elements");
    }
  }
  if (tmpl.power < 1) throw DomainError("template power must be >= 1");
  if (tmpl.free_slots.size() > 4) {
    throw ResourceError("more than 4 free coefficient slots");
  }
  std::vector<bool> covered(n_slots, false);
  for (const auto& [i, v] : tmpl.fixed) {
    if (i >= n_slots) throw DomainError("fixed slot index out of range");
    covered[i] = true;
  }
  for (const std::size_t i : tmpl.free_slots) {
    if (i >= n_slots) throw DomainError("free slot index out of range");
    if (covered[i]) throw DomainError("slot is both fixed and free");
    covered[i] = true;
  }
  if (!std::all_of(covered.begin(), covered.end(), [](bool b) { return b; })) {
    throw DomainError("fixed and free slots must partition the template");
  }
  // vanish monomials must live in the closure field of the slots
  FieldSignature closure;
  for (const auto& slot : tmpl.slots) {
    closure.merge(FieldSignature::of(slot));
  }
  for (const auto& m : tmpl.vanish) {
    for (const auto& [p, e] : m.factors()) {
      const auto it = closure.components().find(p);
      if (it == closure.components().end() || it->second % e.den != 0) {
        throw DomainError("vanish monomial outside the template field");
      }
    }
  }

  RadicalElement fixed_part;
  for (const auto& [i, v] : tmpl.fixed) {
    fixed_part += RadicalElement(v) * tmpl.slots[i];
  }

  std::vector<CoeffScanHit> hits;
  std::size_t counter = 0;
  for (const auto& tuple : domain.tuples(tmpl.free_slots.size(), true)) {
    RadicalElement candidate = fixed_part;
    for (std::size_t i = 0; i < tuple.size(); ++i) {
      candidate += RadicalElement(tuple[i]) * tmpl.slots[tmpl.free_slots[i]];
    }
    const RadicalElement raised = pow(candidate, tmpl.power);
    bool ok = true;
    for (const auto& m : tmpl.vanish) {
      if (raised.coefficient(m) != 0) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    IdentityRecord rec =
        candidate.is_zero()
            ? IdentityRecord{"coeff-" + std::to_string(counter),
                             NestedClaim{tmpl.power, RadicalElement(0)},
                             RadicalElement(0), "coefficient method",
                             Status::VerifiedExact, "zero candidate"}
            : make_power_identity(candidate, tmpl.power,
                                  "coeff-" + std::to_string(counter));
    rec.source = "coefficient method";
    hits.push_back(CoeffScanHit{tuple, std::move(rec)});
    ++counter;
  }
  return hits;
}

namespace {

// b is a perfect p-th power for some prime p dividing m?
bool is_power_conflicting(std::uint64_t b, unsigned m) {
  const auto factors = factor(b);
  unsigned g = 0;
  for (const auto& [p, e] : factors) g = std::gcd(g, e);
  for (const auto& [p, e] : factor(std::uint64_t(m))) {
    if (g % p == 0) return true;
  }
  return false;
}

}  // namespace

QuotientScanResult quotient_scan(unsigned root_degree, unsigned surd_degree,
                                 std::uint64_t base_max,
                                 std::uint64_t coeff_max,
                                 bool even_sign_symmetric) {
  if (root_degree < 2 || surd_degree < 2) {
    throw DomainError("quotient scan needs degrees >= 2");
  }
  QuotientScanResult result;
  const bool even = root_degree % 2 == 0;
  for (std::uint64_t b = 2; b <= base_max; ++b) {
    if (is_power_conflicting(b, surd_degree)) continue;
    const RadicalElement r = normalize_radical(Rational(b), surd_degree);
    for (std::uint64_t z = 1; z <= coeff_max; ++z) {
      for (std::uint64_t w = 1; w <= coeff_max; ++w) {
        if (std::gcd(z, w) != 1) continue;
        for (const int sg : even ? std::vector<int>{1}
                                 : std::vector<int>{1, -1}) {
          ++result.candidates;
          const Rational ww = Rational(w) * sg;
          const RadicalElement c = RadicalElement(Rational(z)) +
                                   RadicalElement(ww) * r;
          const RadicalElement d = RadicalElement(Rational(z)) -
                                   RadicalElement(ww) * r;
          if (d.is_zero() || c.is_zero()) {
            ++result.degenerate_skipped;
            continue;
          }
          const RadicalElement q = c * inverse(d);
          if (even && !even_sign_symmetric && sign(q) < 0) continue;
          const RadicalElement qn = pow(q, root_degree);
          const RadicalElement qn_plus_1 = qn + RadicalElement(1);
          if (qn_plus_1.is_zero()) {
            ++result.degenerate_skipped;
            continue;
          }
          const RadicalElement u = (qn - RadicalElement(1)) *
                                   inverse(qn_plus_1);
          // accept iff u is a rational multiple of the surd r
          if (u.is_zero() || u.term_count() != 1 ||
              r.term_count() != 1) {
            continue;
          }
          const auto& [um, uc] = *u.terms().begin();
          const auto& [rm, rc] = *r.terms().begin();
          if (!(um == rm) || um.is_unit()) continue;
          const Rational lambda = uc / rc;  // = y / x
          QuotientForm form;
          form.x = Rational(denominator(lambda));
          form.y = Rational(numerator(lambda));
          form.z = Rational(z);
          form.w = ww;
          form.base = b;
          form.surd_degree = surd_degree;
          form.root_degree = root_degree;
          const IdentityRecord rec = verify_quotient(form);
          if (rec.status == Status::VerifiedExact) {
            result.forms.push_back(std::move(form));
          }
        }
      }
    }
  }
  return result;
}

std::vector<DiophantineHit> dioph_scan(std::uint64_t base_max,
                                       std::uint64_t coeff_max,
                                       bool fourth_power_free) {
  if (base_max < 1 || coeff_max < 1) throw DomainError("bounds must be >= 1");
  std::vector<DiophantineHit> hits;
  for (std::uint64_t b = 1; b <= base_max; ++b) {
    if (fourth_power_free) {
      bool free_of_fourth_powers = true;
      for (const auto& [p, e] : factor(b)) {
        if (e >= 4) {
          free_of_fourth_powers = false;
          break;
        }
      }
      if (!free_of_fourth_powers) continue;
    }
    for (std::uint64_t z = 1; z <= coeff_max; ++z) {
      for (std::uint64_t w = 1; w <= coeff_max; ++w) {
        if (std::gcd(z, w) != 1) continue;
        const auto lhs = static_cast<unsigned __int128>(b) * w * w * w * w;
        const auto rhs = static_cast<unsigned __int128>(5) * z * z * z * z;
        if (lhs == rhs) hits.push_back(DiophantineHit{b, z, w});
      }
    }
  }
  return hits;
}

std::vector<RadicalElement> denest_scan(const RadicalElement& radicand,
                                        unsigned degree,
                                        std::size_t support_size,
                                        const SearchDomain& domain,
                                        const FieldSignature& signature,
                                        bool use_prefilter) {
  if (degree < 2) throw DomainError("denesting needs degree >= 2");
  if (support_size < 1 || support_size > 4) {
    throw DomainError("support size must be in [1, 4]");
  }
  FieldSignature sig = FieldSignature::of(radicand);
  sig.merge(signature);
  const std::vector<RadicalMonomial> basis = sig.basis();
  const std::vector<Rational> coeffs = domain.nonzero_values();

  // candidate count = sum over k of C(|basis|, k) * |coeffs|^k
  unsigned long long total = 0;
  {
    const unsigned long long nb = basis.size();
    const unsigned long long nc = coeffs.size();
    for (std::size_t k = 1; k <= std::min<std::size_t>(support_size, nb);
         ++k) {
      unsigned long long combos = 1;
      for (std::size_t i = 0; i < k; ++i) combos = combos * (nb - i) / (i + 1);
      unsigned long long assignments = 1;
      for (std::size_t i = 0; i < k; ++i) {
        if (assignments > kDenestCandidateCeiling / std::max(1ull, nc)) {
          assignments = kDenestCandidateCeiling + 1;
          break;
        }
        assignments *= nc;
      }
      if (combos > kDenestCandidateCeiling / std::max(1ull, assignments)) {
        total = kDenestCandidateCeiling + 1;
        break;
      }
      total += combos * assignments;
      if (total > kDenestCandidateCeiling) break;
    }
    if (total > kDenestCandidateCeiling) {
      throw ResourceError("denesting search space exceeds the ceiling");
    }
  }

  constexpr mpfr_prec_t kFilterBits = 96;
  std::vector<Interval> basis_values;
  Interval target;
  if (use_prefilter) {
    basis_values.reserve(basis.size());
    for (const auto& m : basis) {
      basis_values.push_back(
          eval_interval(RadicalElement::term(Rational(1), m), kFilterBits));
    }
    target = eval_interval(radicand, kFilterBits);
  }

  std::vector<RadicalElement> found;
  const bool even = degree % 2 == 0;
  std::vector<std::size_t> combo;
  const std::size_t nb = basis.size();

  for (std::size_t k = 1; k <= std::min(support_size, nb); ++k) {
    const auto tuples = domain.tuples(k, false);
    combo.assign(k, 0);
    std::iota(combo.begin(), combo.end(), 0);
    while (true) {
      for (const auto& tuple : tuples) {
        if (use_prefilter) {
          Interval value = Interval::exact_zero();
          for (std::size_t i = 0; i < k; ++i) {
            value = Interval::add(
                value,
                Interval::mul(Interval::of(tuple[i], kFilterBits),
                              basis_values[combo[i]], kFilterBits),
                kFilterBits);
          }
          const Interval powered = Interval::pow_ui(value, degree,
                                                    kFilterBits);
          if (powered.disjoint(target)) continue;
          if (even && value.hi().sign() < 0) continue;
        }
        RadicalElement candidate;
        for (std::size_t i = 0; i < k; ++i) {
          candidate.add_term(basis[combo[i]], tuple[i]);
        }
        if (pow(candidate, degree) != radicand) continue;
        if (even && sign(candidate) < 0) continue;
        found.push_back(candidate);
      }
      // next combination in lex order
      std::size_t pos = k;
      while (pos > 0 && combo[pos - 1] == nb - k + pos - 1) --pos;
      if (pos == 0) break;
      ++combo[pos - 1];
      for (std::size_t i = pos; i < k; ++i) combo[i] = combo[i - 1] + 1;
    }
  }
  return found;
}

}  // namespace surd
