#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "surd/identity.hpp"

namespace surd {

// Finite coefficient domain with a reproducible graded enumeration
// order: values sorted by |v|, positives before negatives, and tuples
// by max-norm then lexicographically.
class SearchDomain {
 public:
  static SearchDomain integer_range(long long radius);
  static SearchDomain rational_grid(long long max_abs_numerator,
                                    long long max_denominator);

  // Distinct values including zero, in canonical scalar order.
  const std::vector<Rational>& values() const { return values_; }
  std::vector<Rational> nonzero_values() const;

  // All k-tuples over the nonzero values, graded by max-norm then lex.
  std::vector<std::vector<Rational>> tuples(std::size_t k,
                                            bool include_zero) const;

 private:
  std::vector<Rational> values_;
};

struct PowerScanHit {
  unsigned exponent;
  RadicalElement radicand;
  std::size_t terms;
};

// All n in [n_min, n_max] with term_count(s^n) <= max_terms, ascending.
std::vector<PowerScanHit> power_scan(const RadicalElement& s, unsigned n_min,
                                     unsigned n_max, std::size_t max_terms);

// Sum of coefficient * slot terms, raised to a fixed power, constrained
// so every monomial in `vanish` has an exactly zero coefficient.
struct CoefficientTemplate {
  std::vector<RadicalElement> slots;  // each a single-term element
  std::map<std::size_t, Rational> fixed;
  std::vector<std::size_t> free_slots;
  unsigned power = 2;
  std::vector<RadicalMonomial> vanish;
};

struct CoeffScanHit {
  std::vector<Rational> assignment;  // in free_slots order
  IdentityRecord record;
};

std::vector<CoeffScanHit> coeff_scan(const CoefficientTemplate& tmpl,
                                     const SearchDomain& domain);

struct QuotientScanResult {
  std::vector<QuotientForm> forms;
  std::uint64_t degenerate_skipped = 0;
  std::uint64_t candidates = 0;
};

// Enumerates bases and (z, w) pairs whose quotient power collapses back
// to the quotient shape; every returned form re-verifies verified-exact.
// For even root degrees only positive right-side quotients are accepted
// (principal branch) unless even_sign_symmetric is set.
QuotientScanResult quotient_scan(unsigned root_degree, unsigned surd_degree,
                                 std::uint64_t base_max,
                                 std::uint64_t coeff_max,
                                 bool even_sign_symmetric = false);

struct DiophantineHit {
  std::uint64_t base, z, w;

  friend bool operator==(const DiophantineHit&,
                         const DiophantineHit&) = default;
};

// Solutions of base * w^4 = 5 * z^4 with gcd(z, w) = 1; the
// fourth-power-free filter on the base is on by default.
std::vector<DiophantineHit> dioph_scan(std::uint64_t base_max,
                                       std::uint64_t coeff_max,
                                       bool fourth_power_free = true);

// All elements s over the basis of `signature` (merged with the
// radicand's own signature) with support <= support_size, coefficients
// in the domain, s^degree == radicand, and the principal branch sign.
// The interval prefilter never changes results, only speed.
std::vector<RadicalElement> denest_scan(const RadicalElement& radicand,
                                        unsigned degree,
                                        std::size_t support_size,
                                        const SearchDomain& domain,
                                        const FieldSignature& signature = {},
                                        bool use_prefilter = true);

}  // namespace surd
