#pragma once

#include <string>
#include <variant>
#include <vector>

#include "surd/config.hpp"
#include "surd/element.hpp"
#include "surd/parse.hpp"

namespace surd {

enum class Status {
  Unverified,
  VerifiedExact,
  RefutedExact,
  RefutedBranch,
  Indeterminate,
};

std::string_view to_string(Status s);

struct QuotientPair {
  RadicalElement numerator;
  RadicalElement denominator;
};

using Claim = std::variant<NestedClaim, QuotientClaim>;
using RightSide = std::variant<RadicalElement, QuotientPair>;

// One nested-radical claim plus its verification state.  Records are
// immutable values; verify() returns an updated copy.
struct IdentityRecord {
  std::string id;
  Claim claim;
  RightSide rhs;
  std::string source;
  Status status = Status::Unverified;
  std::string note;
};

struct VerifyOptions {
  unsigned dimension_bound = kDefaultDimensionBound;
  unsigned precision_bits = kDefaultPrecisionBits;
  // Accept a quotient-pair right side up to sign under an even root
  // (the quotient shape identifies (z,w) with (-z,-w)).
  bool even_sign_symmetric = false;
};

// Exact verification with principal-real-root branch semantics: the
// power equation is decided by element equality; for even degrees both
// sides must additionally be nonnegative.  Resource errors surface as
// Indeterminate with the reason in the note.
IdentityRecord verify(IdentityRecord rec, const VerifyOptions& opts = {});

// root(n, s^n) = s, with the right side negated (and noted) when n is
// even and s is negative.
IdentityRecord make_power_identity(const RadicalElement& s, unsigned degree,
                                   std::string id = {});

// The quotient shape root(n, (x+y*b^(1/m))/(x-y*b^(1/m))) =
// (z+w*b^(1/m))/(z-w*b^(1/m)).
struct QuotientForm {
  Rational x, y, z, w;
  std::uint64_t base = 0;
  unsigned surd_degree = 2;
  unsigned root_degree = 2;
};

// Verifies the quotient shape; for even root degrees the right side is
// accepted up to sign (noted when flipped).
IdentityRecord verify_quotient(const QuotientForm& form,
                               const VerifyOptions& opts = {});

// Partial geometric sums of ratio -2^(1/3), scaled by 9^(-1/3):
// ascending takes 3m terms upward from exponent 0, descending downward.
IdentityRecord geom_ascending(unsigned m);
IdentityRecord geom_descending(unsigned m);
// Closed form of the full descending series.
IdentityRecord geom_limit();

// One record per degree: root(d, s^d) = s.
std::vector<IdentityRecord> equivalence_chain(
    const RadicalElement& s, const std::vector<unsigned>& degrees);

struct Interest {
  std::size_t lhs_terms = 0;
  std::size_t rhs_terms = 0;
  bool interesting = false;
};

// Term-count comparison; requires a verified-exact record.
Interest interestingness(const IdentityRecord& rec);

// Term counts without the verification gate (used for reporting).
std::size_t claim_term_count(const Claim& claim);
std::size_t rhs_term_count(const RightSide& rhs);

std::string format_claim(const Claim& claim);
std::string format_rhs(const RightSide& rhs);

}  // namespace surd
