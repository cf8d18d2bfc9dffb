#include "surd/identity.hpp"

#include "surd/errors.hpp"
#include "surd/numeric.hpp"

namespace surd {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Unverified:
      return "unverified";
    case Status::VerifiedExact:
      return "verified-exact";
    case Status::RefutedExact:
      return "refuted-exact";
    case Status::RefutedBranch:
      return "refuted-branch";
    case Status::Indeterminate:
      return "indeterminate";
  }
  return "unknown";
}

namespace {

struct Outcome {
  Status status;
  std::string note;
};

Outcome verify_nested_element(const NestedClaim& claim,
                              const RadicalElement& s,
                              const VerifyOptions& opts) {
  if (pow(s, claim.degree, opts.dimension_bound) != claim.radicand) {
    return {Status::RefutedExact, "exact power equation fails"};
  }
  if (claim.degree % 2 == 0) {
    if (sign(s, opts.precision_bits) < 0) {
      return {Status::RefutedBranch,
              "right side is negative; an even principal root is not"};
    }
    if (sign(claim.radicand, opts.precision_bits) < 0) {
      return {Status::RefutedBranch, "negative radicand under an even root"};
    }
  }
  return {Status::VerifiedExact, ""};
}

Outcome verify_nested_pair(const NestedClaim& claim, const QuotientPair& rhs,
                           const VerifyOptions& opts) {
  if (rhs.denominator.is_zero()) {
    throw DomainError("zero denominator on the right side");
  }
  const RadicalElement lhs_power = pow(rhs.numerator, claim.degree,
                                       opts.dimension_bound);
  const RadicalElement rhs_power =
      claim.radicand * pow(rhs.denominator, claim.degree, opts.dimension_bound);
  if (lhs_power != rhs_power) {
    return {Status::RefutedExact, "exact power equation fails"};
  }
  if (claim.degree % 2 == 0) {
    const int qs = sign(rhs.numerator, opts.precision_bits) *
                   sign(rhs.denominator, opts.precision_bits);
    if (qs < 0) {
      if (opts.even_sign_symmetric) {
        return {Status::VerifiedExact,
                "right side sign-normalized under the even root"};
      }
      return {Status::RefutedBranch,
              "right-side quotient is negative under an even root"};
    }
    if (sign(claim.radicand, opts.precision_bits) < 0) {
      return {Status::RefutedBranch, "negative radicand under an even root"};
    }
  }
  return {Status::VerifiedExact, ""};
}

Outcome verify_quotient_claim(const QuotientClaim& claim, const RightSide& rhs,
                              const VerifyOptions& opts) {
  if (claim.denominator.is_zero()) {
    throw DomainError("zero denominator in the claim radicand");
  }
  const unsigned n = claim.degree;
  RadicalElement lhs_power, rhs_power;
  int rhs_sign = 1;
  if (const auto* s = std::get_if<RadicalElement>(&rhs)) {
    lhs_power = pow(*s, n, opts.dimension_bound) * claim.denominator;
    rhs_power = claim.numerator;
    if (n % 2 == 0) rhs_sign = sign(*s, opts.precision_bits);
  } else {
    const auto& pair = std::get<QuotientPair>(rhs);
    if (pair.denominator.is_zero()) {
      throw DomainError("zero denominator on the right side");
    }
    lhs_power = pow(pair.numerator, n, opts.dimension_bound) *
                claim.denominator;
    rhs_power = claim.numerator *
                pow(pair.denominator, n, opts.dimension_bound);
    if (n % 2 == 0) {
      rhs_sign = sign(pair.numerator, opts.precision_bits) *
                 sign(pair.denominator, opts.precision_bits);
    }
  }
  if (lhs_power != rhs_power) {
    return {Status::RefutedExact, "exact power equation fails"};
  }
  if (n % 2 == 0) {
    const int lhs_quotient_sign = sign(claim.numerator, opts.precision_bits) *
                                  sign(claim.denominator, opts.precision_bits);
    if (lhs_quotient_sign < 0) {
      return {Status::RefutedBranch,
              "negative quotient radicand under an even root"};
    }
    if (rhs_sign < 0) {
      if (opts.even_sign_symmetric) {
        return {Status::VerifiedExact,
                "right side sign-normalized under the even root"};
      }
      return {Status::RefutedBranch,
              "right side is negative; an even principal root is not"};
    }
  }
  return {Status::VerifiedExact, ""};
}

}  // namespace

IdentityRecord verify(IdentityRecord rec, const VerifyOptions& opts) {
  try {
    Outcome outcome{Status::Indeterminate, ""};
    if (const auto* nested = std::get_if<NestedClaim>(&rec.claim)) {
      if (const auto* s = std::get_if<RadicalElement>(&rec.rhs)) {
        outcome = verify_nested_element(*nested, *s, opts);
      } else {
        outcome = verify_nested_pair(*nested, std::get<QuotientPair>(rec.rhs),
                                     opts);
      }
    } else {
      outcome = verify_quotient_claim(std::get<QuotientClaim>(rec.claim),
                                      rec.rhs, opts);
    }
    rec.status = outcome.status;
    if (!outcome.note.empty()) rec.note = outcome.note;
  } catch (const ResourceError& e) {
    rec.status = Status::Indeterminate;
    rec.note = e.what();
  }
  return rec;
}

IdentityRecord make_power_identity(const RadicalElement& s, unsigned degree,
                                   std::string id) {
  if (degree < 2) throw DomainError("power identity needs degree >= 2");
  IdentityRecord rec;
  rec.id = id.empty() ? "power-" + std::to_string(degree) : std::move(id);
  rec.source = "power construction";
  RadicalElement rhs = s;
  if (degree % 2 == 0 && sign(s) < 0) {
    rhs = -s;
    rec.note = "principal root: right side negated";
  }
  rec.claim = NestedClaim{degree, pow(s, degree)};
  rec.rhs = rhs;
  return verify(std::move(rec));
}

namespace {

// 9^(-1/3) * (-2)^(k/3) read as (-1)^k 2^(k/3) 9^(-1/3); exact on the
// prime basis for any integer k.
RadicalElement geometric_term(long long k) {
  const Rational two_k = rational_pow(Rational(2), k);
  const RadicalElement term = normalize_radical(two_k / 9, 3);
  return (k & 1) == 0 ? term : -term;
}

const RadicalElement& cbrt2() {
  static const RadicalElement value = normalize_radical(Rational(2), 3);
  return value;
}

}  // namespace

IdentityRecord geom_ascending(unsigned m) {
  if (m < 1) throw DomainError("family index must be >= 1");
  const Int base = 1 - (m % 2 == 0 ? int_pow(Int(2), m)
                                   : -int_pow(Int(2), m));
  const Rational scale(base * base * base, 27);
  RadicalElement rhs;
  for (long long k = 0; k < 3ll * m; ++k) rhs += geometric_term(k);
  IdentityRecord rec;
  rec.id = "geom-asc-" + std::to_string(m);
  rec.source = "geometric series, ascending partial sum";
  rec.claim = NestedClaim{3, RadicalElement(scale) * (cbrt2() - 1)};
  rec.rhs = rhs;
  return verify(std::move(rec));
}

IdentityRecord geom_descending(unsigned m) {
  if (m < 1) throw DomainError("family index must be >= 1");
  const Int head = int_pow(Int(2), m) + (m % 2 == 0 ? -1 : 1);
  const Rational scale(head * head * head, 27 * int_pow(Int(2), 3 * m - 1));
  RadicalElement rhs;
  for (long long k = -(3ll * m - 1); k <= 0; ++k) rhs += geometric_term(k);
  IdentityRecord rec;
  rec.id = "geom-desc-" + std::to_string(m);
  rec.source = "geometric series, descending partial sum";
  rec.claim = NestedClaim{3, RadicalElement(scale) * (cbrt2() - 1)};
  rec.rhs = rhs;
  return verify(std::move(rec));
}

IdentityRecord geom_limit() {
  // closed form of the descending series: 9^(-1/3) / (1 + 2^(-1/3))
  const RadicalElement sum =
      normalize_radical(Rational(1, 9), 3) *
      inverse(RadicalElement(1) + normalize_radical(Rational(1, 2), 3));
  IdentityRecord rec;
  rec.id = "geom-limit";
  rec.source = "geometric series, closed form of the full sum";
  rec.claim = NestedClaim{3, RadicalElement(Rational(2, 27)) * (cbrt2() - 1)};
  rec.rhs = sum;
  return verify(std::move(rec));
}

std::vector<IdentityRecord> equivalence_chain(
    const RadicalElement& s, const std::vector<unsigned>& degrees) {
  if (degrees.empty()) throw DomainError("degree list must be nonempty");
  std::vector<IdentityRecord> records;
  records.reserve(degrees.size());
  for (const unsigned d : degrees) {
    if (d == 1) {
      IdentityRecord rec;
      rec.id = "chain-1";
      rec.source = "equivalent-root chain";
      rec.claim = NestedClaim{1, s};
      rec.rhs = s;
      records.push_back(verify(std::move(rec)));
      continue;
    }
    IdentityRecord rec = make_power_identity(s, d, "chain-" + std::to_string(d));
    rec.source = "equivalent-root chain";
    records.push_back(std::move(rec));
  }
  return records;
}

std::size_t claim_term_count(const Claim& claim) {
  if (const auto* nested = std::get_if<NestedClaim>(&claim)) {
    return nested->radicand.term_count();
  }
  const auto& q = std::get<QuotientClaim>(claim);
  return q.numerator.term_count() + q.denominator.term_count();
}

std::size_t rhs_term_count(const RightSide& rhs) {
  if (const auto* s = std::get_if<RadicalElement>(&rhs)) {
    return s->term_count();
  }
  const auto& pair = std::get<QuotientPair>(rhs);
  return pair.numerator.term_count() + pair.denominator.term_count();
}

Interest interestingness(const IdentityRecord& rec) {
  if (rec.status != Status::VerifiedExact) {
    throw StateError("interestingness requires a verified-exact record");
  }
  Interest result;
  result.lhs_terms = claim_term_count(rec.claim);
  result.rhs_terms = rhs_term_count(rec.rhs);
  result.interesting = result.lhs_terms < result.rhs_terms;
  return result;
}

IdentityRecord verify_quotient(const QuotientForm& form,
                               const VerifyOptions& opts) {
  if (form.base < 1) throw DomainError("base must be a positive integer");
  if (form.surd_degree < 1 || form.root_degree < 1) {
    throw DomainError("degrees must be positive");
  }
  const RadicalElement r = normalize_radical(Rational(form.base),
                                             form.surd_degree);
  const RadicalElement a = RadicalElement(form.x) + RadicalElement(form.y) * r;
  const RadicalElement b = RadicalElement(form.x) - RadicalElement(form.y) * r;
  const RadicalElement c = RadicalElement(form.z) + RadicalElement(form.w) * r;
  const RadicalElement d = RadicalElement(form.z) - RadicalElement(form.w) * r;
  if (b.is_zero() || d.is_zero()) {
    throw DomainError("degenerate denominator in quotient form");
  }
  IdentityRecord rec;
  rec.id = "quotient-form";
  rec.source = "quotient shape";
  rec.claim = QuotientClaim{form.root_degree, a, b};
  rec.rhs = QuotientPair{c, d};
  VerifyOptions form_opts = opts;
  form_opts.even_sign_symmetric = true;
  return verify(std::move(rec), form_opts);
}

std::string format_claim(const Claim& claim) {
  if (const auto* nested = std::get_if<NestedClaim>(&claim)) {
    if (nested->degree == 1) return print_canonical(nested->radicand);
    return "root(" + std::to_string(nested->degree) + ", " +
           print_canonical(nested->radicand) + ")";
  }
  const auto& q = std::get<QuotientClaim>(claim);
  return "root(" + std::to_string(q.degree) + ", (" +
         print_canonical(q.numerator) + ") / (" +
         print_canonical(q.denominator) + "))";
}

std::string format_rhs(const RightSide& rhs) {
  if (const auto* s = std::get_if<RadicalElement>(&rhs)) {
    return print_canonical(*s);
  }
  const auto& pair = std::get<QuotientPair>(rhs);
  return "(" + print_canonical(pair.numerator) + ") / (" +
         print_canonical(pair.denominator) + ")";
}

}  // namespace surd
