#include "surd/element.hpp"

#include <algorithm>

#include "surd/errors.hpp"
#include "surd/factor.hpp"

namespace surd {

RadicalElement::RadicalElement(const Rational& value) {
  if (value != 0) terms_.emplace(RadicalMonomial::unit(), value);
}

RadicalElement RadicalElement::term(const Rational& coefficient,
                                    const RadicalMonomial& monomial) {
  RadicalElement e;
  if (coefficient != 0) e.terms_.emplace(monomial, coefficient);
  return e;
}

bool RadicalElement::is_rational() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

std::optional<Rational> RadicalElement::rational_value() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && terms_.begin()->first.is_unit()) {
    return terms_.begin()->second;
  }
  return std::nullopt;
}

Rational RadicalElement::coefficient(const RadicalMonomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void RadicalElement::add_term(const RadicalMonomial& m,
                              const Rational& coefficient) {
  if (coefficient == 0) return;
  const auto [it, inserted] = terms_.emplace(m, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

RadicalElement& RadicalElement::operator+=(const RadicalElement& other) {
  if (this == &other) {
    for (auto& [m, c] : terms_) c *= 2;
    return *this;
  }
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

RadicalElement& RadicalElement::operator-=(const RadicalElement& other) {
  if (this == &other) {
    terms_.clear();
    return *this;
  }
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

RadicalElement operator-(const RadicalElement& a) {
  RadicalElement r;
  for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, -c);
  return r;
}

RadicalElement operator*(const RadicalElement& a, const RadicalElement& b) {
  RadicalElement product;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Rational scale = ca * cb;
      MonomialBuilder builder;
      for (const auto& [p, e] : ma.factors()) builder.multiply(p, e);
      for (const auto& [p, e] : mb.factors()) builder.multiply(p, e);
      const RadicalMonomial m = std::move(builder).build(scale);
      product.add_term(m, scale);
    }
  }
  return product;
}

RadicalElement& RadicalElement::operator*=(const RadicalElement& other) {
  *this = *this * other;
  return *this;
}

RadicalElement normalize_radical(const Rational& radicand, unsigned degree) {
  if (degree == 0) throw DomainError("root degree must be at least 1");
  if (radicand <= 0) throw DomainError("radicand must be positive");
  Rational scale(1);
  MonomialBuilder builder;
  for (const auto& [p, e] : factor(numerator(radicand))) {
    builder.multiply(p, std::int64_t(e), degree);
  }
  for (const auto& [p, e] : factor(denominator(radicand))) {
    builder.multiply(p, -std::int64_t(e), degree);
  }
  const RadicalMonomial m = std::move(builder).build(scale);
  return RadicalElement::term(scale, m);
}

FieldSignature FieldSignature::of(const RadicalElement& e) {
  FieldSignature sig;
  for (const auto& [m, c] : e.terms()) {
    for (const auto& [p, exp] : m.factors()) sig.extend(p, exp.den);
  }
  return sig;
}

void FieldSignature::extend(std::uint64_t prime, unsigned degree) {
  if (degree <= 1 && components_.count(prime) == 0 && degree == 1) {
    // degree-1 extension adds nothing
    return;
  }
  if (degree == 0) throw DomainError("signature degree must be positive");
  auto [it, inserted] = components_.emplace(prime, degree);
  if (!inserted) it->second = std::lcm(it->second, degree);
}

void FieldSignature::merge(const FieldSignature& other) {
  for (const auto& [p, d] : other.components_) extend(p, d);
}

Int FieldSignature::dimension() const {
  Int dim = 1;
  for (const auto& [p, d] : components_) dim *= d;
  return dim;
}

std::vector<RadicalMonomial> FieldSignature::basis() const {
  std::vector<RadicalMonomial> result;
  result.push_back(RadicalMonomial::unit());
  for (const auto& [p, d] : components_) {
    std::vector<RadicalMonomial> extended;
    extended.reserve(result.size() * d);
    for (const auto& m : result) {
      for (unsigned k = 0; k < d; ++k) {
        Rational scale(1);
        MonomialBuilder builder;
        for (const auto& [q, e] : m.factors()) builder.multiply(q, e);
        if (k > 0) builder.multiply(p, std::int64_t(k), d);
        extended.push_back(std::move(builder).build(scale));
      }
    }
    result = std::move(extended);
  }
  std::sort(result.begin(), result.end(), MonomialLess{});
  return result;
}

namespace {

// Solves M x = rhs by rational Gaussian elimination with row pivoting.
std::vector<Rational> solve_linear(std::vector<std::vector<Rational>> m,
                                   std::vector<Rational> rhs) {
  const std::size_t n = rhs.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) throw Error("singular multiplication matrix");
    std::swap(m[pivot], m[col]);
    std::swap(rhs[pivot], rhs[col]);
    const Rational inv_pivot = Rational(1) / m[col][col];
    for (std::size_t j = col; j < n; ++j) m[col][j] *= inv_pivot;
    rhs[col] *= inv_pivot;
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || m[row][col] == 0) continue;
      const Rational f = m[row][col];
      for (std::size_t j = col; j < n; ++j) m[row][j] -= f * m[col][j];
      rhs[row] -= f * rhs[col];
    }
  }
  return rhs;
}

}  // namespace

RadicalElement inverse(const RadicalElement& a, unsigned dimension_bound) {
  if (a.is_zero()) throw DomainError("division by zero");
  if (const auto q = a.rational_value()) {
    return RadicalElement(Rational(1) / *q);
  }
  const FieldSignature sig = FieldSignature::of(a);
  const Int dim = sig.dimension();
  if (dim > dimension_bound) {
    throw ResourceError("field dimension " + to_string(dim) +
                        " exceeds inversion bound " +
                        std::to_string(dimension_bound));
  }
  const std::size_t n = dim.convert_to<std::size_t>();
  const std::vector<RadicalMonomial> basis = sig.basis();
  std::map<RadicalMonomial, std::size_t, MonomialLess> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(basis[i], i);

  // Column j holds the coordinates of a * basis[j].
  std::vector<std::vector<Rational>> matrix(n, std::vector<Rational>(n));
  for (std::size_t j = 0; j < n; ++j) {
    const RadicalElement product =
        a * RadicalElement::term(Rational(1), basis[j]);
    for (const auto& [m, c] : product.terms()) {
      matrix[index.at(m)][j] = c;
    }
  }
  std::vector<Rational> unit(n);
  unit[index.at(RadicalMonomial::unit())] = 1;

  const std::vector<Rational> coords = solve_linear(std::move(matrix), unit);
  RadicalElement result;
  for (std::size_t i = 0; i < n; ++i) {
    if (coords[i] != 0) result.add_term(basis[i], coords[i]);
  }
  return result;
}

RadicalElement pow(const RadicalElement& a, long long n,
                   unsigned dimension_bound) {
  if (n == 0) return RadicalElement(1);
  RadicalElement base = a;
  if (n < 0) base = inverse(a, dimension_bound);
  unsigned long long e = n < 0 ? -static_cast<unsigned long long>(n)
                               : static_cast<unsigned long long>(n);
  RadicalElement result(1);
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

}  // namespace surd
