#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "surd/element.hpp"

namespace surd {

// AST for the textual expression language.  Rational literals are
// nonnegative; signs come from negation nodes.  Exponent sugar x^(p/q)
// is desugared at parse time, so the only nesting construct that
// survives is integer-degree root().
struct ExprAst {
  enum class Kind {
    Number,      // literal; no children
    Root,        // degree >= 2; one child
    Sum,         // two children
    Difference,  // two children
    Product,     // two children
    Quotient,    // two children
    Negate,      // one child
    IntPower,    // integer exponent; one child
  };

  Kind kind = Kind::Number;
  Rational literal;
  unsigned degree = 0;
  long long exponent = 0;
  std::vector<ExprAst> children;
};

// Throws ParseError (with position) on malformed input.
ExprAst parse(std::string_view text);

// Renders an AST back to expression syntax (used in error messages).
std::string format_ast(const ExprAst& ast);

struct NestedClaim {
  unsigned degree;
  RadicalElement radicand;
};

struct QuotientClaim {
  unsigned degree;
  RadicalElement numerator;
  RadicalElement denominator;
};

using LoweringResult = std::variant<RadicalElement, NestedClaim, QuotientClaim>;

// Folds all arithmetic over flattenable subtrees into elements (roots of
// positive rationals via normalize_radical, quotients via inversion).
// A single outermost root of a non-rational body becomes a NestedClaim,
// or a QuotientClaim when that body is written as a quotient.  Deeper
// unresolvable roots raise NotFlattenableError naming the subtree.
LoweringResult lower(const ExprAst& ast);

// Full fold to an element; unresolvable roots anywhere are an error.
RadicalElement lower_element(const ExprAst& ast);

// Deterministic canonical rendering; parses and lowers back to the same
// element.  Monomials are ordered by grade, then prime, then exponent.
std::string print_canonical(const RadicalElement& e);

std::string print_latex(const RadicalElement& e);

}  // namespace surd
