#include "surd/parse.hpp"

#include <cctype>
#include <sstream>

#include "surd/errors.hpp"

namespace surd {
namespace {

struct Token {
  enum class Type {
    Number,
    Ident,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Comma,
    End,
  };
  Type type;
  std::size_t pos;
  std::string text;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    const std::size_t start = pos_;
    if (pos_ >= text_.size()) return {Token::Type::End, start, ""};
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t end = pos_;
      while (end < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[end]))) {
        ++end;
      }
      Token t{Token::Type::Number, start,
              std::string(text_.substr(start, end - start))};
      pos_ = end;
      return t;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t end = pos_;
      while (end < text_.size() &&
             std::isalpha(static_cast<unsigned char>(text_[end]))) {
        ++end;
      }
      Token t{Token::Type::Ident, start,
              std::string(text_.substr(start, end - start))};
      pos_ = end;
      return t;
    }
    ++pos_;
    switch (c) {
      case '+':
        return {Token::Type::Plus, start, "+"};
      case '-':
        return {Token::Type::Minus, start, "-"};
      case '*':
        return {Token::Type::Star, start, "*"};
      case '/':
        return {Token::Type::Slash, start, "/"};
      case '^':
        return {Token::Type::Caret, start, "^"};
      case '(':
        return {Token::Type::LParen, start, "("};
      case ')':
        return {Token::Type::RParen, start, ")"};
      case ',':
        return {Token::Type::Comma, start, ","};
      default:
        throw ParseError(std::string("unexpected character '") + c + "'",
                         start);
    }
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lexer_(text) { advance(); }

  ExprAst parse_full() {
    ExprAst e = parse_expr();
    expect(Token::Type::End, "unexpected trailing input");
    return e;
  }

 private:
  void advance() { current_ = lexer_.next(); }

  bool accept(Token::Type t) {
    if (current_.type != t) return false;
    advance();
    return true;
  }

  void expect(Token::Type t, const char* message) {
    if (current_.type != t) throw ParseError(message, current_.pos);
    advance();
  }

  ExprAst parse_expr() {
    ExprAst left = parse_term();
    while (current_.type == Token::Type::Plus ||
           current_.type == Token::Type::Minus) {
      const bool plus = current_.type == Token::Type::Plus;
      advance();
      ExprAst node;
      node.kind = plus ? ExprAst::Kind::Sum : ExprAst::Kind::Difference;
      node.children.push_back(std::move(left));
      node.children.push_back(parse_term());
      left = std::move(node);
    }
    return left;
  }

  ExprAst parse_term() {
    ExprAst left = parse_unary();
    while (current_.type == Token::Type::Star ||
           current_.type == Token::Type::Slash) {
      const bool star = current_.type == Token::Type::Star;
      advance();
      ExprAst node;
      node.kind = star ? ExprAst::Kind::Product : ExprAst::Kind::Quotient;
      node.children.push_back(std::move(left));
      node.children.push_back(parse_unary());
      left = std::move(node);
    }
    return left;
  }

  ExprAst parse_unary() {
    if (accept(Token::Type::Minus)) {
      ExprAst node;
      node.kind = ExprAst::Kind::Negate;
      node.children.push_back(parse_unary());
      return node;
    }
    return parse_postfix();
  }

  ExprAst parse_postfix() {
    ExprAst base = parse_atom();
    if (!accept(Token::Type::Caret)) return base;
    // x^(p/q): q >= 2 becomes root(q, x^p); q == 1 is an integer power
    expect(Token::Type::LParen, "expected '(' after '^'");
    const long long p = parse_signed_integer("expected exponent numerator");
    expect(Token::Type::Slash, "expected '/' in exponent");
    const long long q = parse_signed_integer("expected exponent denominator");
    expect(Token::Type::RParen, "expected ')' closing exponent");
    if (q < 1) {
      throw ParseError("exponent denominator must be a positive integer",
                       current_.pos);
    }
    ExprAst powered;
    if (p == 1) {
      powered = std::move(base);
    } else {
      powered.kind = ExprAst::Kind::IntPower;
      powered.exponent = p;
      powered.children.push_back(std::move(base));
    }
    if (q == 1) return powered;
    ExprAst root;
    root.kind = ExprAst::Kind::Root;
    root.degree = static_cast<unsigned>(q);
    root.children.push_back(std::move(powered));
    return root;
  }

  ExprAst parse_atom() {
    if (current_.type == Token::Type::Number) {
      return parse_rational();
    }
    if (current_.type == Token::Type::Ident) {
      const std::string name = current_.text;
      const std::size_t pos = current_.pos;
      advance();
      if (name == "sqrt") {
        expect(Token::Type::LParen, "expected '(' after sqrt");
        ExprAst node;
        node.kind = ExprAst::Kind::Root;
        node.degree = 2;
        node.children.push_back(parse_expr());
        expect(Token::Type::RParen, "expected ')' closing sqrt");
        return node;
      }
      if (name == "root") {
        expect(Token::Type::LParen, "expected '(' after root");
        const long long degree = parse_signed_integer("expected root degree");
        if (degree < 2) {
          throw ParseError("root degree must be an integer >= 2", pos);
        }
        expect(Token::Type::Comma, "expected ',' after root degree");
        ExprAst node;
        node.kind = ExprAst::Kind::Root;
        node.degree = static_cast<unsigned>(degree);
        node.children.push_back(parse_expr());
        expect(Token::Type::RParen, "expected ')' closing root");
        return node;
      }
      throw ParseError("unknown identifier '" + name + "'", pos);
    }
    if (accept(Token::Type::LParen)) {
      ExprAst inner = parse_expr();
      expect(Token::Type::RParen, "expected ')'");
      return inner;
    }
    throw ParseError("expected a number, root, sqrt, or '('", current_.pos);
  }

  // NUMBER ('/' NUMBER)? with the literal branch taken only when a
  // number directly follows the slash.
  ExprAst parse_rational() {
    const Token num = current_;
    advance();
    Int numerator(num.text);
    Int denominator(1);
    if (current_.type == Token::Type::Slash) {
      // lookahead: only a direct "int/int" is a literal
      Parser snapshot = *this;
      advance();
      if (current_.type == Token::Type::Number) {
        denominator = Int(current_.text);
        if (denominator == 0) {
          throw ParseError("zero denominator in rational literal",
                           current_.pos);
        }
        advance();
      } else {
        *this = std::move(snapshot);  // plain division, handled by term
      }
    }
    ExprAst node;
    node.kind = ExprAst::Kind::Number;
    node.literal = Rational(numerator, denominator);
    return node;
  }

  long long parse_signed_integer(const char* message) {
    bool negative = false;
    if (accept(Token::Type::Minus)) negative = true;
    if (current_.type != Token::Type::Number) {
      throw ParseError(message, current_.pos);
    }
    long long value = 0;
    try {
      value = std::stoll(current_.text);
    } catch (const std::exception&) {
      throw ParseError("integer out of range", current_.pos);
    }
    advance();
    return negative ? -value : value;
  }

  Lexer lexer_;
  Token current_;
};

}  // namespace

ExprAst parse(std::string_view text) { return Parser(text).parse_full(); }

std::string format_ast(const ExprAst& ast) {
  switch (ast.kind) {
    case ExprAst::Kind::Number:
      return to_string(ast.literal);
    case ExprAst::Kind::Root:
      return "root(" + std::to_string(ast.degree) + ", " +
             format_ast(ast.children[0]) + ")";
    case ExprAst::Kind::Sum:
      return "(" + format_ast(ast.children[0]) + " + " +
             format_ast(ast.children[1]) + ")";
    case ExprAst::Kind::Difference:
      return "(" + format_ast(ast.children[0]) + " - " +
             format_ast(ast.children[1]) + ")";
    case ExprAst::Kind::Product:
      return "(" + format_ast(ast.children[0]) + " * " +
             format_ast(ast.children[1]) + ")";
    case ExprAst::Kind::Quotient:
      return "(" + format_ast(ast.children[0]) + " / " +
             format_ast(ast.children[1]) + ")";
    case ExprAst::Kind::Negate:
      return "-" + format_ast(ast.children[0]);
    case ExprAst::Kind::IntPower:
      return format_ast(ast.children[0]) + "^(" +
             std::to_string(ast.exponent) + "/1)";
  }
  return "?";
}

namespace {

RadicalElement fold(const ExprAst& ast) {
  switch (ast.kind) {
    case ExprAst::Kind::Number:
      return RadicalElement(ast.literal);
    case ExprAst::Kind::Sum:
      return fold(ast.children[0]) + fold(ast.children[1]);
    case ExprAst::Kind::Difference:
      return fold(ast.children[0]) - fold(ast.children[1]);
    case ExprAst::Kind::Product:
      return fold(ast.children[0]) * fold(ast.children[1]);
    case ExprAst::Kind::Quotient: {
      const RadicalElement den = fold(ast.children[1]);
      if (den.is_zero()) throw DomainError("division by zero");
      return fold(ast.children[0]) * inverse(den);
    }
    case ExprAst::Kind::Negate:
      return -fold(ast.children[0]);
    case ExprAst::Kind::IntPower:
      return pow(fold(ast.children[0]), ast.exponent);
    case ExprAst::Kind::Root: {
      const RadicalElement body = fold(ast.children[0]);
      const auto q = body.rational_value();
      if (!q) {
        throw NotFlattenableError("nested root over a non-rational body: " +
                                  format_ast(ast));
      }
      if (*q == 0) return RadicalElement(0);
      if (*q < 0) {
        if (ast.degree % 2 == 0) {
          throw BranchError("even root of a negative value: " +
                            format_ast(ast));
        }
        return -normalize_radical(-*q, ast.degree);
      }
      return normalize_radical(*q, ast.degree);
    }
  }
  throw Error("unreachable AST kind");
}

}  // namespace

RadicalElement lower_element(const ExprAst& ast) { return fold(ast); }

LoweringResult lower(const ExprAst& ast) {
  if (ast.kind == ExprAst::Kind::Root) {
    const ExprAst& body = ast.children[0];
    if (body.kind == ExprAst::Kind::Quotient) {
      const RadicalElement num = fold(body.children[0]);
      const RadicalElement den = fold(body.children[1]);
      if (den.is_zero()) throw DomainError("division by zero");
      if (num.is_rational() && den.is_rational()) {
        return fold(ast);  // resolvable rational radicand
      }
      return QuotientClaim{ast.degree, num, den};
    }
    const RadicalElement radicand = fold(body);
    if (radicand.is_rational()) return fold(ast);
    return NestedClaim{ast.degree, radicand};
  }
  return fold(ast);
}

std::string print_canonical(const RadicalElement& e) {
  if (e.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : e.terms()) {
    const bool negative = c < 0;
    if (first) {
      if (negative) out += "-";
      first = false;
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational mag = abs(c);
    std::string factors;
    if (mag != 1 || m.is_unit()) factors = to_string(mag);
    for (const auto& [p, exp] : m.factors()) {
      if (!factors.empty()) factors += " * ";
      factors += std::to_string(p) + "^(" + std::to_string(exp.num) + "/" +
                 std::to_string(exp.den) + ")";
    }
    out += factors;
  }
  return out;
}

std::string print_latex(const RadicalElement& e) {
  if (e.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : e.terms()) {
    const bool negative = c < 0;
    if (first) {
      if (negative) out += "-";
      first = false;
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational mag = abs(c);
    std::string factors;
    if (mag != 1 || m.is_unit()) {
      if (is_integer(mag)) {
        factors = to_string(mag);
      } else {
        factors = "\\frac{" + to_string(numerator(mag)) + "}{" +
                  to_string(denominator(mag)) + "}";
      }
    }
    for (const auto& [p, exp] : m.factors()) {
      if (!factors.empty()) factors += " ";
      const Int radicand = int_pow(Int(p), exp.num);
      if (exp.den == 2) {
        factors += "\\sqrt{" + to_string(radicand) + "}";
      } else {
        factors += "\\sqrt[" + std::to_string(exp.den) + "]{" +
                   to_string(radicand) + "}";
      }
    }
    out += factors;
  }
  return out;
}

}  // namespace surd
