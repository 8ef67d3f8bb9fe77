#pragma once

// Text syntax for polynomials and power sums.
//
//   expr   := term (('+' | '-') term)*
//   term   := ['-'] factor ('*' factor)*
//   factor := base ('^' uint)?
//   base   := rational | var | '(' expr ')'
//
// Multiplication is always explicit. A power sum is written
//   n=<int>; <coeff>*(<root-expr>); <coeff>*(<root-expr>); ...
// with <coeff> an optionally negated rational literal.

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "powerdio/errors.hpp"
#include "powerdio/polynomial.hpp"
#include "powerdio/powersum.hpp"
#include "powerdio/rational.hpp"

namespace powerdio {

struct ParsedPoly {
  RationalPoly poly;
  /// Empty when the expression never mentions a variable.
  std::string variable;
};

namespace detail {

inline constexpr std::size_t kMaxNesting = 200;
inline constexpr std::uint64_t kMaxExponent = 4096;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  RationalPoly expression() {
    RationalPoly acc = term();
    for (;;) {
      skip_space();
      const char c = peek();
      if (c == '+') {
        ++pos_;
        acc += term();
      } else if (c == '-') {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  /// Optionally negated rational literal.
  Rational signed_rational() {
    skip_space();
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
      skip_space();
    }
    if (!is_digit(peek())) fail("expected a rational number");
    Rational r = rational_literal();
    return negative ? Rational(-r) : r;
  }

  Integer integer_literal() {
    skip_space();
    if (!is_digit(peek())) fail("expected an integer");
    return digits();
  }

  void expect(char c) {
    skip_space();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  std::size_t position() {
    skip_space();
    return pos_;
  }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(pos_, message); }

  const std::string& variable() const { return variable_; }

  void seek(std::size_t pos) { pos_ = pos; }

 private:
  static bool is_digit(char c) { return c >= '0' && c <= '9'; }
  static bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  static bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  Integer digits() {
    const std::size_t start = pos_;
    while (is_digit(peek())) ++pos_;
    // Strip leading zeros: the Integer string constructor reads "0..." as octal.
    std::size_t first = start;
    while (first + 1 < pos_ && text_[first] == '0') ++first;
    return Integer(std::string(text_.substr(first, pos_ - first)));
  }

  Rational rational_literal() {
    Integer num = digits();
    if (peek() != '/') return Rational(num);
    ++pos_;
    if (!is_digit(peek())) fail("expected denominator digits after '/'");
    const std::size_t den_at = pos_;
    Integer den = digits();
    if (den == 0) throw ParseError(den_at, "zero denominator");
    return Rational(num, den);
  }

  RationalPoly term() {
    skip_space();
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    RationalPoly acc = factor();
    while (accept('*')) acc *= factor();
    return negative ? -acc : acc;
  }

  RationalPoly factor() {
    RationalPoly b = base();
    skip_space();
    if (peek() != '^') return b;
    ++pos_;
    skip_space();
    if (!is_digit(peek())) fail("exponent must be a nonnegative integer literal");
    const std::size_t exp_at = pos_;
    const Integer e = digits();
    if (e > kMaxExponent) throw ParseError(exp_at, "exponent too large");
    return pow(std::move(b), static_cast<std::uint64_t>(e));
  }

  RationalPoly base() {
    skip_space();
    const char c = peek();
    if (is_digit(c)) return RationalPoly::constant(rational_literal());
    if (is_ident_start(c)) {
      const std::size_t start = pos_;
      while (is_ident_char(peek())) ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      if (variable_.empty()) {
        variable_ = name;
      } else if (variable_ != name) {
        throw ParseError(start, "second variable '" + name + "' in a univariate expression");
      }
      return RationalPoly::variable();
    }
    if (c == '(') {
      if (++depth_ > kMaxNesting) fail("parentheses nested too deeply");
      ++pos_;
      RationalPoly inner = expression();
      expect(')');
      --depth_;
      return inner;
    }
    if (c == '\0') fail("unexpected end of input");
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t depth_ = 0;
  std::string variable_;
};

}  // namespace detail

inline ParsedPoly parse_poly_detailed(std::string_view text) {
  detail::Parser p(text);
  RationalPoly f = p.expression();
  if (!p.at_end()) p.fail("unexpected trailing input");
  return {std::move(f), p.variable()};
}

inline RationalPoly parse_poly(std::string_view text) { return parse_poly_detailed(text).poly; }

/// Optionally negated literal such as "-3/4" or "12".
inline Rational parse_rational(std::string_view text) {
  detail::Parser p(text);
  const Rational r = p.signed_rational();
  if (!p.at_end()) p.fail("unexpected trailing input");
  return r;
}

/// Parses `n=<int>; <coeff>*(<expr>); ...`. Construction invariants of
/// PowerSumSpec (nonzero coefficients, distinct nonzero roots) surface as
/// ParseErrors positioned at the offending term.
inline PowerSumSpec parse_powersum(std::string_view text) {
  detail::Parser p(text);
  const std::size_t n_at = p.position();
  if (text.substr(n_at, 1) != "n") p.fail("expected 'n=' index");
  // Step past 'n' by hand; the expression grammar would read it as a variable.
  p.seek(n_at + 1);
  p.expect('=');
  const std::size_t idx_at = p.position();
  const Integer idx = p.integer_literal();
  if (idx < 1) throw ParseError(idx_at, "index n must be at least 1");
  if (idx > detail::kMaxExponent) throw ParseError(idx_at, "index n too large");
  const auto n = static_cast<std::uint64_t>(idx);

  std::vector<PowerSumTerm> terms;
  while (p.accept(';')) {
    if (p.at_end()) break;
    const std::size_t term_at = p.position();
    const Rational coeff = p.signed_rational();
    if (coeff == 0) throw ParseError(term_at, "zero coefficient");
    p.expect('*');
    p.expect('(');
    const std::size_t root_at = p.position();
    RationalPoly root = p.expression();
    p.expect(')');
    if (root.is_zero()) throw ParseError(root_at, "zero characteristic root");
    for (const auto& t : terms) {
      if (t.root == root) throw ParseError(root_at, "duplicate characteristic root");
    }
    terms.push_back({std::move(root), coeff});
  }
  if (!p.at_end()) p.fail("expected ';' between terms");
  if (terms.empty()) p.fail("power sum needs at least one term");
  return PowerSumSpec(n, std::move(terms), p.variable().empty() ? "x" : p.variable());
}

namespace detail {

inline std::string format_coeff_abs(const Rational& c) { return to_string(c < 0 ? Rational(-c) : c); }

}  // namespace detail

/// Descending-degree rendering such as "x^6 + x^3 + 3*x^2 + 3*x + 1".
inline std::string format_poly(const RationalPoly& f, std::string_view var = "x") {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int i = f.degree(); i >= 0; --i) {
    const Rational c = f[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const bool negative = c < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const bool unit = (c == 1 || c == -1);
    std::string mono;
    if (i >= 1) {
      mono = std::string(var);
      if (i >= 2) mono += "^" + std::to_string(i);
    }
    if (i == 0) {
      out += detail::format_coeff_abs(c);
    } else if (unit) {
      out += mono;
    } else {
      out += detail::format_coeff_abs(c) + "*" + mono;
    }
  }
  return out;
}

/// Inverse of parse_powersum, using the spec's recorded variable.
inline std::string format_powersum(const PowerSumSpec& spec) {
  std::string out = "n=" + std::to_string(spec.index());
  for (const auto& t : spec.terms()) {
    out += "; " + to_string(t.coeff) + "*(" + format_poly(t.root, spec.variable()) + ")";
  }
  return out;
}

}  // namespace powerdio
