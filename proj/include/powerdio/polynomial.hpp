#pragma once

// Dense univariate polynomials over an exact field.
//
// Coefficients are stored in ascending degree with no trailing zeros, so the
// zero polynomial is the empty sequence and equality is plain vector equality.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "powerdio/errors.hpp"
#include "powerdio/rational.hpp"

namespace powerdio {

/// Degree reported for the zero polynomial.
inline constexpr int kZeroDegree = -1;

template <class Field>
class Polynomial {
 public:
  using value_type = Field;

  Polynomial() = default;
  explicit Polynomial(std::vector<Field> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<Field> coeffs) : coeffs_(coeffs) { trim(); }

  static Polynomial constant(const Field& c) { return Polynomial(std::vector<Field>{c}); }

  /// c * x^k
  static Polynomial monomial(const Field& c, std::size_t k) {
    std::vector<Field> v(k + 1, Field(0));
    v[k] = c;
    return Polynomial(std::move(v));
  }

  static Polynomial variable() { return monomial(Field(1), 1); }

  int degree() const { return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }

  /// Coefficient of x^i; zero beyond the degree.
  Field operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Field(0); }

  Field leading() const { return coeffs_.empty() ? Field(0) : coeffs_.back(); }

  std::span<const Field> coefficients() const { return coeffs_; }

  /// Horner evaluation.
  Field operator()(const Field& r) const {
    Field acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * r + *it;
    return acc;
  }

  Polynomial operator-() const {
    Polynomial out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
  }

  Polynomial& operator+=(const Polynomial& g) {
    if (g.coeffs_.size() > coeffs_.size()) coeffs_.resize(g.coeffs_.size(), Field(0));
    for (std::size_t i = 0; i < g.coeffs_.size(); ++i) coeffs_[i] += g.coeffs_[i];
    trim();
    return *this;
  }

  Polynomial& operator-=(const Polynomial& g) {
    if (g.coeffs_.size() > coeffs_.size()) coeffs_.resize(g.coeffs_.size(), Field(0));
    for (std::size_t i = 0; i < g.coeffs_.size(); ++i) coeffs_[i] -= g.coeffs_[i];
    trim();
    return *this;
  }

  Polynomial& operator*=(const Field& s) {
    if (s == 0) {
      coeffs_.clear();
      return *this;
    }
    for (auto& c : coeffs_) c *= s;
    return *this;
  }

  friend Polynomial operator+(Polynomial f, const Polynomial& g) { return f += g; }
  friend Polynomial operator-(Polynomial f, const Polynomial& g) { return f -= g; }
  friend Polynomial operator*(Polynomial f, const Field& s) { return f *= s; }
  friend Polynomial operator*(const Field& s, Polynomial f) { return f *= s; }

  friend Polynomial operator*(const Polynomial& f, const Polynomial& g) {
    if (f.is_zero() || g.is_zero()) return {};
    std::vector<Field> out(f.coeffs_.size() + g.coeffs_.size() - 1, Field(0));
    for (std::size_t i = 0; i < f.coeffs_.size(); ++i) {
      if (f.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < g.coeffs_.size(); ++j) out[i + j] += f.coeffs_[i] * g.coeffs_[j];
    }
    return Polynomial(std::move(out));
  }

  Polynomial& operator*=(const Polynomial& g) { return *this = *this * g; }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Field> coeffs_;
};

using RationalPoly = Polynomial<Rational>;

template <class Field>
Polynomial<Field> pow(Polynomial<Field> base, std::uint64_t k) {
  Polynomial<Field> result = Polynomial<Field>::constant(Field(1));
  while (k != 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k != 0) base *= base;
  }
  return result;
}

/// outer(inner(x)), by Horner's scheme over polynomials.
template <class Field>
Polynomial<Field> compose(const Polynomial<Field>& outer, const Polynomial<Field>& inner) {
  Polynomial<Field> acc;
  const auto c = outer.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc *= inner;
    acc += Polynomial<Field>::constant(*it);
  }
  return acc;
}

template <class Field>
Polynomial<Field> derivative(const Polynomial<Field>& f) {
  if (f.degree() < 1) return {};
  std::vector<Field> out(static_cast<std::size_t>(f.degree()));
  for (std::size_t i = 1; i <= out.size(); ++i) out[i - 1] = f[i] * Field(static_cast<long long>(i));
  return Polynomial<Field>(std::move(out));
}

template <class Field>
Field eval_at(const Polynomial<Field>& f, const Field& r) {
  return f(r);
}

template <class Field>
struct DivMod {
  Polynomial<Field> quotient;
  Polynomial<Field> remainder;
};

template <class Field>
DivMod<Field> divmod(const Polynomial<Field>& f, const Polynomial<Field>& g) {
  if (g.is_zero()) throw PreconditionError("polynomial division by zero");
  const int dg = g.degree();
  if (f.degree() < dg) return {{}, f};
  std::vector<Field> rem(f.coefficients().begin(), f.coefficients().end());
  std::vector<Field> quo(static_cast<std::size_t>(f.degree() - dg + 1), Field(0));
  const Field lead = g.leading();
  for (int k = f.degree() - dg; k >= 0; --k) {
    const Field q = rem[static_cast<std::size_t>(k + dg)] / lead;
    quo[static_cast<std::size_t>(k)] = q;
    if (q == 0) continue;
    for (int j = 0; j <= dg; ++j) rem[static_cast<std::size_t>(k + j)] -= q * g[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(dg));
  return {Polynomial<Field>(std::move(quo)), Polynomial<Field>(std::move(rem))};
}

/// f scaled to leading coefficient 1; zero stays zero.
template <class Field>
Polynomial<Field> monic(const Polynomial<Field>& f) {
  if (f.is_zero()) return f;
  return f * (Field(1) / f.leading());
}

}  // namespace powerdio
