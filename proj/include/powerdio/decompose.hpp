#pragma once

// Functional decomposition f = g o h over Q.
//
// In characteristic 0 a right factor of degree d, normalized to be monic with
// zero constant term, is unique when it exists: its coefficients are the top
// of the e-th root (e = deg f / d) of f / lc(f) as a series in 1/x. The outer
// factor is then read off the h-adic expansion of f.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "powerdio/errors.hpp"
#include "powerdio/polynomial.hpp"
#include "powerdio/rational.hpp"

namespace powerdio {

struct Decomposition {
  RationalPoly outer;
  /// Monic, zero constant term.
  RationalPoly inner;
};

/// g with f = g o h, when every remainder of the h-adic expansion
/// f = sum r_i * h^i is constant.
inline std::optional<RationalPoly> left_factor(const RationalPoly& f, const RationalPoly& h) {
  if (h.degree() < 1) throw PreconditionError("left_factor needs a nonconstant h");
  std::vector<Rational> g;
  RationalPoly rest = f;
  while (!rest.is_zero()) {
    auto [q, r] = divmod(rest, h);
    if (r.degree() > 0) return std::nullopt;
    g.push_back(r[0]);
    rest = std::move(q);
  }
  return RationalPoly(std::move(g));
}

namespace detail {

/// Monic degree-d candidate from the leading d coefficients of f.
inline RationalPoly right_factor_candidate(const RationalPoly& f, std::size_t d) {
  const auto n = static_cast<std::size_t>(f.degree());
  const Rational e = Rational(static_cast<long long>(n / d));
  const Rational lead = f.leading();
  // b_i: coefficient of t^i in f / (lc * x^n) with t = 1/x; b_0 = 1.
  std::vector<Rational> b(d);
  for (std::size_t i = 0; i < d; ++i) b[i] = f[n - i] / lead;
  // a = b^(1/e) via k*a_k = sum_{j=1..k} (j/e - (k - j)) * b_j * a_{k-j}.
  std::vector<Rational> a(d);
  a[0] = 1;
  for (std::size_t k = 1; k < d; ++k) {
    Rational acc = 0;
    for (std::size_t j = 1; j <= k; ++j) {
      const Rational weight = Rational(static_cast<long long>(j)) / e - Rational(static_cast<long long>(k - j));
      acc += weight * b[j] * a[k - j];
    }
    a[k] = acc / Rational(static_cast<long long>(k));
  }
  // h = sum_{k<d} a_k x^(d-k); the x^0 coefficient is left at zero.
  std::vector<Rational> h(d + 1, Rational(0));
  for (std::size_t k = 0; k < d; ++k) h[d - k] = a[k];
  return RationalPoly(std::move(h));
}

inline void check_right_factor_args(const RationalPoly& f, int d) {
  if (f.degree() < 1) throw PreconditionError("right_factor needs a nonconstant f");
  if (d < 2 || d >= f.degree() || f.degree() % d != 0) {
    throw PreconditionError("right_factor needs 2 <= d < deg f with d | deg f");
  }
}

inline std::optional<Decomposition> try_inner_degree(const RationalPoly& f, int d) {
  RationalPoly h = right_factor_candidate(f, static_cast<std::size_t>(d));
  auto g = left_factor(f, h);
  if (!g) return std::nullopt;
  return Decomposition{std::move(*g), std::move(h)};
}

}  // namespace detail

/// The normalized right factor of degree d, or nothing if f has no
/// decomposition with inner degree d.
inline std::optional<RationalPoly> right_factor(const RationalPoly& f, int d) {
  detail::check_right_factor_args(f, d);
  auto dec = detail::try_inner_degree(f, d);
  if (!dec) return std::nullopt;
  return std::move(dec->inner);
}

/// First decomposition by increasing inner degree; nothing means f is indecomposable.
inline std::optional<Decomposition> decompose_once(const RationalPoly& f) {
  if (f.degree() < 2) throw PreconditionError("decompose_once needs deg f >= 2");
  const int n = f.degree();
  for (int d = 2; d < n; ++d) {
    if (n % d != 0) continue;
    if (auto dec = detail::try_inner_degree(f, d)) return dec;
  }
  return std::nullopt;
}

inline bool is_indecomposable(const RationalPoly& f) {
  if (f.degree() < 2) throw PreconditionError("is_indecomposable needs deg f >= 2");
  return !decompose_once(f).has_value();
}

}  // namespace powerdio
