#pragma once

// Dickson polynomials D_k(x, a), characterised by
//   D_k(u + a/u, a) = u^k + (a/u)^k.

#include <cstdint>
#include <span>
#include <utility>

#include "powerdio/errors.hpp"
#include "powerdio/polynomial.hpp"
#include "powerdio/rational.hpp"

namespace powerdio {

/// Built from D_0 = 2, D_1 = x, D_k = x*D_{k-1} - a*D_{k-2}.
inline RationalPoly dickson(std::uint64_t k, const Rational& a) {
  RationalPoly prev = RationalPoly::constant(2);
  if (k == 0) return prev;
  RationalPoly cur = RationalPoly::variable();
  const RationalPoly x = RationalPoly::variable();
  for (std::uint64_t i = 2; i <= k; ++i) {
    RationalPoly next = x * cur - a * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// Checks the defining identity of `candidate` as D_k(., a) at each sample u.
inline bool satisfies_functional_equation(const RationalPoly& candidate, std::uint64_t k, const Rational& a,
                                          std::span<const Rational> samples) {
  for (const Rational& u : samples) {
    if (u == 0) throw PreconditionError("functional equation samples must be nonzero");
    const Rational lhs = candidate(u + a / u);
    const Rational rhs = rational_pow(u, k) + rational_pow(a / u, k);
    if (lhs != rhs) return false;
  }
  return true;
}

inline bool check_functional_equation(std::uint64_t k, const Rational& a, std::span<const Rational> samples) {
  return satisfies_functional_equation(dickson(k, a), k, a, samples);
}

/// D_{kl}(x, a) == D_k(D_l(x, a), a^l) as polynomials.
inline bool check_composition(std::uint64_t k, std::uint64_t l, const Rational& a) {
  return dickson(k * l, a) == compose(dickson(k, rational_pow(a, l)), dickson(l, a));
}

}  // namespace powerdio
