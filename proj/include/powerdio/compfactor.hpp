#pragma once

// Solve H = G o P for P by comparing coefficients from the top down.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "powerdio/errors.hpp"
#include "powerdio/polynomial.hpp"
#include "powerdio/rational.hpp"

namespace powerdio {

enum class CompFactorStatus { Found, NoDegree, NoLeadingRoot, CoefficientContradiction };

inline std::string_view to_string(CompFactorStatus s) {
  switch (s) {
    case CompFactorStatus::Found: return "Found";
    case CompFactorStatus::NoDegree: return "NoDegree";
    case CompFactorStatus::NoLeadingRoot: return "NoLeadingRoot";
    case CompFactorStatus::CoefficientContradiction: return "CoefficientContradiction";
  }
  return "Unknown";
}

struct CompFactorOutcome {
  CompFactorStatus status;
  /// Set exactly when status is Found; compose(G, *witness) == H.
  std::optional<RationalPoly> witness;

  bool found() const { return status == CompFactorStatus::Found; }
};

namespace detail {

/// One leading-coefficient branch. Each unknown p_{r-j} enters the x^(N-j)
/// coefficient of G o P linearly with multiplier deg G * lc(G) * s^(deg G - 1)
/// and no lower unknown reaches that coefficient.
inline std::optional<RationalPoly> comp_factor_branch(const RationalPoly& g, const RationalPoly& h,
                                                      std::size_t r, const Rational& s) {
  const auto deg_g = static_cast<std::uint64_t>(g.degree());
  const auto top = static_cast<std::size_t>(h.degree());
  const Rational multiplier =
      Rational(static_cast<long long>(deg_g)) * g.leading() * rational_pow(s, deg_g - 1);
  std::vector<Rational> p(r + 1, Rational(0));
  p[r] = s;
  for (std::size_t j = 1; j <= r; ++j) {
    const RationalPoly partial = compose(g, RationalPoly(p));
    const Rational gap = h[top - j] - partial[top - j];
    p[r - j] = gap / multiplier;
  }
  RationalPoly candidate(std::move(p));
  if (compose(g, candidate) != h) return std::nullopt;
  return candidate;
}

}  // namespace detail

inline CompFactorOutcome comp_factor(const RationalPoly& g, const RationalPoly& h) {
  if (g.degree() < 1 || h.degree() < 1) throw PreconditionError("comp_factor needs nonconstant G and H");
  if (h.degree() % g.degree() != 0) return {CompFactorStatus::NoDegree, std::nullopt};
  const auto r = static_cast<std::size_t>(h.degree() / g.degree());

  // Positive root first, so it wins when both signs work.
  const auto roots = rational_kth_root(h.leading() / g.leading(), static_cast<unsigned>(g.degree()));
  if (roots.empty()) return {CompFactorStatus::NoLeadingRoot, std::nullopt};
  for (const Rational& s : roots) {
    if (auto p = detail::comp_factor_branch(g, h, r, s)) return {CompFactorStatus::Found, std::move(p)};
  }
  return {CompFactorStatus::CoefficientContradiction, std::nullopt};
}

}  // namespace powerdio
