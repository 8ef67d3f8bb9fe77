#pragma once

// Decision procedure for G_n(x) = H_m(y): with G_n indecomposable and both
// sides of the required shape, the equation has infinitely many rational
// solutions with a bounded denominator iff H_m = G_n o P for some P in Q[y].

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "powerdio/compfactor.hpp"
#include "powerdio/decompose.hpp"
#include "powerdio/errors.hpp"
#include "powerdio/polynomial.hpp"
#include "powerdio/powersum.hpp"
#include "powerdio/rational.hpp"

namespace powerdio {

enum class Verdict { Infinite, Finite, HypothesisViolation };

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Infinite: return "Infinite";
    case Verdict::Finite: return "Finite";
    case Verdict::HypothesisViolation: return "HypothesisViolation";
  }
  return "Unknown";
}

struct Decision {
  Verdict verdict = Verdict::HypothesisViolation;
  /// P with H = G o P; present iff verdict is Infinite.
  std::optional<RationalPoly> witness;
  /// Failed hypotheses; nonempty iff verdict is HypothesisViolation.
  std::vector<std::string> reasons;
  /// comp_factor status behind an Infinite or Finite verdict.
  std::optional<CompFactorStatus> path;
  /// The right-hand side is indecomposable too, so P is linear.
  bool target_indecomposable = false;
};

struct SolutionPair {
  Rational x;
  Rational y;
  /// z with z*x and z*y integral.
  Integer denominator_witness;

  friend bool operator==(const SolutionPair&, const SolutionPair&) = default;
};

namespace detail {

inline void add_shape_reasons(std::vector<std::string>& reasons, const ShapeReport& report, std::string_view who) {
  for (const auto& c : report.checks) {
    if (c.passed || c.name == shape_check::kIndexAboveTwo) continue;
    reasons.push_back("shape of " + std::string(who) + ": " + c.name + " fails (" + c.detail + ")");
  }
}

inline void add_indecomposability_reason(std::vector<std::string>& reasons, const RationalPoly& g) {
  if (g.degree() < 2) {
    reasons.push_back("G indecomposable: deg G = " + std::to_string(g.degree()) + " < 2");
    return;
  }
  if (auto dec = decompose_once(g)) {
    reasons.push_back("G indecomposable: G = outer o inner with deg inner = " +
                      std::to_string(dec->inner.degree()));
  }
}

inline Decision finish(const RationalPoly& g, const RationalPoly& h) {
  Decision out;
  const CompFactorOutcome cf = comp_factor(g, h);
  out.path = cf.status;
  out.target_indecomposable = h.degree() >= 2 && is_indecomposable(h);
  if (!cf.found()) {
    out.verdict = Verdict::Finite;
    return out;
  }
  out.verdict = Verdict::Infinite;
  out.witness = cf.witness;
  if (out.target_indecomposable && out.witness->degree() != 1) {
    throw std::logic_error("both sides indecomposable but the composition factor is not linear");
  }
  return out;
}

}  // namespace detail

inline Decision decide_infinite(const PowerSumSpec& g_spec, const PowerSumSpec& h_spec) {
  std::vector<std::string> reasons;
  const ShapeReport g_shape = validate_shape(g_spec);
  const ShapeReport h_shape = validate_shape(h_spec);
  detail::add_shape_reasons(reasons, g_shape, "G");
  detail::add_shape_reasons(reasons, h_shape, "H");
  if (g_spec.index() <= 2) reasons.push_back("n > 2 fails (n = " + std::to_string(g_spec.index()) + ")");
  if (h_spec.index() <= 2) reasons.push_back("m > 2 fails (m = " + std::to_string(h_spec.index()) + ")");
  const RationalPoly g = expand(g_spec);
  detail::add_indecomposability_reason(reasons, g);
  if (!reasons.empty()) return {Verdict::HypothesisViolation, std::nullopt, std::move(reasons), std::nullopt, false};
  return detail::finish(g, expand(h_spec));
}

/// Variant with the right-hand side an arbitrary h in Q[y], deg h > 4, not of
/// the form a*(c*y + d)^k + b.
inline Decision decide_vs_polynomial(const PowerSumSpec& g_spec, const RationalPoly& h) {
  std::vector<std::string> reasons;
  detail::add_shape_reasons(reasons, validate_shape(g_spec), "G");
  if (g_spec.index() <= 2) reasons.push_back("n > 2 fails (n = " + std::to_string(g_spec.index()) + ")");
  const RationalPoly g = expand(g_spec);
  detail::add_indecomposability_reason(reasons, g);
  if (h.degree() <= 4) reasons.push_back("deg h > 4 fails (deg h = " + std::to_string(h.degree()) + ")");
  if (h.degree() < 1) {
    reasons.push_back("h not of the shape a*(c*y + d)^k + b fails (h is constant)");
  } else if (auto form = linear_power_form(h)) {
    reasons.push_back("h not of the shape a*(c*y + d)^k + b fails (k = " + std::to_string(form->exponent) + ")");
  }
  if (!reasons.empty()) return {Verdict::HypothesisViolation, std::nullopt, std::move(reasons), std::nullopt, false};
  return detail::finish(g, h);
}

/// G(x) = a*(e*x + c)^n + b against H(y) = a*(f*y + d)^m + b, the shape the
/// main criterion excludes.
struct ExcludedFamily {
  Rational a, b, c, d, e, f;
  std::uint64_t n = 3;
  std::uint64_t m = 5;

  void check() const {
    if (a == 0 || e == 0 || f == 0) throw PreconditionError("excluded family needs a, e, f nonzero");
    if (n < 1 || m < 1) throw PreconditionError("excluded family needs n, m >= 1");
  }

  RationalPoly lhs() const { return a * pow(RationalPoly{c, e}, n) + RationalPoly::constant(b); }
  RationalPoly rhs() const { return a * pow(RationalPoly{d, f}, m) + RationalPoly::constant(b); }

  PowerSumSpec g_spec() const { return spec(RationalPoly{c, e}, n, "x"); }
  PowerSumSpec h_spec() const { return spec(RationalPoly{d, f}, m, "y"); }

 private:
  PowerSumSpec spec(RationalPoly root, std::uint64_t idx, std::string var) const {
    std::vector<PowerSumTerm> terms{{std::move(root), a}};
    if (b != 0) terms.push_back({RationalPoly::constant(1), b});
    return PowerSumSpec(idx, std::move(terms), std::move(var));
  }
};

/// x = (t^m - c)/e, y = (t^n - d)/f for each t. Every pair is checked exactly
/// and shares one denominator witness.
inline std::vector<SolutionPair> excluded_family_solutions(const ExcludedFamily& fam,
                                                           std::span<const Integer> t_values) {
  fam.check();
  const RationalPoly lhs = fam.lhs();
  const RationalPoly rhs = fam.rhs();
  std::vector<SolutionPair> out;
  Integer z = 1;
  for (const Integer& t : t_values) {
    const Rational tr(t);
    const Rational x = (rational_pow(tr, fam.m) - fam.c) / fam.e;
    const Rational y = (rational_pow(tr, fam.n) - fam.d) / fam.f;
    if (lhs(x) != rhs(y)) throw std::logic_error("excluded family pair does not satisfy its equation");
    z = boost::multiprecision::lcm(z, boost::multiprecision::lcm(denominator_of(x), denominator_of(y)));
    out.push_back({x, y, 0});
  }
  for (auto& s : out) s.denominator_witness = z;
  return out;
}

/// (P(t), t) for each t; each coordinate must clear z.
inline std::vector<SolutionPair> solution_family(const RationalPoly& p, std::span<const Rational> t_values,
                                                 const Integer& z) {
  if (z < 1) throw PreconditionError("denominator witness must be positive");
  const Rational zr(z);
  std::vector<SolutionPair> out;
  out.reserve(t_values.size());
  for (const Rational& t : t_values) {
    const Rational x = p(t);
    if (!is_integral(zr * x) || !is_integral(zr * t)) {
      throw PreconditionError("pair (" + to_string(x) + ", " + to_string(t) + ") does not clear z = " + z.str());
    }
    out.push_back({x, t, z});
  }
  return out;
}

/// Every (p/z, q/z) with |p|, |q| <= bound and f(p/z) = g(q/z), sorted by
/// (p, q). A finite probe, not a proof of finiteness.
inline std::vector<SolutionPair> brute_force_solutions(const RationalPoly& f, const RationalPoly& g,
                                                       std::int64_t z, std::int64_t bound) {
  if (z < 1) throw PreconditionError("z must be positive");
  if (bound < 0) throw PreconditionError("bound must be nonnegative");
  std::map<Rational, std::vector<std::int64_t>> by_value;
  for (std::int64_t q = -bound; q <= bound; ++q) by_value[g(Rational(q, z))].push_back(q);
  std::vector<SolutionPair> out;
  for (std::int64_t p = -bound; p <= bound; ++p) {
    const Rational x(p, z);
    const auto it = by_value.find(f(x));
    if (it == by_value.end()) continue;
    for (std::int64_t q : it->second) out.push_back({x, Rational(q, z), Integer(z)});
  }
  return out;
}

}  // namespace powerdio
