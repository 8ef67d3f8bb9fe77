#pragma once

// Polynomial power sums a_1*alpha_1(x)^n + ... + a_d*alpha_d(x)^n and the
// hypothesis bundle ("required shape") the decision procedure relies on.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "powerdio/errors.hpp"
#include "powerdio/polynomial.hpp"
#include "powerdio/rational.hpp"

namespace powerdio {

struct PowerSumTerm {
  RationalPoly root;
  Rational coeff;

  friend bool operator==(const PowerSumTerm&, const PowerSumTerm&) = default;
};

/// Binet-form power sum. Coefficients are nonzero and roots are nonzero and
/// pairwise distinct; a single term is allowed so degenerate shapes stay
/// representable.
class PowerSumSpec {
 public:
  PowerSumSpec(std::uint64_t n, std::vector<PowerSumTerm> terms, std::string variable = "x")
      : n_(n), terms_(std::move(terms)), variable_(std::move(variable)) {
    if (n_ < 1) throw SpecError("power sum index must be at least 1");
    if (terms_.empty()) throw SpecError("power sum needs at least one term");
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      if (terms_[i].coeff == 0) throw SpecError("zero coefficient in term " + std::to_string(i + 1));
      if (terms_[i].root.is_zero()) throw SpecError("zero root in term " + std::to_string(i + 1));
      for (std::size_t j = 0; j < i; ++j) {
        if (terms_[j].root == terms_[i].root) {
          throw SpecError("terms " + std::to_string(j + 1) + " and " + std::to_string(i + 1) +
                          " share a characteristic root");
        }
      }
    }
  }

  std::uint64_t index() const { return n_; }
  const std::vector<PowerSumTerm>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  const std::string& variable() const { return variable_; }

  friend bool operator==(const PowerSumSpec&, const PowerSumSpec&) = default;

 private:
  std::uint64_t n_;
  std::vector<PowerSumTerm> terms_;
  std::string variable_;
};

inline RationalPoly expand(const PowerSumSpec& spec) {
  RationalPoly sum;
  for (const auto& t : spec.terms()) sum += t.coeff * pow(t.root, spec.index());
  return sum;
}

/// a*(c*x + d)^exponent + b
struct LinearPowerForm {
  Rational a;
  Rational c;
  Rational d;
  std::uint64_t exponent;
  Rational b;

  RationalPoly realize() const {
    return a * pow(RationalPoly{d, c}, exponent) + RationalPoly::constant(b);
  }
};

/// Writes f as a*(x - r)^N + b when possible, with the normalization c = 1.
inline std::optional<LinearPowerForm> linear_power_form(const RationalPoly& f) {
  if (f.degree() < 1) throw PreconditionError("linear_power_form needs a nonconstant polynomial");
  const auto n = static_cast<std::uint64_t>(f.degree());
  if (n == 1) return LinearPowerForm{f.leading(), Rational(1), Rational(0), 1, f[0]};

  // f' must be lc(f') * (x - r)^(N-1); the x^(N-2) coefficient of monic f'
  // equals -(N-1)*r.
  const RationalPoly df = monic(derivative(f));
  const Rational r = -df[n - 2] / Rational(static_cast<long long>(n - 1));
  LinearPowerForm form{f.leading(), Rational(1), -r, n, f(r)};
  if (form.realize() != f) return std::nullopt;
  return form;
}

struct ShapeCheck {
  std::string name;
  bool passed;
  std::string detail;
};

namespace shape_check {
inline constexpr std::string_view kTwoOrMoreRoots = "two-or-more-roots";
inline constexpr std::string_view kDominantRoot = "dominant-root";
inline constexpr std::string_view kAtMostOneConstantRoot = "at-most-one-constant-root";
inline constexpr std::string_view kNotForbiddenBinomial = "not-forbidden-binomial";
inline constexpr std::string_view kIndexAboveTwo = "index-above-two";
inline constexpr std::string_view kDominantDegreeAtLeastTwo = "dominant-degree-at-least-two";
}  // namespace shape_check

struct ShapeReport {
  bool ok = false;
  std::vector<ShapeCheck> checks;
  /// Degree of the highest-degree characteristic root.
  int dominant_degree = kZeroDegree;

  const ShapeCheck* find(std::string_view name) const {
    for (const auto& c : checks) {
      if (c.name == name) return &c;
    }
    return nullptr;
  }

  bool passed(std::string_view name) const {
    const ShapeCheck* c = find(name);
    return c != nullptr && c->passed;
  }

  /// Every check other than the index bound. The decision engine reports
  /// n > 2 as its own hypothesis.
  bool shape_ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const ShapeCheck& c) {
      return c.passed || c.name == shape_check::kIndexAboveTwo;
    });
  }

  std::vector<std::string> failures() const {
    std::vector<std::string> out;
    for (const auto& c : checks) {
      if (!c.passed) out.push_back(c.name);
    }
    return out;
  }
};

inline ShapeReport validate_shape(const PowerSumSpec& spec) {
  namespace sc = shape_check;
  ShapeReport report;
  const auto& terms = spec.terms();
  const std::uint64_t n = spec.index();

  const bool many = terms.size() >= 2;
  report.checks.push_back({std::string(sc::kTwoOrMoreRoots), many,
                           "d = " + std::to_string(terms.size())});

  std::vector<int> degrees;
  degrees.reserve(terms.size());
  for (const auto& t : terms) degrees.push_back(t.root.degree());
  std::sort(degrees.rbegin(), degrees.rend());
  const int top = degrees.front();
  report.dominant_degree = top;
  const bool dominant = degrees.size() == 1 || degrees[1] < top;
  report.checks.push_back(
      {std::string(sc::kDominantRoot), dominant,
       dominant ? "unique root of degree " + std::to_string(top)
                : "several roots share the maximal degree " + std::to_string(top)});

  const auto constants = std::count(degrees.begin(), degrees.end(), 0);
  report.checks.push_back({std::string(sc::kAtMostOneConstantRoot), constants <= 1,
                           std::to_string(constants) + " constant root(s)"});

  const RationalPoly g = expand(spec);
  bool not_forbidden = true;
  std::string forbidden_detail = "no representation a*L(x)^(k*n) + b";
  if (g.degree() < 1) {
    not_forbidden = false;
    forbidden_detail = "expansion is constant";
  } else if (const auto form = linear_power_form(g); form && form->exponent % n == 0) {
    not_forbidden = false;
    forbidden_detail = "expansion equals a*(x + d)^" + std::to_string(form->exponent) + " + b with a = " +
                       to_string(form->a) + ", d = " + to_string(form->d) + ", b = " + to_string(form->b);
  }
  report.checks.push_back({std::string(sc::kNotForbiddenBinomial), not_forbidden, forbidden_detail});

  report.checks.push_back({std::string(sc::kIndexAboveTwo), n > 2, "n = " + std::to_string(n)});

  const bool core = many && dominant && constants <= 1 && not_forbidden;
  const bool deg_ok = top >= 2;
  if (core && !deg_ok) {
    throw std::logic_error("required shape holds but the dominant root has degree below 2");
  }
  report.checks.push_back({std::string(sc::kDominantDegreeAtLeastTwo), deg_ok,
                           "deg alpha_1 = " + std::to_string(top)});

  report.ok = std::all_of(report.checks.begin(), report.checks.end(),
                          [](const ShapeCheck& c) { return c.passed; });
  return report;
}

}  // namespace powerdio
