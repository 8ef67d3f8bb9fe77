#pragma once

// The five kinds of standard pairs over Q, and a checker for factorizations
// f = phi o f1 o lambda.

#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <utility>

#include "powerdio/dickson.hpp"
#include "powerdio/errors.hpp"
#include "powerdio/polynomial.hpp"
#include "powerdio/rational.hpp"

namespace powerdio {

enum class PairKind { First = 1, Second, Third, Fourth, Fifth };

inline std::string_view to_string(PairKind kind) {
  switch (kind) {
    case PairKind::First: return "first";
    case PairKind::Second: return "second";
    case PairKind::Third: return "third";
    case PairKind::Fourth: return "fourth";
    case PairKind::Fifth: return "fifth";
  }
  return "unknown";
}

/// Union of all kind parameters; each kind reads only the fields it needs.
struct PairParams {
  std::uint64_t k = 1;
  std::uint64_t l = 1;
  Rational a = 1;
  Rational b = 1;
  RationalPoly p = RationalPoly::constant(1);
};

struct StandardPair {
  PairKind kind;
  PairParams params;
  RationalPoly f1;
  RationalPoly g1;
  /// (f1, g1) are exchanged relative to the canonical order.
  bool swapped = false;
};

namespace detail {

inline void require(bool cond, PairKind kind, const std::string& what) {
  if (!cond) throw SideConditionError(std::string(to_string(kind)) + " kind: " + what);
}

/// (f1, g1) in canonical order, after checking side conditions.
inline std::pair<RationalPoly, RationalPoly> realize_pair(PairKind kind, const PairParams& pr) {
  const RationalPoly x = RationalPoly::variable();
  switch (kind) {
    case PairKind::First: {
      require(pr.k >= 1, kind, "k >= 1 required");
      require(pr.l < pr.k, kind, "0 <= l < k required");
      require(std::gcd(pr.k, pr.l) == 1, kind, "gcd(k, l) = 1 required");
      require(pr.a != 0, kind, "a must be nonzero");
      require(!pr.p.is_zero(), kind, "p must be nonzero");
      require(pr.l + static_cast<std::uint64_t>(pr.p.degree()) > 0, kind, "l + deg p > 0 required");
      return {pow(x, pr.k), pr.a * pow(x, pr.l) * pow(pr.p, pr.k)};
    }
    case PairKind::Second: {
      require(pr.a != 0, kind, "a must be nonzero");
      require(pr.b != 0, kind, "b must be nonzero");
      require(!pr.p.is_zero(), kind, "p must be nonzero");
      return {pow(x, 2), RationalPoly{pr.b, 0, pr.a} * pow(pr.p, 2)};
    }
    case PairKind::Third: {
      require(pr.k >= 1 && pr.l >= 1, kind, "k, l >= 1 required");
      require(std::gcd(pr.k, pr.l) == 1, kind, "gcd(k, l) = 1 required");
      require(pr.a != 0, kind, "a must be nonzero");
      return {dickson(pr.k, rational_pow(pr.a, pr.l)), dickson(pr.l, rational_pow(pr.a, pr.k))};
    }
    case PairKind::Fourth: {
      require(pr.k >= 1 && pr.l >= 1, kind, "k, l >= 1 required");
      require(std::gcd(pr.k, pr.l) == 2, kind, "gcd(k, l) = 2 required");
      require(pr.a != 0, kind, "a must be nonzero");
      require(pr.b != 0, kind, "b must be nonzero");
      // k and l are even here, so a^(-k/2) and b^(-l/2) stay in Q.
      const Rational fa = rational_pow(Rational(1) / pr.a, pr.k / 2);
      const Rational fb = rational_pow(Rational(1) / pr.b, pr.l / 2);
      return {fa * dickson(pr.k, pr.a), -fb * dickson(pr.l, pr.b)};
    }
    case PairKind::Fifth: {
      require(pr.a != 0, kind, "a must be nonzero");
      return {pow(RationalPoly{-1, 0, pr.a}, 3), RationalPoly{0, 0, 0, -4, 3}};
    }
  }
  throw SideConditionError("unknown standard pair kind");
}

}  // namespace detail

inline StandardPair make_standard_pair(PairKind kind, PairParams params, bool swapped = false) {
  auto [f1, g1] = detail::realize_pair(kind, params);
  if (swapped) std::swap(f1, g1);
  return {kind, std::move(params), std::move(f1), std::move(g1), swapped};
}

/// Re-derives the pair from its stored parameters and compares.
inline bool revalidate(const StandardPair& pair) {
  try {
    const StandardPair again = make_standard_pair(pair.kind, pair.params, pair.swapped);
    return again.f1 == pair.f1 && again.g1 == pair.g1;
  } catch (const SideConditionError&) {
    return false;
  }
}

inline bool verify_bt_factorization(const RationalPoly& f, const RationalPoly& phi, const RationalPoly& f1,
                                    const RationalPoly& lam) {
  if (lam.degree() != 1) throw PreconditionError("lambda must be linear");
  return f == compose(phi, compose(f1, lam));
}

}  // namespace powerdio
