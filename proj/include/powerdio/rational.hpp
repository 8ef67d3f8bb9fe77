#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "powerdio/errors.hpp"

namespace powerdio {

using Integer = boost::multiprecision::cpp_int;
/// Always held in lowest terms with a positive denominator; zero is 0/1.
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator_of(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denominator_of(const Rational& r) { return boost::multiprecision::denominator(r); }

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw PreconditionError("rational with zero denominator");
  return Rational(num, den);
}

inline bool is_integral(const Rational& r) { return denominator_of(r) == 1; }

inline Rational rational_pow(Rational base, std::uint64_t k) {
  Rational result = 1;
  while (k != 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k != 0) base *= base;
  }
  return result;
}

/// Exact "p/q" rendering, or "p" when q = 1.
inline std::string to_string(const Rational& r) { return r.str(); }

/// Always "p/q", including q = 1.
inline std::string to_fraction_string(const Rational& r) {
  return numerator_of(r).str() + "/" + denominator_of(r).str();
}

/// Largest s >= 0 with s^k <= n, for n >= 0 and k >= 1.
inline Integer integer_floor_root(const Integer& n, unsigned k) {
  if (n < 0) throw PreconditionError("integer_floor_root of a negative number");
  if (k == 0) throw PreconditionError("integer_floor_root with k = 0");
  if (n < 2 || k == 1) return n;
  // Newton from above: start at 2^ceil(bits/k), which is >= the root.
  const auto bits = boost::multiprecision::msb(n) + 1;
  Integer x = Integer(1) << ((bits + k - 1) / k);
  for (;;) {
    Integer xk1 = boost::multiprecision::pow(x, k - 1);
    Integer next = ((k - 1) * x + n / xk1) / k;
    if (next >= x) break;
    x = next;
  }
  return x;
}

/// s with s^k = n exactly, for n >= 0.
inline std::optional<Integer> exact_integer_root(const Integer& n, unsigned k) {
  Integer s = integer_floor_root(n, k);
  if (boost::multiprecision::pow(s, k) == n) return s;
  return std::nullopt;
}

/// Every rational s with s^k = r. Empty, one root, or {s, -s} with s > 0 first.
inline std::vector<Rational> rational_kth_root(const Rational& r, unsigned k) {
  if (k == 0) throw PreconditionError("rational_kth_root requires k >= 1");
  if (r == 0) return {Rational(0)};
  const bool negative = r < 0;
  if (negative && k % 2 == 0) return {};
  Integer num = numerator_of(r);
  if (negative) num = -num;
  const auto num_root = exact_integer_root(num, k);
  if (!num_root) return {};
  const auto den_root = exact_integer_root(denominator_of(r), k);
  if (!den_root) return {};
  Rational s(*num_root, *den_root);
  if (negative) return {-s};
  if (k % 2 == 0) return {s, -s};
  return {s};
}

}  // namespace powerdio
