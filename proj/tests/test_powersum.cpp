#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "powerdio/parse.hpp"
#include "powerdio/powersum.hpp"
#include "test_support.hpp"

using namespace powerdio;
using powerdio::testing::Gen;
using powerdio::testing::P;

namespace {

const RationalPoly kG3 = P({1, 3, 3, 1, 0, 0, 1});
const RationalPoly kH3 = P({1, 0, -6, 0, 15, 0, -19, 0, 15, 0, -6, 0, 1});

// Independent of linear_power_form: f' is c(x - r)^(N-1) iff
// deg gcd(f', f'') = N - 2.
RationalPoly gcd(RationalPoly a, RationalPoly b) {
  while (!b.is_zero()) {
    RationalPoly r = divmod(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

bool derivative_is_linear_power(const RationalPoly& f) {
  const RationalPoly d1 = derivative(f);
  if (d1.degree() <= 1) return true;
  return gcd(d1, derivative(d1)).degree() == d1.degree() - 1;
}

RationalPoly integrate(const RationalPoly& f, const Rational& constant) {
  std::vector<Rational> out{constant};
  for (std::size_t i = 0; i < f.coefficients().size(); ++i) out.push_back(f[i] / Rational(static_cast<long long>(i + 1)));
  return RationalPoly(std::move(out));
}

}  // namespace

TEST(Expand, Examples) {
  EXPECT_EQ(expand(parse_powersum("n=3; 1*(x^2); 1*(x+1)")), kG3);
  const PowerSumSpec h3(3, {{P({1, 0, -2, 0, 1}), 1}, {P({0, 0, 1}), 1}}, "y");
  EXPECT_EQ(expand(h3), kH3);
  EXPECT_EQ(expand(PowerSumSpec(1, {{P({0, 1}), 1}})), P({0, 1}));
}

TEST(PowerSumSpec, ConstructionInvariants) {
  EXPECT_THROW(PowerSumSpec(0, {{P({0, 1}), 1}}), SpecError);
  EXPECT_THROW(PowerSumSpec(3, {}), SpecError);
  EXPECT_THROW(PowerSumSpec(3, {{P({0, 1}), 0}}), SpecError);
  EXPECT_THROW(PowerSumSpec(3, {{RationalPoly{}, 1}}), SpecError);
  EXPECT_THROW(PowerSumSpec(3, {{P({0, 1}), 1}, {P({0, 1}), 2}}), SpecError);
}

TEST(ValidateShape, G3IsOfRequiredShape) {
  const ShapeReport r = validate_shape(parse_powersum("n=3; 1*(x^2); 1*(x+1)"));
  EXPECT_TRUE(r.ok);
  EXPECT_TRUE(r.shape_ok());
  EXPECT_EQ(r.dominant_degree, 2);
  EXPECT_EQ(r.checks.size(), 6u);
  EXPECT_TRUE(r.failures().empty());
}

TEST(ValidateShape, ForbiddenBinomial) {
  // a(ex+c)^n + b as (root ex+c, coeff a), (root 1, coeff b)
  const PowerSumSpec spec(5, {{P({3, 2}), Rational(-7, 2)}, {P({1}), 4}});
  const ShapeReport r = validate_shape(spec);
  EXPECT_FALSE(r.ok);
  EXPECT_FALSE(r.passed(shape_check::kNotForbiddenBinomial));
  EXPECT_TRUE(r.passed(shape_check::kTwoOrMoreRoots));
  EXPECT_TRUE(r.passed(shape_check::kDominantRoot));
  EXPECT_TRUE(r.passed(shape_check::kAtMostOneConstantRoot));
  EXPECT_FALSE(r.passed(shape_check::kDominantDegreeAtLeastTwo));
}

TEST(ValidateShape, SingleRoot) {
  const ShapeReport r = validate_shape(PowerSumSpec(3, {{P({1, 0, 1}), 1}}));
  EXPECT_FALSE(r.ok);
  EXPECT_FALSE(r.passed(shape_check::kTwoOrMoreRoots));
}

TEST(ValidateShape, OtherFailures) {
  const ShapeReport tie = validate_shape(parse_powersum("n=3; 1*(x^2); 1*(x^2+1)"));
  EXPECT_FALSE(tie.passed(shape_check::kDominantRoot));

  const ShapeReport consts = validate_shape(parse_powersum("n=3; 1*(x^2); 1*(x); 1*(2); 1*(3)"));
  EXPECT_FALSE(consts.passed(shape_check::kAtMostOneConstantRoot));
  EXPECT_TRUE(consts.passed(shape_check::kNotForbiddenBinomial));

  const ShapeReport small_n = validate_shape(parse_powersum("n=2; 1*(x^2); 1*(x+1)"));
  EXPECT_FALSE(small_n.ok);
  EXPECT_TRUE(small_n.shape_ok());
  EXPECT_FALSE(small_n.passed(shape_check::kIndexAboveTwo));
}

TEST(ValidateShape, BinomialNeedsExponentDivisibleByN) {
  // (x^2)^3 + 1 = x^6 + 1, a linear power with exponent 6 = 2*3.
  EXPECT_FALSE(validate_shape(parse_powersum("n=3; 1*(x^2); 1*(1)")).passed(shape_check::kNotForbiddenBinomial));
  // (x+1)^2 - x^2 = 2x + 1 is a linear power with exponent 1, and 2 does not divide 1.
  const ShapeReport r = validate_shape(parse_powersum("n=2; 1*(x+1); -1*(x)"));
  EXPECT_TRUE(r.passed(shape_check::kNotForbiddenBinomial));
  EXPECT_FALSE(r.passed(shape_check::kDominantRoot));
}

TEST(LinearPowerForm, Examples) {
  EXPECT_FALSE(linear_power_form(kG3).has_value());
  EXPECT_FALSE(derivative_is_linear_power(kG3));

  const RationalPoly f = Rational(2) * pow(P({1, 1}), 4) + P({5});
  const auto form = linear_power_form(f);
  ASSERT_TRUE(form.has_value());
  EXPECT_EQ(form->a, 2);
  EXPECT_EQ(form->c, 1);
  EXPECT_EQ(form->d, 1);
  EXPECT_EQ(form->exponent, 4u);
  EXPECT_EQ(form->b, 5);
  EXPECT_TRUE(derivative_is_linear_power(f));

  const auto cube = linear_power_form(P({0, 0, 0, 1}));
  ASSERT_TRUE(cube.has_value());
  EXPECT_EQ(cube->a, 1);
  EXPECT_EQ(cube->d, 0);
  EXPECT_EQ(cube->exponent, 3u);
  EXPECT_EQ(cube->b, 0);

  EXPECT_THROW(linear_power_form(P({4})), PreconditionError);
}

TEST(LinearPowerForm, LinearInput) {
  const auto form = linear_power_form(P({3, -2}));
  ASSERT_TRUE(form.has_value());
  EXPECT_EQ(form->exponent, 1u);
  EXPECT_EQ(form->realize(), P({3, -2}));
}

TEST(LinearPowerFormProperty, RecoversConstructedForms) {
  Gen gen(21);
  for (int i = 0; i < 250; ++i) {
    const Rational a = gen.nonzero_rational(), c = gen.nonzero_rational(), d = gen.rational(), b = gen.rational();
    const auto n = static_cast<std::uint64_t>(gen.integer(1, 10));
    const RationalPoly f = a * pow(RationalPoly{d, c}, n) + RationalPoly::constant(b);
    const auto form = linear_power_form(f);
    ASSERT_TRUE(form.has_value()) << format_poly(f);
    ASSERT_EQ(form->exponent, n);
    ASSERT_EQ(form->realize(), f);
    ASSERT_TRUE(derivative_is_linear_power(f));
  }
}

TEST(LinearPowerFormProperty, RejectsSeveralDerivativeRoots) {
  Gen gen(22);
  for (int i = 0; i < 250; ++i) {
    // f' = k * (x - r1)(x - r2)(x - r3) * q with distinct r_i.
    std::set<Rational> roots;
    while (roots.size() < 3) roots.insert(gen.rational());
    RationalPoly df = RationalPoly::constant(gen.nonzero_rational());
    for (const auto& r : roots) df *= RationalPoly{-r, 1};
    df *= gen.poly(static_cast<int>(gen.integer(0, 3)));
    const RationalPoly f = integrate(df, gen.rational());
    ASSERT_GE(f.degree(), 3);
    ASSERT_FALSE(linear_power_form(f).has_value()) << format_poly(f);
    ASSERT_FALSE(derivative_is_linear_power(f));
  }
}

TEST(ShapeProperty, DegreeLawAndDerivedCheck) {
  Gen gen(23);
  int valid = 0;
  for (int i = 0; i < 300; ++i) {
    const auto n = static_cast<std::uint64_t>(gen.integer(1, 6));
    const auto d = gen.integer(1, 4);
    std::vector<PowerSumTerm> terms;
    for (int j = 0; j < d; ++j) {
      RationalPoly root = gen.poly(static_cast<int>(gen.integer(0, 3)), 4);
      const bool dup = std::any_of(terms.begin(), terms.end(), [&](const PowerSumTerm& t) { return t.root == root; });
      if (!dup) terms.push_back({std::move(root), gen.nonzero_rational(4)});
    }
    const PowerSumSpec spec(n, terms);
    const ShapeReport r = validate_shape(spec);
    int top = kZeroDegree;
    for (const auto& t : spec.terms()) top = std::max(top, t.root.degree());
    ASSERT_EQ(r.dominant_degree, top);
    if (r.shape_ok()) {
      ++valid;
      ASSERT_GE(top, 2);
      ASSERT_EQ(expand(spec).degree(), static_cast<int>(n) * top);
    }
    ASSERT_EQ(r.ok, r.failures().empty());
  }
  EXPECT_GT(valid, 20);
}

TEST(ShapeProperty, LiteralBinomialsAlwaysFail) {
  Gen gen(24);
  for (int i = 0; i < 100; ++i) {
    const auto n = static_cast<std::uint64_t>(gen.integer(1, 8));
    const PowerSumSpec spec(n, {{RationalPoly{gen.rational(), gen.nonzero_rational()}, gen.nonzero_rational()},
                                {P({1}), gen.nonzero_rational()}});
    ASSERT_FALSE(validate_shape(spec).passed(shape_check::kNotForbiddenBinomial));
  }
}
