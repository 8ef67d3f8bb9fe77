#include <gtest/gtest.h>

#include <numeric>

#include "powerdio/stdpairs.hpp"
#include "test_support.hpp"

using namespace powerdio;
using powerdio::testing::P;

namespace {

const RationalPoly kG3 = P({1, 3, 3, 1, 0, 0, 1});

PairParams kl(std::uint64_t k, std::uint64_t l) {
  PairParams p;
  p.k = k;
  p.l = l;
  p.a = 2;
  p.b = Rational(-1, 3);
  p.p = P({1, 1});
  return p;
}

}  // namespace

TEST(StandardPair, FirstKind) {
  PairParams params;
  params.k = 3;
  params.l = 1;
  params.a = 1;
  params.p = P({1, 1});
  const StandardPair pair = make_standard_pair(PairKind::First, params);
  EXPECT_EQ(pair.f1, P({0, 0, 0, 1}));
  EXPECT_EQ(pair.g1, P({0, 1}) * pow(P({1, 1}), 3));
  EXPECT_FALSE(pair.swapped);
}

TEST(StandardPair, FifthKind) {
  PairParams params;
  params.a = 1;
  const StandardPair pair = make_standard_pair(PairKind::Fifth, params);
  EXPECT_EQ(pair.f1, pow(P({-1, 0, 1}), 3));
  EXPECT_EQ(pair.g1, P({0, 0, 0, -4, 3}));
  EXPECT_EQ(pair.f1.degree(), 6);
  EXPECT_EQ(pair.g1.degree(), 4);
}

TEST(StandardPair, ThirdKindNeedsCoprime) {
  PairParams params;
  params.k = 2;
  params.l = 4;
  params.a = 1;
  EXPECT_THROW(make_standard_pair(PairKind::Third, params), SideConditionError);
  try {
    make_standard_pair(PairKind::Third, params);
  } catch (const SideConditionError& e) {
    EXPECT_NE(std::string(e.what()).find("gcd(k, l) = 1"), std::string::npos);
  }
}

TEST(StandardPair, SecondAndFourthKinds) {
  PairParams params;
  params.a = 3;
  params.b = -2;
  params.p = P({0, 1});
  const StandardPair second = make_standard_pair(PairKind::Second, params);
  EXPECT_EQ(second.f1, P({0, 0, 1}));
  EXPECT_EQ(second.g1, P({0, 0, -2, 0, 3}));

  params.k = 2;
  params.l = 4;
  params.a = 4;
  params.b = Rational(1, 2);
  const StandardPair fourth = make_standard_pair(PairKind::Fourth, params);
  EXPECT_EQ(fourth.f1, Rational(1, 4) * dickson(2, 4));
  EXPECT_EQ(fourth.g1, Rational(-4) * dickson(4, Rational(1, 2)));
}

TEST(StandardPair, SwappedExchangesCoordinates) {
  PairParams params;
  params.k = 3;
  params.l = 2;
  params.a = Rational(1, 2);
  const StandardPair plain = make_standard_pair(PairKind::Third, params);
  const StandardPair swapped = make_standard_pair(PairKind::Third, params, true);
  EXPECT_EQ(plain.f1, swapped.g1);
  EXPECT_EQ(plain.g1, swapped.f1);
  EXPECT_TRUE(swapped.swapped);
  EXPECT_TRUE(revalidate(swapped));
}

TEST(StandardPair, NonzeroParameters) {
  PairParams params;
  params.a = 0;
  EXPECT_THROW(make_standard_pair(PairKind::Fifth, params), SideConditionError);
  params.a = 1;
  params.p = RationalPoly{};
  EXPECT_THROW(make_standard_pair(PairKind::Second, params), SideConditionError);
  // l + deg p > 0: l = 0 with constant p
  PairParams first;
  first.k = 1;
  first.l = 0;
  first.p = P({3});
  EXPECT_THROW(make_standard_pair(PairKind::First, first), SideConditionError);
}

TEST(StandardPairProperty, DegreeFactsAndRevalidation) {
  for (std::uint64_t k = 1; k <= 12; ++k) {
    for (std::uint64_t l = 0; l <= 12; ++l) {
      const PairParams params = kl(k, l);
      if (l < k && std::gcd(k, l) == 1) {
        const StandardPair p = make_standard_pair(PairKind::First, params);
        EXPECT_EQ(p.f1.degree(), static_cast<int>(k));
        EXPECT_EQ(p.g1.degree(), static_cast<int>(l + k * 1));
        EXPECT_TRUE(revalidate(p));
      }
      if (l >= 1 && std::gcd(k, l) == 1) {
        const StandardPair p = make_standard_pair(PairKind::Third, params);
        EXPECT_EQ(p.f1.degree(), static_cast<int>(k));
        EXPECT_EQ(p.g1.degree(), static_cast<int>(l));
        EXPECT_TRUE(revalidate(p));
      }
    }
  }
}

TEST(StandardPairProperty, FourthKindParity) {
  for (std::uint64_t k = 1; k <= 12; ++k) {
    for (std::uint64_t l = 1; l <= 12; ++l) {
      const bool ok = k % 2 == 0 && l % 2 == 0 && std::gcd(k, l) == 2;
      if (ok) {
        const StandardPair p = make_standard_pair(PairKind::Fourth, kl(k, l));
        EXPECT_EQ(p.f1.degree(), static_cast<int>(k));
        EXPECT_EQ(p.g1.degree(), static_cast<int>(l));
        EXPECT_TRUE(revalidate(p));
      } else {
        EXPECT_THROW(make_standard_pair(PairKind::Fourth, kl(k, l)), SideConditionError) << k << " " << l;
      }
    }
  }
}

TEST(StandardPair, RevalidateDetectsTampering) {
  StandardPair p = make_standard_pair(PairKind::Fifth, PairParams{});
  p.g1 += P({1});
  EXPECT_FALSE(revalidate(p));
}

TEST(VerifyFactorization, Examples) {
  EXPECT_TRUE(verify_bt_factorization(kG3, kG3, P({0, 1}), P({0, 1})));
  EXPECT_TRUE(verify_bt_factorization(pow(P({1, 2}), 6), P({0, 0, 0, 1}), P({0, 0, 1}), P({1, 2})));
  EXPECT_FALSE(verify_bt_factorization(kG3, P({0, 0, 1}), P({0, 0, 0, 1}), P({0, 1})));
  EXPECT_THROW(verify_bt_factorization(kG3, kG3, P({0, 1}), P({0, 0, 1})), PreconditionError);
  EXPECT_THROW(verify_bt_factorization(kG3, kG3, P({0, 1}), P({2})), PreconditionError);
}
