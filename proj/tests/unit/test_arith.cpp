#include <gtest/gtest.h>

#include <cmath>

#include "support.hpp"

using namespace quadwall;

TEST(Rational, CanonicalForm) {
  EXPECT_EQ(to_string(make_rational(6, -4)), "-3/2");
  EXPECT_EQ(to_string(make_rational(14, 7)), "2");
  EXPECT_THROW(make_rational(1, 0), std::domain_error);
}

TEST(Rational, FloorCeil) {
  EXPECT_EQ(floor(make_rational(-7, 2)), -4);
  EXPECT_EQ(ceil(make_rational(-7, 2)), -3);
  EXPECT_EQ(floor(make_rational(6, 3)), 2);
  EXPECT_EQ(ceil(make_rational(6, 3)), 2);
}

TEST(Rational, Parse) {
  EXPECT_EQ(parse_rational("16/49"), make_rational(16, 49));
  EXPECT_EQ(parse_rational("-3"), to_rational(-3));
  EXPECT_EQ(parse_rational("-4/6"), make_rational(-2, 3));
  EXPECT_THROW(parse_rational("4/-6"), std::exception);
  EXPECT_THROW(parse_rational("1/0"), std::exception);
  EXPECT_THROW(parse_rational("abc"), std::exception);
  EXPECT_THROW(parse_rational(""), std::exception);
}

TEST(Rational, ExactSqrt) {
  EXPECT_EQ(exact_sqrt(make_rational(16, 49)), make_rational(4, 7));
  EXPECT_FALSE(exact_sqrt(make_rational(30, 49)).has_value());
  EXPECT_FALSE(exact_sqrt(to_rational(-4)).has_value());
}

TEST(Surd, SignExamples) {
  EXPECT_EQ(surd_sign(QuadraticSurd(0, 1, make_rational(16, 49))), 1);
  EXPECT_EQ(surd_sign(QuadraticSurd(make_rational(-4, 7), 1, make_rational(16, 49))), 0);
  EXPECT_EQ(surd_sign(QuadraticSurd(make_rational(-3, 7), 1, make_rational(30, 49))), 1);
  EXPECT_EQ(surd_sign(QuadraticSurd(make_rational(3, 7), -1, make_rational(30, 49))), -1);
}

TEST(Surd, CompareExamples) {
  EXPECT_EQ(compare(QuadraticSurd(make_rational(1, 7)), QuadraticSurd(make_rational(1, 7))),
            std::strong_ordering::equal);
  EXPECT_EQ(compare(QuadraticSurd(-1, 0, 5), QuadraticSurd(0, 0, 5)), std::strong_ordering::less);
  const QuadraticSurd a(make_rational(-3, 7), 1, make_rational(30, 49));
  const QuadraticSurd b(make_rational(-3, 7), 1, make_rational(39, 98));
  EXPECT_EQ(compare(a, b), std::strong_ordering::greater);
  EXPECT_EQ(compare(b, a), std::strong_ordering::less);
  // Arithmetic across distinct radicands is refused.
  EXPECT_THROW((void)(a - b), std::invalid_argument);
}

TEST(Surd, Normalization) {
  const QuadraticSurd x(1, 2, 9);
  EXPECT_TRUE(x.is_rational());
  EXPECT_EQ(x.rational_part(), 7);
  EXPECT_THROW(QuadraticSurd(0, 1, -1), std::domain_error);
  EXPECT_EQ(QuadraticSurd(2, 0, 7).radicand(), 0);
}

TEST(Surd, FloorCeil) {
  const QuadraticSurd s(0, 1, 2);  // 1.414...
  EXPECT_EQ(s.floor(), 1);
  EXPECT_EQ(s.ceil(), 2);
  EXPECT_EQ((-s).floor(), -2);
  EXPECT_EQ((-s).ceil(), -1);
  const QuadraticSurd t(make_rational(-3, 7), 4, make_rational(30, 49));  // -3/7 + 4*0.782 = 2.7
  EXPECT_EQ(t.floor(), 2);
  EXPECT_EQ(QuadraticSurd(to_rational(5)).floor(), 5);
  EXPECT_EQ(QuadraticSurd(to_rational(5)).ceil(), 5);
}

TEST(SurdProperty, SignMatchesRationalOnPerfectSquares) {
  qw_test::Rng rng(11);
  for (int i = 0; i < 10000; ++i) {
    const Rational p = rng.rational(50, 20);
    const Rational q = rng.rational(50, 20);
    const Rational root = rng.positive_rational(30, 15);
    // Build p + q*sqrt(D) from unnormalized parts and compare with p + q*root.
    const QuadraticSurd s(p, q, Rational(root * root));
    EXPECT_EQ(surd_sign(s), sgn(Rational(p + q * root)));
  }
}

TEST(SurdProperty, SignAgreesWithFloatingPointAwayFromZero) {
  qw_test::Rng rng(12);
  for (int i = 0; i < 2000; ++i) {
    const Rational p = rng.rational(40, 9);
    const Rational q = rng.rational(40, 9);
    const Rational d = rng.positive_rational(200, 7);
    const double approx = p.get_d() + q.get_d() * std::sqrt(d.get_d());
    if (std::abs(approx) < 1e-6) continue;
    EXPECT_EQ(surd_sign(QuadraticSurd(p, q, d)), approx > 0 ? 1 : -1);
  }
}

TEST(SurdProperty, FloorBracketsValue) {
  qw_test::Rng rng(13);
  for (int i = 0; i < 2000; ++i) {
    const QuadraticSurd s(rng.rational(60, 7), rng.rational(20, 5), rng.positive_rational(500, 9));
    const Integer f = s.floor();
    EXPECT_GE((s - QuadraticSurd(Rational(f))).sign(), 0);
    EXPECT_LT((s - QuadraticSurd(Rational(f + 1))).sign(), 0);
    const Integer c = s.ceil();
    EXPECT_LE((s - QuadraticSurd(Rational(c))).sign(), 0);
    EXPECT_GT((s - QuadraticSurd(Rational(c - 1))).sign(), 0);
  }
}

TEST(SurdProperty, MixedRadicandCompareAgreesWithFloatingPoint) {
  qw_test::Rng rng(15);
  for (int i = 0; i < 3000; ++i) {
    const QuadraticSurd x(rng.rational(10, 5), rng.rational(10, 5), rng.positive_rational(60, 7));
    const QuadraticSurd y(rng.rational(10, 5), rng.rational(10, 5), rng.positive_rational(60, 7));
    const double gap = (x.rational_part().get_d() + x.surd_coefficient().get_d() * std::sqrt(x.radicand().get_d())) -
                       (y.rational_part().get_d() + y.surd_coefficient().get_d() * std::sqrt(y.radicand().get_d()));
    if (std::abs(gap) < 1e-9) continue;
    EXPECT_EQ(compare(x, y), gap > 0 ? std::strong_ordering::greater : std::strong_ordering::less);
  }
}

TEST(SurdProperty, MixedRadicandEquality) {
  // 2*sqrt(2) and sqrt(8) are the same number under distinct radicands.
  const QuadraticSurd x(0, 2, 2);
  const QuadraticSurd y(0, 1, 8);
  EXPECT_EQ(x.radicand(), 2);
  EXPECT_EQ(compare(x, y), std::strong_ordering::equal);
  EXPECT_EQ(compare(QuadraticSurd(1, 1, 2), QuadraticSurd(0, 1, 5)), std::strong_ordering::greater);  // 2.414 > 2.236
  EXPECT_EQ(compare(QuadraticSurd(-1, 1, 7), QuadraticSurd(0, 1, 3)), std::strong_ordering::less);    // 1.646 < 1.732
}

TEST(SurdProperty, CompareIsTotalOrderOnSharedRadicand) {
  qw_test::Rng rng(14);
  for (int i = 0; i < 3000; ++i) {
    const Rational d = rng.positive_rational(50, 7);
    auto pick = [&] { return QuadraticSurd(rng.rational(5, 4), rng.rational(5, 4), d); };
    const QuadraticSurd x = pick(), y = pick(), z = pick();
    EXPECT_EQ(compare(x, y), 0 <=> compare(y, x));  // antisymmetry
    if (x <= y && y <= z) {
      EXPECT_LE(x, z);
    }
    if (x < y && y < z) {
      EXPECT_LT(x, z);
    }
    EXPECT_EQ(compare(x, x), std::strong_ordering::equal);
  }
}
