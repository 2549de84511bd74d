#include <gtest/gtest.h>

#include "support.hpp"

using namespace quadwall;

namespace {
const Polarization H12({1, 2});
const Polarization H11({1, 1});
const ChernCharacter vM{0, {2, 3}, -3};
}  // namespace

TEST(Tilt, CentralChargeExamples) {
  for (const Rational& a2 : {make_rational(1, 9), to_rational(1), to_rational(7)}) {
    const ChargeValue z = central_charge(vM, StabilityPoint(a2, make_rational(-3, 7)), H12);
    EXPECT_EQ(z.re, 0);
    EXPECT_EQ(z.im_over_alpha, 7);
  }
  const Rational a2 = make_rational(5, 3);
  const ChargeValue o = central_charge(line_bundle({0, 0}), StabilityPoint(a2, 0), H12);
  EXPECT_EQ(o.re, Rational(a2 * 4 / 2));
  EXPECT_EQ(o.im_over_alpha, 0);
  EXPECT_EQ(central_charge({0, {2, 3}, -4}, StabilityPoint(1, 0), H11), (ChargeValue{4, 5}));
}

TEST(Tilt, StabilityPointRejectsNonPositiveAlpha) {
  EXPECT_THROW(StabilityPoint(0, 0), std::domain_error);
  EXPECT_THROW(StabilityPoint(-1, 0), std::domain_error);
}

TEST(Tilt, SlopeExamples) {
  EXPECT_EQ(slope(vM, StabilityPoint(1, make_rational(-3, 7)), H12), Rational(0));
  // O(0,1) at H=(1,2): d = 1, so H ch1^beta vanishes at beta = 1/4.
  EXPECT_FALSE(slope(line_bundle({0, 1}), StabilityPoint(2, make_rational(1, 4)), H12).has_value());
}

TEST(Tilt, HeartPositionExamples) {
  for (const Rational& b : {to_rational(-3), make_rational(1, 5), make_rational(24, 100)})
    EXPECT_EQ(heart_position(line_bundle({0, 1}), b, H12), HeartPosition::SheafInT);
  EXPECT_EQ(heart_position(line_bundle({0, 1}), make_rational(1, 4), H12), HeartPosition::Boundary);
  const ChernCharacter o12 = line_bundle({-1, -2});
  EXPECT_EQ(heart_position(o12, -1, H12), HeartPosition::Boundary);
  EXPECT_EQ(heart_position(o12, make_rational(-1, 2), H12), HeartPosition::ShiftedInF);
  EXPECT_EQ(heart_position(o12, -2, H12), HeartPosition::SheafInT);
  EXPECT_EQ(heart_position(vM, 100, H12), HeartPosition::TorsionSheaf);
  EXPECT_THROW(heart_position({0, {0, 0}, 1}, 0, H12), std::invalid_argument);
}

TEST(Tilt, OnWallExamples) {
  const ChernCharacter f = line_bundle({1, 0});
  EXPECT_TRUE(on_wall(f, vM, StabilityPoint(make_rational(30, 49), make_rational(-3, 7)), H12));
  EXPECT_FALSE(on_wall(f, vM, StabilityPoint(make_rational(29, 49), make_rational(-3, 7)), H12));
  EXPECT_FALSE(on_wall(f, vM, StabilityPoint(1, 0), H12));
  EXPECT_TRUE(on_wall(vM, vM, StabilityPoint(3, 5), H12));
  EXPECT_TRUE(on_wall(f, f + f, StabilityPoint(make_rational(1, 3), -2), H12));
}

TEST(TiltProperty, SlopeIsMinusReOverIm) {
  qw_test::Rng rng(31);
  for (int i = 0; i < 1000; ++i) {
    const Polarization h = rng.polarization();
    const ChernCharacter v = rng.chern(4, 6);
    const StabilityPoint p(rng.positive_rational(20, 9), rng.rational(20, 9));
    const ChargeValue z = central_charge(v, p, h);
    const auto nu = slope(v, p, h);
    if (sgn(z.im_over_alpha) == 0) {
      EXPECT_FALSE(nu.has_value());
      continue;
    }
    ASSERT_TRUE(nu.has_value());
    EXPECT_EQ(*nu, Rational(-z.re / z.im_over_alpha));
    // Coefficients in alpha^2: nu * im = ch2^beta - alpha^2 (H^2 r / 2).
    const TwistedChern t = twist(v, p.beta, h);
    EXPECT_EQ(Rational(*nu * z.im_over_alpha), Rational(t.ch2 - p.alpha_sq * t.h2_ch0 / 2));
  }
}

TEST(TiltProperty, TorsionSlopeIndependentOfAlpha) {
  qw_test::Rng rng(32);
  for (int i = 0; i < 300; ++i) {
    const Polarization h = rng.polarization();
    const Divisor c1{rng.integer(0, 5), rng.integer(1, 5)};
    const ChernCharacter v{0, c1, to_rational(rng.integer(-10, 10))};
    const Rational beta = rng.rational(10, 7);
    const auto first = slope(v, StabilityPoint(make_rational(1, 100), beta), h);
    for (std::int64_t k = 1; k <= 12; ++k)
      EXPECT_EQ(slope(v, StabilityPoint(make_rational(k * k, 7), beta), h), first);
  }
}

TEST(TiltProperty, HeartPositionMonotoneInBeta) {
  qw_test::Rng rng(33);
  for (int i = 0; i < 500; ++i) {
    const Polarization h = rng.polarization();
    const ChernCharacter l = line_bundle(rng.divisor(6));
    const Rational threshold = make_rational(h.degree(l.c1), h.squared());
    const Rational eps = rng.positive_rational(5, 13);
    EXPECT_EQ(heart_position(l, Rational(threshold - eps), h), HeartPosition::SheafInT);
    EXPECT_EQ(heart_position(l, threshold, h), HeartPosition::Boundary);
    EXPECT_EQ(heart_position(l, Rational(threshold + eps), h), HeartPosition::ShiftedInF);
  }
}
