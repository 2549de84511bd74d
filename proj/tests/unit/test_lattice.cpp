#include <gtest/gtest.h>

#include "support.hpp"

using namespace quadwall;

namespace {
const Polarization H12({1, 2});
const Polarization H11({1, 1});
}  // namespace

TEST(Divisor, Intersection) {
  EXPECT_EQ(intersect({1, 2}, {2, 3}), 7);
  EXPECT_EQ(intersect({1, 1}, {2, 3}), 5);
  EXPECT_EQ(intersect({1, 2}, {1, 2}), 4);
  EXPECT_EQ(intersect({3, 0}, {3, 0}), 0);
}

TEST(Polarization, Ampleness) {
  EXPECT_EQ(H12.squared(), 4);
  EXPECT_EQ(H11.squared(), 2);
  EXPECT_THROW(Polarization({0, 1}), std::invalid_argument);
  EXPECT_THROW(Polarization({1, -1}), std::invalid_argument);
}

TEST(Lattice, TwistExamples) {
  const ChernCharacter v{0, {2, 3}, -3};
  const Rational beta = make_rational(5, 3);
  const TwistedChern t = twist(v, beta, H12);
  EXPECT_EQ(t.h2_ch0, 0);
  EXPECT_EQ(t.h_ch1, 7);
  EXPECT_EQ(t.ch2, Rational(-3 - 7 * beta));

  const ChernCharacter w{1, {1, 1}, -1};
  EXPECT_EQ(twist(w, 0, H12), (TwistedChern{4, 3, -1}));
  EXPECT_EQ(twist(w, -1, H12), (TwistedChern{4, 7, 4}));
}

TEST(Lattice, InvariantsExamples) {
  EXPECT_EQ(invariants(line_bundle({1, 0}), H12), (Invariants{1, 2, 0}));
  EXPECT_EQ(invariants({0, {2, 2}, -2}, H12), (Invariants{0, 6, -2}));
  EXPECT_EQ(invariants({}, H12), (Invariants{0, 0, 0}));
  EXPECT_THROW(invariants({1, {0, 0}, make_rational(1, 2)}, H12), std::invalid_argument);
}

TEST(Lattice, DiscriminantExamples) {
  for (std::int64_t d = -5; d <= 5; ++d)
    for (std::int64_t c = -5; c <= 5; ++c) {
      EXPECT_EQ(discriminant(Invariants{1, d, c}, H12), d * d - 8 * c);
      if (d == 1) {
        EXPECT_EQ(discriminant(Invariants{1, 1, c}, H11), 1 - 4 * c);
      }
      EXPECT_EQ(discriminant(Invariants{0, 5, c}, H11), 25);
    }
}

TEST(Lattice, EulerCharExamples) {
  for (std::int64_t a = -4; a <= 4; ++a)
    for (std::int64_t b = -4; b <= 4; ++b) EXPECT_EQ(euler_char(line_bundle({a, b})), (a + 1) * (b + 1));
  EXPECT_EQ(euler_char({0, {2, 3}, -3}), 2);
  EXPECT_EQ(euler_char({0, {2, 3}, -4}), 1);
}

TEST(Lattice, EulerPairingExamples) {
  for (std::int64_t a = -4; a <= 4; ++a)
    for (std::int64_t b = -4; b <= 4; ++b)
      EXPECT_EQ(euler_pairing(line_bundle({0, 0}), line_bundle({a, b})), (a + 1) * (b + 1));
  const ChernCharacter sum = line_bundle({-2, -1}) + line_bundle({-1, -2});
  // chi(O(a,b), O(c,d)) = (c-a+1)(d-b+1): (-1)(-1) = 1 for O(-2,-1), (0)(-2) = 0 for O(-1,-2).
  EXPECT_EQ(euler_pairing(line_bundle({0, 1}), sum), 1);
  EXPECT_EQ(euler_pairing(line_bundle({-1, -1}), line_bundle({0, 1})), 6);
}

TEST(Lattice, HilbertPolynomialExamples) {
  EXPECT_EQ(hilbert_polynomial({0, {2, 3}, -3}), (HilbertPolynomial{5, 2}));
  EXPECT_EQ(hilbert_polynomial({0, {2, 3}, -4}), (HilbertPolynomial{5, 1}));
  EXPECT_EQ(hilbert_polynomial({0, {2, 2}, -2}), (HilbertPolynomial{4, 2}));
  EXPECT_EQ(to_string(hilbert_polynomial({0, {2, 3}, -3})), "5m+2");
  EXPECT_THROW(hilbert_polynomial(line_bundle({1, 1})), std::invalid_argument);
}

TEST(Lattice, LineBundleLiftsExamples) {
  EXPECT_EQ(line_bundle_lifts({1, 1, 0}, H12), (std::vector<Divisor>{{0, 1}}));
  EXPECT_EQ(line_bundle_lifts({1, 2, 0}, H12), (std::vector<Divisor>{{0, 2}, {1, 0}}));
  EXPECT_EQ(line_bundle_lifts({1, 1, 0}, H11), (std::vector<Divisor>{{0, 1}, {1, 0}}));
  EXPECT_TRUE(line_bundle_lifts({1, 3, -1}, H12).empty());
  EXPECT_THROW(line_bundle_lifts({2, 1, 0}, H12), std::invalid_argument);
}

TEST(Lattice, TensorExamples) {
  EXPECT_EQ(tensor_line_bundle(line_bundle({1, 0}), {-2, -2}), line_bundle({-1, -2}));
  const ChernCharacter v{0, {2, 3}, -3};
  EXPECT_EQ(tensor_line_bundle(v, {0, 0}), v);
  EXPECT_EQ(tensor_line_bundle(v, {1, 1}), (ChernCharacter{0, {2, 3}, 2}));
}

TEST(LatticeProperty, TwistComposition) {
  qw_test::Rng rng(21);
  for (int i = 0; i < 1000; ++i) {
    const Polarization h = rng.polarization();
    const RationalChern v = RationalChern::from(rng.chern(4, 6));
    const Rational b1 = rng.rational(20, 7), b2 = rng.rational(20, 7);
    EXPECT_EQ(twist_full(twist_full(v, b1, h), b2, h), twist_full(v, Rational(b1 + b2), h));
  }
}

TEST(LatticeProperty, TwistFullProjectsToTwist) {
  qw_test::Rng rng(22);
  for (int i = 0; i < 500; ++i) {
    const Polarization h = rng.polarization();
    const ChernCharacter v = rng.chern(4, 6);
    const Rational b = rng.rational(20, 7);
    EXPECT_EQ(project(twist_full(RationalChern::from(v), b, h), h), twist(v, b, h));
  }
}

TEST(LatticeProperty, DiscriminantTwistInvariance) {
  qw_test::Rng rng(23);
  for (int i = 0; i < 1000; ++i) {
    const Polarization h = rng.polarization();
    const ChernCharacter v = rng.chern(5, 8);
    const Rational b = rng.rational(30, 11);
    EXPECT_EQ(discriminant(twist(v, b, h)), discriminant(invariants(v, h), h));
  }
}

TEST(LatticeProperty, HilbertLeadingIsDegreeAgainstO11) {
  for (std::int64_t a = -6; a <= 6; ++a)
    for (std::int64_t b = -6; b <= 6; ++b)
      EXPECT_EQ(hilbert_polynomial({0, {a, b}, 3}).leading, intersect({a, b}, {1, 1}));
}

TEST(LatticeProperty, LiftsRoundTrip) {
  for (const Polarization& h : {H12, H11, Polarization({2, 3}), Polarization({1, 3})})
    for (std::int64_t d = -15; d <= 15; ++d)
      for (std::int64_t c = -15; c <= 15; ++c)
        for (Divisor l : line_bundle_lifts({1, d, c}, h)) EXPECT_EQ(invariants(line_bundle(l), h), (Invariants{1, d, c}));
}

TEST(LatticeProperty, LiftsComplete) {
  const Polarization h = H12;
  for (std::int64_t a = -8; a <= 8; ++a)
    for (std::int64_t b = -8; b <= 8; ++b) {
      const auto lifts = line_bundle_lifts(invariants(line_bundle({a, b}), h), h);
      EXPECT_NE(std::find(lifts.begin(), lifts.end(), Divisor{a, b}), lifts.end());
    }
}
