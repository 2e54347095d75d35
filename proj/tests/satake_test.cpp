#include <gtest/gtest.h>

#include "cusp/satake.hpp"

using cusp::FieldKind;
using cusp::Rational;

TEST(Satake, Examples) {
  for (auto f : {FieldKind::General, FieldKind::TotallyImaginary, FieldKind::TotallyReal}) {
    const auto b = cusp::satake_exponent_bound(4, f);
    EXPECT_EQ(b.theta, Rational(2));
    EXPECT_TRUE(b.sharp);
  }
  const auto imaginary = cusp::satake_exponent_bound(5, FieldKind::TotallyImaginary);
  EXPECT_EQ(imaginary.theta, Rational(2));
  EXPECT_FALSE(imaginary.sharp);
  const auto general = cusp::satake_exponent_bound(5, FieldKind::General);
  EXPECT_EQ(general.theta, Rational(135, 64));
  EXPECT_FALSE(general.sharp);
  EXPECT_EQ(cusp::render_rational(general.theta), "135/64");
  EXPECT_EQ(cusp::render_rational(imaginary.theta), "2/1");
}

TEST(Satake, SmallOddImaginaryFallsBackToGeneral) {
  for (int n : {1, 3}) {
    EXPECT_EQ(cusp::satake_exponent_bound(n, FieldKind::TotallyImaginary).theta,
              cusp::satake_exponent_bound(n, FieldKind::General).theta);
  }
  EXPECT_EQ(cusp::satake_exponent_bound(1, FieldKind::General).theta, Rational(7, 64));
}

TEST(Satake, Errors) {
  EXPECT_THROW(cusp::satake_exponent_bound(0, FieldKind::General), cusp::Error);
  EXPECT_THROW(cusp::satake_exponent_bound(-3, FieldKind::TotallyImaginary), cusp::Error);
}

TEST(Satake, StepOfOneAcrossSameParity) {
  for (auto f : {FieldKind::General, FieldKind::TotallyImaginary, FieldKind::TotallyReal}) {
    for (int n = 1; n <= 40; ++n) {
      // the imaginary odd formula only starts at n = 5
      if (f == FieldKind::TotallyImaginary && n == 3) continue;
      EXPECT_EQ(cusp::satake_exponent_bound(n + 2, f).theta, cusp::satake_exponent_bound(n, f).theta + 1) << n;
    }
  }
}

TEST(Satake, ImaginaryGainIsTheGl2Exponent) {
  for (int n = 5; n <= 41; n += 2) {
    EXPECT_EQ(cusp::satake_exponent_bound(n, FieldKind::General).theta -
                  cusp::satake_exponent_bound(n, FieldKind::TotallyImaginary).theta,
              Rational(7, 64));
  }
}

TEST(Satake, ThetaShape) {
  for (int n = 1; n <= 40; ++n) {
    for (auto f : {FieldKind::General, FieldKind::TotallyImaginary}) {
      const auto t = cusp::satake_exponent_bound(n, f).theta;
      EXPECT_GE(t, 0);
      EXPECT_TRUE(64 % t.denominator() == 0);
    }
  }
}

TEST(CheckRTheta, Examples) {
  const std::vector<Rational> inside{Rational(0), Rational(1, 2), Rational(2)};
  EXPECT_TRUE(cusp::check_r_theta(inside, Rational(2)));
  const std::vector<Rational> above{Rational(135, 64)};
  EXPECT_FALSE(cusp::check_r_theta(above, Rational(2)));
  EXPECT_TRUE(cusp::check_r_theta({}, Rational(3, 2)));
  const std::vector<Rational> negative{Rational(-1, 64)};
  EXPECT_FALSE(cusp::check_r_theta(negative, Rational(2)));
}
