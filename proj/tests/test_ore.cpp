#include <gtest/gtest.h>

#include <random>

#include "lcgp/errors.hpp"
#include "lcgp/ore.hpp"
#include "support.hpp"

namespace lcgp::ore {
namespace {

SkewPoly S(const std::string& s) { return parse_skew(s); }

TEST(RatFunc, LowestTermsWithMonicDenominator) {
  RatFunc f(UPoly({Rational(-2), Rational(0), Rational(2)}), UPoly({Rational(-2), Rational(2)}));
  // (2t^2 - 2) / (2t - 2) = t + 1
  EXPECT_EQ(f, RatFunc(UPoly({Rational(1), Rational(1)})));
  EXPECT_EQ(to_string(RatFunc(UPoly(Rational(3)), UPoly({Rational(0), Rational(0), Rational(2)}))),
            "(3/2)/(t^2)");
  EXPECT_THROW(RatFunc(UPoly(Rational(1)), UPoly()), std::domain_error);
}

TEST(SkewMul, WeylRelation) {
  EXPECT_EQ(SkewPoly::dt() * SkewPoly::t(), S("t*dt + 1"));
  EXPECT_EQ(SkewPoly::dt() * SkewPoly::t(3), S("t^3*dt + 3*t^2"));
  SkewPoly a = S("(1)/(t^3)*dt^2 + t");
  EXPECT_EQ(a * SkewPoly(Rational(1)), a);
  EXPECT_EQ(SkewPoly(Rational(1)) * a, a);
}

TEST(SkewMul, CommutatorIsTheDerivative) {
  std::mt19937 rng(31);
  for (int i = 0; i < 300; ++i) {
    RatFunc f = testing::random_ratfunc(rng, 3);
    ASSERT_EQ(SkewPoly::dt() * SkewPoly(f) - SkewPoly(f) * SkewPoly::dt(), SkewPoly(f.derivative()));
  }
}

TEST(SkewMul, Associative) {
  std::mt19937 rng(32);
  for (int i = 0; i < 200; ++i) {
    SkewPoly a = testing::random_skew(rng, 2, 2), b = testing::random_skew(rng, 2, 2),
             c = testing::random_skew(rng, 2, 2);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
  }
}

TEST(Division, Examples) {
  auto d = right_divide(SkewPoly::dt(2), SkewPoly::dt());
  EXPECT_EQ(d.quotient, SkewPoly::dt());
  EXPECT_TRUE(d.remainder.is_zero());
  // dt * t = t*dt + 1; the divisor t is a unit of Q(t)
  auto u = right_divide(S("t*dt + 1"), SkewPoly::t());
  EXPECT_EQ(u.quotient, SkewPoly::dt());
  EXPECT_TRUE(u.remainder.is_zero());
  EXPECT_THROW(right_divide(SkewPoly::dt(), SkewPoly()), std::domain_error);
}

TEST(Division, MultiplyBack) {
  std::mt19937 rng(33);
  int checked = 0;
  while (checked < 500) {
    SkewPoly a = testing::random_skew(rng, 3, 2), b = testing::random_skew(rng, 2, 2);
    if (b.is_zero()) continue;
    auto r = right_divide(a, b);
    ASSERT_EQ(r.quotient * b + r.remainder, a);
    ASSERT_LT(r.remainder.degree(), b.degree());
    auto l = left_divide(a, b);
    ASSERT_EQ(b * l.quotient + l.remainder, a);
    ASSERT_LT(l.remainder.degree(), b.degree());
    ++checked;
  }
}

TEST(OreKernel, ControlSystem) {
  auto a = parse_skew_matrix("dt, -t^3");
  auto b = ore_right_kernel(a);
  ASSERT_EQ(b.rows(), 2u);
  ASSERT_EQ(b.cols(), 1u);
  EXPECT_TRUE(is_zero(a * b));
  // the paper's parametrization generates the same right module
  auto paper = parse_skew_matrix("1\n(1)/(t^3)*dt");
  EXPECT_TRUE(is_zero(a * paper));
  // same right module: each column is the other times a scalar operator
  auto q = left_divide(paper(0, 0), b(0, 0));
  EXPECT_TRUE(q.remainder.is_zero());
  EXPECT_EQ(b(1, 0) * q.quotient, paper(1, 0));
  auto p = left_divide(b(0, 0), paper(0, 0));
  EXPECT_TRUE(p.remainder.is_zero());
  EXPECT_EQ(paper(1, 0) * p.quotient, b(1, 0));
  auto rep = ore_check_parametrizable(a);
  EXPECT_TRUE(rep.parametrizable);
  EXPECT_TRUE(ore_same_row_module(rep.controllable, a));
}

TEST(OreKernel, TrivialCases) {
  auto b = ore_right_kernel(parse_skew_matrix("1, 0"));
  ASSERT_EQ(b.cols(), 1u);
  EXPECT_TRUE(b(0, 0).is_zero());
  EXPECT_FALSE(b(1, 0).is_zero());
  EXPECT_EQ(ore_right_kernel(skew_identity(2)).cols(), 0u);
}

TEST(OreKernel, SoundOnRandomMatrices) {
  std::mt19937 rng(34);
  for (int trial = 0; trial < 40; ++trial) {
    SkewMatrix a = skew_matrix(1 + trial % 2, 2 + trial % 2);
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = testing::random_skew(rng, 1, 1, true);
    auto b = ore_right_kernel(a);
    ASSERT_TRUE(is_zero(a * b));
    auto a1 = ore_left_kernel(b);
    ASSERT_TRUE(is_zero(a1 * b));
    for (std::size_t i = 0; i < a.rows(); ++i) ASSERT_TRUE(ore_row_member(a.row(i), a1));
  }
}

TEST(OreKernel, NotParametrizable) {
  // dt x = 0 alone: constants only
  auto rep = ore_check_parametrizable(parse_skew_matrix("dt"));
  EXPECT_FALSE(rep.parametrizable);
  EXPECT_EQ(rep.parametrization.cols(), 0u);
}

TEST(OreText, RoundTrip) {
  std::mt19937 rng(35);
  for (int i = 0; i < 200; ++i) {
    SkewPoly p = testing::random_skew(rng, 3, 3);
    ASSERT_EQ(parse_skew(to_string(p)), p) << to_string(p);
  }
  EXPECT_EQ(to_string(S("(1)/(t^3)*dt")), "(1)/(t^3)*dt");
  EXPECT_EQ(to_string(S("dt*t")), "t*dt + 1");
}

TEST(OreText, Errors) {
  EXPECT_THROW(parse_skew("dt^"), ParseError);
  EXPECT_THROW(parse_skew("x*dt"), ParseError);
  EXPECT_THROW(parse_skew("1/(t - t)"), std::exception);
}

}  // namespace
}  // namespace lcgp::ore
