#include <gtest/gtest.h>

#include <random>

#include "lcgp/errors.hpp"
#include "lcgp/operator_matrix.hpp"
#include "lcgp/poly_io.hpp"
#include "support.hpp"

namespace lcgp {
namespace {

const std::vector<std::string> kNames{"d1", "d2", "d3"};

Polynomial P(const std::string& s) { return parse_polynomial(s, kNames); }

TEST(Rational, ParsesIntegersFractionsAndDecimals) {
  EXPECT_EQ(parse_rational("3"), Rational(3));
  EXPECT_EQ(parse_rational("-1/2"), Rational(-1, 2));
  EXPECT_EQ(parse_rational("0.25"), Rational(1, 4));
  EXPECT_EQ(parse_rational("2/4"), Rational(1, 2));
  EXPECT_EQ(parse_rational("0.08"), Rational(2, 25));
  EXPECT_EQ(parse_rational("010"), Rational(10));
  EXPECT_EQ(to_string(parse_rational("-6/4")), "-3/2");
}

TEST(Polynomial, DifferenceOfSquares) {
  EXPECT_EQ(P("(d1 + d2)*(d1 - d2)"), P("d1^2 - d2^2"));
}

TEST(Polynomial, ZeroIsAbsorbing) {
  EXPECT_TRUE((P("d1^3 - 2*d2") * Polynomial(3)).is_zero());
}

TEST(Polynomial, ExactRationalAddition) {
  EXPECT_EQ(P("1/2*d1") + P("1/2*d1"), P("d1"));
}

TEST(Polynomial, SelfDifferenceHasNoTerms) {
  Polynomial a = P("3*d1^2*d2 - 7/3*d3 + 1");
  Polynomial z = a - a;
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(z.size(), 0u);
}

TEST(Polynomial, RingAxiomsOnRandomTriples) {
  std::mt19937 rng(1);
  for (int i = 0; i < 1000; ++i) {
    Polynomial a = testing::random_polynomial(rng, 3, 4, 4);
    Polynomial b = testing::random_polynomial(rng, 3, 4, 4);
    Polynomial c = testing::random_polynomial(rng, 3, 4, 4);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ((a + b) - b, a);
  }
}

TEST(Polynomial, DerivativeAndShift) {
  EXPECT_EQ(P("d1^3*d2 + d2").derivative(0), P("3*d1^2*d2"));
  EXPECT_EQ(P("d1^2").shifted(0, 1), P("d1^2 + 2*d1 + 1"));
  EXPECT_EQ(P("d1*d2").shifted(1, Rational(-1, 2)), P("d1*d2 - 1/2*d1"));
}

TEST(PolyIo, DecimalCoefficientsWithLeadingZeros) {
  EXPECT_EQ(P("0.08*d1 + 1.05"), P("2/25*d1 + 21/20"));
  EXPECT_EQ(P("1e-2*d2"), P("1/100*d2"));
}

TEST(Polynomial, EvaluationIsExact) {
  EXPECT_EQ(P("d1^2 - 1/3*d2*d3").evaluate({Rational(1, 2), Rational(3), Rational(2)}), Rational(-7, 4));
}

TEST(MonomialOrder, DegRevLexBasics) {
  MonomialOrder ord;
  auto m = [](std::vector<int> e) { return Monomial(std::move(e)); };
  EXPECT_EQ(ord.compare(m({0, 2, 0}), m({1, 0, 0})), std::strong_ordering::greater);
  // degrevlex: x1*x3 < x2^2 (smaller power of the last variable wins)
  EXPECT_EQ(ord.compare(m({1, 0, 1}), m({0, 2, 0})), std::strong_ordering::less);
  MonomialOrder lex(BaseOrder::Lex, ModuleExtension::TermOverPosition);
  EXPECT_EQ(lex.compare(m({1, 0, 0}), m({0, 5, 5})), std::strong_ordering::greater);
}

TEST(MonomialOrder, TotalAndMultiplicative) {
  std::mt19937 rng(2);
  std::uniform_int_distribution<int> e(0, 4);
  auto random_mono = [&] { return Monomial(std::vector<int>{e(rng), e(rng), e(rng)}); };
  for (auto base : {BaseOrder::DegRevLex, BaseOrder::Lex}) {
    MonomialOrder ord(base, ModuleExtension::TermOverPosition);
    for (int i = 0; i < 2000; ++i) {
      Monomial u = random_mono(), v = random_mono(), w = random_mono();
      auto c = ord.compare(u, v);
      ASSERT_EQ(c == std::strong_ordering::equal, u == v);
      ASSERT_EQ(ord.compare(v, u), 0 <=> c);
      ASSERT_EQ(ord.compare(u * w, v * w), c);
      ASSERT_NE(ord.compare(u * w, u), std::strong_ordering::less);
    }
  }
}

TEST(ModuleElement, LeadingTermUnderTop) {
  ModuleElement m({P("d1"), P("d2^2")}, 3);
  auto t = module_leading_term(m, MonomialOrder());
  EXPECT_EQ(t.component, 1u);
  EXPECT_EQ(t.monomial, Monomial({0, 2, 0}));
  EXPECT_EQ(t.coefficient, Rational(1));
}

TEST(ModuleElement, LeadingTermUnderPot) {
  ModuleElement m({P("1"), P("1")}, 3);
  MonomialOrder pot(BaseOrder::DegRevLex, ModuleExtension::PositionOverTerm, {0, 1});
  auto t = module_leading_term(m, pot);
  EXPECT_EQ(t.component, 0u);
  EXPECT_TRUE(t.monomial.is_one());
}

TEST(ModuleElement, LeadingTermSingle) {
  ModuleElement m({P("3*d1")}, 3);
  auto t = module_leading_term(m, MonomialOrder());
  EXPECT_EQ(t.component, 0u);
  EXPECT_EQ(t.coefficient, Rational(3));
  EXPECT_THROW(module_leading_term(ModuleElement(2, 3), MonomialOrder()), std::invalid_argument);
}

TEST(OperatorMatrix, DivergenceTimesCurlIsZero) {
  Ring ring = Ring::differential(kNames, {"x", "y", "z"});
  auto a = OperatorMatrix::parse(ring, "d1, d2, d3");
  auto curl = OperatorMatrix::parse(ring, "-d2, 0, -d3\nd1, -d3, 0\n0, d2, d1");
  auto prod = a * curl;
  EXPECT_EQ(prod.rows(), 1u);
  EXPECT_EQ(prod.cols(), 3u);
  EXPECT_TRUE(prod.is_zero());
  EXPECT_EQ(a * OperatorMatrix::identity(ring, 3), a);
}

TEST(OperatorMatrix, ShapeMismatchThrows) {
  Ring ring = Ring::differential(kNames, {"x", "y", "z"});
  auto a = OperatorMatrix::parse(ring, "d1, d2, d3");
  EXPECT_THROW(a * a, DimensionError);
}

TEST(Ring, RejectsConflictingActions) {
  EXPECT_THROW(Ring({"a", "b"}, {"x"}, {{ActionKind::Differentiate, 0}, {ActionKind::Multiply, 0}}),
               std::invalid_argument);
  EXPECT_THROW(Ring({"a", "a"}, {"x", "y"}, {{ActionKind::Differentiate, 0}, {ActionKind::Differentiate, 1}}),
               std::invalid_argument);
  EXPECT_NO_THROW(Ring({"a", "b"}, {"x", "y"}, {{ActionKind::Multiply, 0}, {ActionKind::Differentiate, 1}}));
}

TEST(PolyIo, RoundTripOnRandomPolynomials) {
  std::mt19937 rng(3);
  for (int i = 0; i < 300; ++i) {
    Polynomial p = testing::random_polynomial(rng, 3, 4, 5, 9);
    std::string s = to_string(p, kNames);
    ASSERT_EQ(parse_polynomial(s, kNames), p) << s;
    ASSERT_EQ(to_string(parse_polynomial(s, kNames), kNames), s);
  }
}

TEST(PolyIo, CanonicalPrinting) {
  EXPECT_EQ(to_string(P("3 - 1/2*d3 + d1^2"), kNames), "d1^2 - 1/2*d3 + 3");
  EXPECT_EQ(to_string(Polynomial(3), kNames), "0");
  EXPECT_EQ(to_string(P("-d2*d1"), kNames), "-d1*d2");
}

TEST(PolyIo, DanglingCaretIsASyntaxErrorAtTheCaret) {
  try {
    parse_polynomial("d1^", kNames);
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1u);
    EXPECT_EQ(e.column(), 3u);
  }
}

TEST(PolyIo, UnknownGeneratorReportsPosition) {
  try {
    parse_poly_matrix("d1, d2\nd3, q7", kNames);
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 5u);
  }
}

TEST(PolyIo, RaggedMatrixRejected) {
  EXPECT_THROW(parse_poly_matrix("d1, d2\nd3", kNames), ParseError);
}

}  // namespace
}  // namespace lcgp
