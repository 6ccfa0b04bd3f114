#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "lcgp/errors.hpp"
#include "lcgp/groebner.hpp"
#include "lcgp/poly_io.hpp"
#include "support.hpp"

namespace lcgp {
namespace {

const std::vector<std::string> kNames{"d1", "d2", "d3"};

Polynomial P(const std::string& s) { return parse_polynomial(s, kNames); }
ModuleElement E(std::initializer_list<const char*> comps) {
  std::vector<Polynomial> v;
  for (const char* c : comps) v.push_back(P(c));
  return ModuleElement(v, 3);
}

TEST(NormalForm, DivisibleTermVanishes) {
  auto g = buchberger({E({"d1"})}, 1, 3);
  EXPECT_TRUE(normal_form(E({"d1^2"}), g).is_zero());
}

TEST(NormalForm, GeneratorsReduceToZero) {
  std::vector<ModuleElement> gens{E({"d1*d2 - d3", "d2"}), E({"d2^2", "d1 + 1"}), E({"d3", "0"})};
  auto g = buchberger(gens, 2, 3);
  for (const auto& m : gens) EXPECT_TRUE(normal_form(m, g).is_zero());
  for (const auto& m : g.elements()) EXPECT_TRUE(normal_form(m, g).is_zero());
}

TEST(NormalForm, ConstantOutsideTheMaximalIdeal) {
  auto g = buchberger({E({"d1"}), E({"d2"})}, 1, 3);
  EXPECT_EQ(normal_form(E({"1"}), g), E({"1"}));
}

TEST(NormalForm, Idempotent) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<ModuleElement> gens;
    for (int i = 0; i < 3; ++i) gens.push_back(testing::random_element(rng, 2, 3, 2, 3));
    std::erase_if(gens, [](const ModuleElement& m) { return m.is_zero(); });
    if (gens.empty()) continue;
    auto g = buchberger(gens, 2, 3);
    for (int k = 0; k < 5; ++k) {
      auto m = testing::random_element(rng, 2, 3, 4, 5);
      auto nf = normal_form(m, g);
      ASSERT_EQ(normal_form(nf, g), nf);
      // m - nf lies in the module
      ASSERT_TRUE(submodule_membership(m - nf, gens).member);
    }
  }
}

TEST(Buchberger, AlreadyABasis) {
  auto g = buchberger({E({"d1"}), E({"d2"})}, 1, 3);
  ASSERT_EQ(g.size(), 2u);
  EXPECT_EQ(g.elements()[0], E({"d1"}));
  EXPECT_EQ(g.elements()[1], E({"d2"}));
}

TEST(Buchberger, Principal) {
  auto g = buchberger({E({"2*d1"})}, 1, 3);
  ASSERT_EQ(g.size(), 1u);
  EXPECT_EQ(g.elements()[0], E({"d1"}));
}

TEST(Buchberger, SVectorsReduceToZero) {
  std::mt19937 rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<ModuleElement> gens;
    for (int i = 0; i < 3; ++i) gens.push_back(testing::random_element(rng, 2, 3, 2, 3));
    std::erase_if(gens, [](const ModuleElement& m) { return m.is_zero(); });
    if (gens.empty()) continue;
    auto g = buchberger(gens, 2, 3);
    for (std::size_t i = 0; i < g.size(); ++i)
      for (std::size_t j = i + 1; j < g.size(); ++j)
        if (auto s = s_vector(g.elements()[i], g.elements()[j], g.order()))
          ASSERT_TRUE(normal_form(*s, g).is_zero());
  }
}

TEST(Buchberger, InvariantUnderPermutationAndScaling) {
  std::mt19937 rng(13);
  std::uniform_int_distribution<int> scale(1, 9);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<ModuleElement> gens;
    for (int i = 0; i < 4; ++i) gens.push_back(testing::random_element(rng, 2, 3, 2, 3));
    std::erase_if(gens, [](const ModuleElement& m) { return m.is_zero(); });
    if (gens.empty()) continue;
    auto other = gens;
    std::shuffle(other.begin(), other.end(), rng);
    for (auto& m : other) {
      Rational c(-scale(rng), scale(rng));
      c.canonicalize();
      m = c * m;
    }
    ASSERT_EQ(buchberger(gens, 2, 3), buchberger(other, 2, 3));
    for (auto base : {BaseOrder::Lex, BaseOrder::DegRevLex}) {
      MonomialOrder pot(base, ModuleExtension::PositionOverTerm);
      ASSERT_EQ(buchberger(gens, 2, 3, pot), buchberger(other, 2, 3, pot));
    }
  }
}

TEST(Buchberger, PairBudgetRaisesResourceError) {
  GroebnerOptions tight;
  tight.pair_budget = 1;
  std::vector<ModuleElement> gens{E({"d1^2 - d2"}), E({"d1*d2 - d3"}), E({"d2^2 - d1*d3"})};
  EXPECT_THROW(buchberger(gens, 1, 3, {}, tight), ResourceError);
}

TEST(Syzygies, DivergenceGivesCurl) {
  auto syz = syzygy_basis({E({"d1"}), E({"d2"}), E({"d3"})}, 1, 3);
  std::vector<ModuleElement> curl{E({"-d2", "d1", "0"}), E({"0", "-d3", "d2"}), E({"-d3", "0", "d1"})};
  EXPECT_EQ(syz.size(), 3u);
  EXPECT_TRUE(module_equal(syz, curl, 3, 3));
}

TEST(Syzygies, UnitHasNoSyzygies) {
  EXPECT_TRUE(syzygy_basis({E({"1"})}, 1, 3).empty());
}

TEST(Syzygies, SoundAndCompleteAgainstLinearAlgebraOracle) {
  std::mt19937 rng(14);
  Ring ring = Ring::differential({"d1", "d2"}, {"x", "y"});
  for (int trial = 0; trial < 15; ++trial) {
    OperatorMatrix a(ring, 2, 3);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 3; ++j) a(i, j) = testing::random_polynomial(rng, 2, 1, 3);
    auto syz = syzygy_basis(a.column_elements(), 2, 2);
    for (const auto& s : syz) {
      ModuleElement image(2, 2);
      for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t i = 0; i < 2; ++i) image[i] += a(i, j) * s[j];
      ASSERT_TRUE(image.is_zero());
    }
    Submodule module(syz, 3, 2);
    for (const auto& s : testing::brute_force_syzygies(a, 4))
      ASSERT_TRUE(module.membership(s).member);
  }
}

TEST(Membership, CofactorsReconstructTheElement) {
  std::vector<ModuleElement> gens{E({"d1", "d2"}), E({"d3", "1"}), E({"d2^2", "d1*d3"})};
  ModuleElement m = P("d1 + d3") * gens[0] + P("2") * gens[1] - P("d2") * gens[2];
  auto r = submodule_membership(m, gens);
  ASSERT_TRUE(r.member);
  EXPECT_EQ(linear_combination(r.cofactors, gens, 2, 3), m);
}

TEST(Membership, ConstantNotInMaximalIdeal) {
  EXPECT_FALSE(submodule_membership(E({"1"}), {E({"d1"}), E({"d2"})}).member);
}

TEST(Membership, GeneratorsAreMembers) {
  std::vector<ModuleElement> gens{E({"d1", "0"}), E({"d2", "d3"})};
  for (std::size_t i = 0; i < gens.size(); ++i) {
    auto r = submodule_membership(gens[i], gens);
    ASSERT_TRUE(r.member);
    EXPECT_EQ(linear_combination(r.cofactors, gens, 2, 3), gens[i]);
  }
}

TEST(ModuleEqual, Examples) {
  EXPECT_TRUE(module_equal({E({"d1", "d2", "d3"})}, {E({"d1", "d2", "d3"})}, 3, 3));
  EXPECT_FALSE(module_equal({E({"d1"})}, {E({"d1^2"})}, 1, 3));
  std::vector<ModuleElement> a{E({"d1", "d2"}), E({"d3", "1"})};
  std::vector<ModuleElement> b{Rational(-3) * a[1], Rational(1, 2) * a[0]};
  EXPECT_TRUE(module_equal(a, b, 2, 3));
}

}  // namespace
}  // namespace lcgp
