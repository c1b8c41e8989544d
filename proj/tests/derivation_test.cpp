#include <memory>

#include <gtest/gtest.h>

#include <dergrade/dergrade.hpp>

#include "support/oracles.hpp"

namespace dergrade {
namespace {

using H = HeisenbergElement;
using Z = FreeAbelianElement;
using HA = AlgebraElement<H>;
using ZA = AlgebraElement<Z>;
using HD = Derivation<Heisenberg>;

const H x_gen{1, 0, 0}, y_gen{0, 1, 0}, z_gen{0, 0, 1};

class HeisenbergDerivationTest : public ::testing::Test {
protected:
  std::shared_ptr<const Heisenberg> group = std::make_shared<const Heisenberg>();
  Sampler<Heisenberg> rng{group, 2024};

  HD inner(const HA& a) const { return inner_derivation(group, a); }
  HD central23() const { return central_derivation(group, {2, 3}, z_gen); }
};

TEST_F(HeisenbergDerivationTest, InnerExamples) {
  const auto d = inner(HA(x_gen));
  EXPECT_EQ(d.image(1), (HA{{1, H{1, 1, 0}}, {-1, H{1, 1, 1}}}));
  EXPECT_TRUE(d.image(0).is_zero());
  EXPECT_TRUE(inner(HA(H{})).is_zero());
  auto z2 = std::make_shared<const FreeAbelian>(2);
  EXPECT_TRUE(inner_derivation(z2, ZA{{3, Z{{1, -2}}}, {Coefficient::i(), Z{{0, 4}}}}).is_zero());
}

TEST_F(HeisenbergDerivationTest, CentralExamples) {
  EXPECT_EQ(central23().apply(x_gen), (HA{{2, H{1, 0, 1}}}));
  EXPECT_TRUE(central_derivation(group, {0, 0}, z_gen).is_zero());
  auto z2 = std::make_shared<const FreeAbelian>(2);
  EXPECT_EQ(central_derivation(z2, {1, 0}, Z{{0, 1}}).apply(Z{{1, 0}}), ZA(Z{{1, 1}}));
  EXPECT_THROW(central_derivation(group, {2, 3}, x_gen), centrality_error);
  EXPECT_THROW(central_derivation(group, {2}, z_gen), spec_error);
}

TEST_F(HeisenbergDerivationTest, CentralDerivationIsCharacterTimesTranslation) {
  const auto d = central23();
  for (const auto& g : oracle::heisenberg_box(2)) {
    // tau is additive on the abelianization (a, b).
    const Coefficient tau(2 * g.a + 3 * g.b);
    ASSERT_EQ(d.apply(g), tau * HA(oracle::matrix_product(g, z_gen)));
  }
}

TEST_F(HeisenbergDerivationTest, ApplyExamples) {
  const HA a{{1, H{2, -1, 0}}, {-3, H{0, 1, 4}}};
  const auto d = inner(a);
  for (int i = 0; i < 50; ++i) {
    const auto g = rng.element(6);
    ASSERT_EQ(d.apply(g), HA(g) * a - a * HA(g));
  }
  EXPECT_TRUE(d.apply(H{}).is_zero());
  EXPECT_TRUE(central23().apply(H{}).is_zero());

  // (1,1,0) is the word y x.
  const Word yx{{1, 1}, {0, 1}};
  EXPECT_EQ(central23().apply(H{1, 1, 0}), (HA{{5, H{1, 1, 1}}}));
  EXPECT_EQ(oracle::leibniz_by_letters(central23(), yx), (HA{{5, H{1, 1, 1}}}));
}

TEST_F(HeisenbergDerivationTest, ApplyMatchesLetterExpansion) {
  for (int i = 0; i < 100; ++i) {
    const auto d = rng.derivation();
    const auto w = rng.word(6);
    const auto expected = oracle::leibniz_by_letters(d, w);
    ASSERT_EQ(d.apply(evaluate(*group, w)), expected);
    ASSERT_EQ(d.apply(w), expected);
  }
}

TEST(DerivationOracleTest, ApplyMatchesLetterExpansionOnOtherKernels) {
  auto z3 = std::make_shared<const FreeAbelian>(3);
  Sampler<FreeAbelian> zr(z3, 4);
  for (int i = 0; i < 100; ++i) {
    const auto d = zr.derivation();
    const auto w = zr.word(6);
    ASSERT_EQ(d.apply(evaluate(*z3, w)), oracle::leibniz_by_letters(d, w));
  }
  auto s4 = std::make_shared<const PermutationGroup>(PermutationGroup::named("S4"));
  Sampler<PermutationGroup> sr(s4, 4);
  for (int i = 0; i < 100; ++i) {
    const auto d = sr.derivation();
    const auto w = sr.word(6);
    ASSERT_EQ(d.apply(evaluate(*s4, w)), oracle::leibniz_by_letters(d, w));
  }
}

TEST_F(HeisenbergDerivationTest, CharacterExamples) {
  const auto d = inner(HA(x_gen));
  EXPECT_EQ(character_value(d, Arrow<H>{{1, 1, 0}, y_gen}), Coefficient(1));
  // Target case: u = a v, so T(u, v) = a.
  const Arrow<H> target_case{mul(x_gen, y_gen), y_gen};
  EXPECT_EQ(target_case.u, (H{1, 1, 1}));
  EXPECT_EQ(target(target_case), x_gen);
  EXPECT_EQ(character_value(d, target_case), Coefficient(-1));
  EXPECT_EQ(character_value(d, Arrow<H>{{7, 7, 7}, y_gen}), Coefficient(0));
}

TEST_F(HeisenbergDerivationTest, InnerCharacterFormulaExamples) {
  const H a = x_gen;
  const Arrow<H> source_case{{1, 1, 0}, y_gen};
  EXPECT_EQ(source(source_case), a);
  EXPECT_NE(target(source_case), a);
  EXPECT_EQ(inner_character(a, source_case), Coefficient(1));
  // v = x commutes with a, so S = T = a and d_a(v) = 0.
  const Arrow<H> overlap{mul(a, x_gen), x_gen};
  EXPECT_EQ(source(overlap), a);
  EXPECT_EQ(target(overlap), a);
  EXPECT_EQ(inner_character(a, overlap), Coefficient(0));
  EXPECT_TRUE(inner(HA(a)).apply(x_gen).is_zero());
  EXPECT_EQ(inner_character(a, Arrow<H>{{4, 0, 0}, {0, 3, 0}}), Coefficient(0));
}

// Every arrow (u, v) with v a generator and u in supp d_a(v), plus 20
// random arrows off the support, for a in the box of radius 2.
TEST_F(HeisenbergDerivationTest, InnerCharacterMatchesIndicatorFormula) {
  for (const auto& a : oracle::heisenberg_box(2)) {
    const auto d = inner(HA(a));
    for (const auto& v : group->generators())
      for (const auto& u : d.apply(v).support()) {
        const Arrow<H> phi{u, v};
        ASSERT_EQ(character_value(d, phi), inner_character(a, phi));
      }
    for (int i = 0; i < 20; ++i) {
      const auto phi = rng.arrow(4);
      ASSERT_EQ(character_value(d, phi), inner_character(a, phi));
    }
  }
}

TEST_F(HeisenbergDerivationTest, LinearStructure) {
  const auto d = rng.derivation();
  EXPECT_TRUE((d + Coefficient(-1) * d).is_zero());
  const HA a{{1, x_gen}, {Coefficient::i(), H{1, 2, 3}}};
  EXPECT_EQ(Coefficient(2) * inner(a), inner(Coefficient(2) * a));
  for (int i = 0; i < 200; ++i) {
    const auto e = rng.derivation(), f = rng.derivation();
    const auto phi = rng.arrow_for(e + f, 5);
    ASSERT_EQ(character_value(e + f, phi), character_value(e, phi) + character_value(f, phi));
  }
}

TEST_F(HeisenbergDerivationTest, BracketExamples) {
  const auto da = inner(HA(x_gen)), db = inner(HA(y_gen));
  const auto br = bracket(da, db);
  EXPECT_EQ(br, inner(HA{{1, H{1, 1, 0}}, {-1, H{1, 1, 1}}}));
  EXPECT_TRUE(bracket(da, da).is_zero());
  EXPECT_TRUE(bracket(da, HD::zero(group)).is_zero());

  EXPECT_EQ(br.apply(x_gen), (HA{{2, H{2, 1, 1}}, {-1, H{2, 1, 2}}, {-1, H{2, 1, 0}}}));
  const Arrow<H> phi{{2, 1, 1}, x_gen};
  EXPECT_EQ(bracket_character_value(da, db, phi), Coefficient(2));
  EXPECT_EQ(character_value(br, phi), Coefficient(2));
  EXPECT_EQ(bracket_character_value(da, HD::zero(group), phi), Coefficient(0));
}

TEST_F(HeisenbergDerivationTest, BracketRoutesAgree) {
  for (int i = 0; i < 50; ++i) {
    const auto d = rng.derivation(), e = rng.derivation();
    const auto de = bracket(d, e);
    for (int j = 0; j < 20; ++j) {
      const auto phi = rng.arrow_for(de, 4);
      ASSERT_EQ(bracket_character_value(d, e, phi), character_value(de, phi));
    }
  }
}

TEST_F(HeisenbergDerivationTest, BracketIsLieBracket) {
  for (int i = 0; i < 30; ++i) {
    const auto a = rng.derivation(), b = rng.derivation(), c = rng.derivation();
    ASSERT_EQ(bracket(a, b), Coefficient(-1) * bracket(b, a));
    ASSERT_TRUE((bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) + bracket(c, bracket(a, b))).is_zero());
  }
}

TEST_F(HeisenbergDerivationTest, LeibnizHoldsForEveryConstructor) {
  for (int i = 0; i < 500; ++i) {
    const auto d = i % 3 == 0 ? rng.inner() : i % 3 == 1 ? rng.central() : rng.tabular();
    ASSERT_TRUE(satisfies_leibniz(d, HA(rng.element(6)), HA(rng.element(6))));
  }
  for (int i = 0; i < 50; ++i) ASSERT_TRUE(satisfies_leibniz(rng.derivation(), rng.algebra(), rng.algebra()));
}

TEST_F(HeisenbergDerivationTest, IdentityAndInverseRules) {
  for (int i = 0; i < 200; ++i) {
    const auto d = rng.derivation();
    const auto g = rng.element(6);
    ASSERT_TRUE(d.apply(H{}).is_zero());
    const HA g_inv(inv(g));
    ASSERT_EQ(d.apply(inv(g)), Coefficient(-1) * (g_inv * d.apply(g) * g_inv));
  }
}

TEST_F(HeisenbergDerivationTest, CharacterComposes) {
  for (int i = 0; i < 300; ++i) {
    const auto d = rng.derivation();
    const auto phi = rng.arrow_for(d, 5);
    ASSERT_TRUE(character_composes(d, phi, rng.composable_after(phi, 5)));
  }
  EXPECT_THROW(character_composes(central23(), Arrow<H>{x_gen, H{}}, Arrow<H>{y_gen, H{}}), composition_error);
}

TEST_F(HeisenbergDerivationTest, InnerDerivationsFormAnIdeal) {
  for (int i = 0; i < 100; ++i) {
    const auto d = rng.derivation();
    const auto a = rng.algebra();
    ASSERT_EQ(bracket(d, inner(a)), inner(d.apply(a)));
  }
}

TEST_F(HeisenbergDerivationTest, CorruptedTableIsNotADerivation) {
  auto images = inner(HA(x_gen) + HA(H{0, 2, 1})).images();
  images[0].add_term(1, H{5, 0, 0});
  EXPECT_THROW(HD::from_table(group, images), spec_error);

  const auto broken = HD::from_table_unchecked(group, images);
  ASSERT_TRUE(broken.relator_violation().has_value());
  bool violated = false;
  for (int i = 0; i < 1000 && !violated; ++i)
    violated = !satisfies_leibniz(broken, HA(rng.element(4)), HA(rng.element(4)));
  EXPECT_TRUE(violated);
}

TEST_F(HeisenbergDerivationTest, TableValidationAcceptsDerivations) {
  for (int i = 0; i < 20; ++i) {
    const auto d = rng.derivation();
    EXPECT_NO_THROW(HD::from_table(group, d.images()));
  }
  EXPECT_THROW(HD::from_table(group, {HA(x_gen)}), spec_error);
}

TEST_F(HeisenbergDerivationTest, InnerWitnesses) {
  const HA w{{1, x_gen}, {-2, H{1, -1, 2}}};
  EXPECT_TRUE(is_inner_witness(inner(w), w));
  EXPECT_TRUE(is_inner_witness(HD::zero(group), HA(H{})));
  for (int i = 0; i < 20; ++i) EXPECT_FALSE(is_inner_witness(central23(), rng.algebra()));

  // Bounded search recovers a witness for an inner derivation...
  const auto found = oracle::find_inner_witness(inner(w), oracle::heisenberg_box(2));
  ASSERT_TRUE(found.has_value());
  EXPECT_TRUE(is_inner_witness(inner(w), *found));
  // ...and finds none for a nonzero central derivation.
  EXPECT_FALSE(oracle::find_inner_witness(central23(), oracle::heisenberg_box(2)).has_value());
}

TEST(DerivationGroupTest, MixedGroupsAreRejected) {
  auto z2 = std::make_shared<const FreeAbelian>(2);
  auto z3 = std::make_shared<const FreeAbelian>(3);
  EXPECT_THROW(Derivation<FreeAbelian>::zero(z2) + Derivation<FreeAbelian>::zero(z3), group_mismatch);
  EXPECT_THROW(Derivation<FreeAbelian>::zero(z2).apply(Z{{1, 2, 3}}), group_mismatch);
}

TEST(DerivationGroupTest, FreeAbelianTablesAreUnconstrained) {
  auto z2 = std::make_shared<const FreeAbelian>(2);
  const auto d = Derivation<FreeAbelian>::from_table(z2, {ZA(Z{{4, 4}}), ZA{{Coefficient::i(), Z{{-1, 0}}}}});
  EXPECT_EQ(d.apply(Z{{1, 1}}), (ZA{{1, Z{{4, 5}}}, {Coefficient::i(), Z{{0, 0}}}}));
}

} // namespace
} // namespace dergrade
