#include <memory>
#include <string>

#include <gtest/gtest.h>

#include <dergrade/dergrade.hpp>

#include "support/oracles.hpp"

namespace dergrade {
namespace {

using H = HeisenbergElement;
using Z = FreeAbelianElement;
using HA = AlgebraElement<H>;
using HD = Derivation<Heisenberg>;

const H x_gen{1, 0, 0}, y_gen{0, 1, 0}, z_gen{0, 0, 1};

std::shared_ptr<const PermutationGroup> perm_group(const std::string& name) {
  return std::make_shared<const PermutationGroup>(PermutationGroup::named(name));
}

class HeisenbergGradingTest : public ::testing::Test {
protected:
  std::shared_ptr<const Heisenberg> group = std::make_shared<const Heisenberg>();
  GradingSetup<Heisenberg> setup = GradingSetup<Heisenberg>::derived(group);
  Sampler<Heisenberg> rng{group, 77};

  HD inner(const HA& a) const { return inner_derivation(group, a); }
  HD central23() const { return central_derivation(group, {2, 3}, z_gen); }
  static CosetKey key(std::int64_t i, std::int64_t j) { return {{i, j}}; }
};

TEST_F(HeisenbergGradingTest, SupportCosetExamples) {
  EXPECT_EQ(support_cosets(inner(HA(x_gen)), setup), (std::set<CosetKey>{key(1, 0)}));
  EXPECT_TRUE(support_cosets(HD::zero(group), setup).empty());
  EXPECT_EQ(support_cosets(central23(), setup), (std::set<CosetKey>{key(0, 0)}));
}

TEST_F(HeisenbergGradingTest, SupportClassExamples) {
  EXPECT_EQ(support_classes(inner(HA(x_gen))), (std::set<H>{group->class_representative(x_gen)}));
  EXPECT_EQ(support_classes(central23()), (std::set<H>{z_gen}));
  EXPECT_TRUE(support_classes(HD::zero(group)).empty());
  const H a{2, 4, 3};
  for (const auto& rep : support_classes(inner(HA(a)))) EXPECT_TRUE(group->is_conjugate(rep, a));
}

TEST_F(HeisenbergGradingTest, ProjectExamples) {
  for (const H a : {x_gen, y_gen, H{2, -1, 4}, H{-3, 1, 0}}) EXPECT_EQ(project(inner(HA(a)), setup.key(a), setup), inner(HA(a)));
  EXPECT_TRUE(project(inner(HA(x_gen)), key(5, 5), setup).is_zero());
  const auto d = inner(HA(x_gen) + HA(y_gen));
  EXPECT_EQ(project(d, key(1, 0), setup), inner(HA(x_gen)));
  EXPECT_EQ(project(d, key(0, 1), setup), inner(HA(y_gen)));
}

TEST_F(HeisenbergGradingTest, DecomposeExamples) {
  EXPECT_TRUE(decompose(HD::zero(group), setup).components.empty());

  const auto d = inner(HA(x_gen) + HA(z_gen));
  EXPECT_TRUE(inner(HA(z_gen)).is_zero());
  const auto dec = decompose(d, setup);
  ASSERT_EQ(dec.components.size(), 1u);
  EXPECT_EQ(dec.components.begin()->first, key(1, 0));
  EXPECT_EQ(dec.components.begin()->second, inner(HA(x_gen)));

  const auto central = decompose(central23(), setup);
  ASSERT_EQ(central.components.size(), 1u);
  EXPECT_EQ(central.components.begin()->first, key(0, 0));
}

TEST_F(HeisenbergGradingTest, BracketClosureExamples) {
  const auto report = check_bracket_closure(inner(HA(x_gen)), inner(HA(y_gen)), setup);
  ASSERT_EQ(report.entries.size(), 1u);
  EXPECT_EQ(report.entries[0].expected, key(1, 1));
  EXPECT_EQ(report.entries[0].actual, (std::set<CosetKey>{key(1, 1)}));
  EXPECT_TRUE(report.closed());
  EXPECT_EQ(support_cosets(inner(HA{{1, H{1, 1, 0}}, {-1, H{1, 1, 1}}}), setup), (std::set<CosetKey>{key(1, 1)}));

  EXPECT_TRUE(check_bracket_closure(inner(HA(x_gen)), HD::zero(group), setup).entries.empty());

  // Components at (2,-1) and (1,3) bracket into (3,2).
  const auto mixed = check_bracket_closure(inner(HA(H{2, -1, 0})), inner(HA(H{1, 3, 5})), setup);
  ASSERT_EQ(mixed.entries.size(), 1u);
  EXPECT_EQ(mixed.entries[0].actual, (std::set<CosetKey>{key(3, 2)}));
  EXPECT_TRUE(mixed.closed());
}

TEST_F(HeisenbergGradingTest, DirectSumIsExact) {
  for (int i = 0; i < 200; ++i) {
    const auto d = rng.derivation();
    const auto dec = decompose(d, setup);
    ASSERT_EQ(dec.sum(), d);
    std::set<CosetKey> seen;
    for (const auto& [k, c] : dec.components) {
      ASSERT_FALSE(c.is_zero());
      const auto keys = support_cosets(c, setup);
      ASSERT_EQ(keys, (std::set<CosetKey>{k}));
      ASSERT_TRUE(seen.insert(k).second);
    }
    ASSERT_EQ(seen, support_cosets(d, setup));
  }
}

TEST_F(HeisenbergGradingTest, SupportCosetsAreSound) {
  const std::vector<HD> fixtures{inner(HA(x_gen)), inner(HA(x_gen) + HA(y_gen)), central23(), rng.derivation(),
                                 rng.derivation()};
  std::size_t nonzero = 0;
  for (const auto& d : fixtures) {
    const auto keys = support_cosets(d, setup);
    for (int i = 0; i < 2000; ++i) {
      const auto phi = rng.arrow_for(d, 5);
      if (character_value(d, phi).is_zero()) continue;
      ++nonzero;
      ASSERT_TRUE(keys.contains(setup.key(source(phi))));
    }
  }
  EXPECT_GT(nonzero, 2000u);
}

TEST_F(HeisenbergGradingTest, BracketClosureOnRandomPairs) {
  for (int i = 0; i < 100; ++i) {
    const auto report = check_bracket_closure(rng.derivation(), rng.derivation(), setup);
    for (const auto& e : report.entries) ASSERT_TRUE(e.closed) << e.left << " " << e.right;
  }
}

TEST_F(HeisenbergGradingTest, ProjectionsAreDerivations) {
  for (int i = 0; i < 40; ++i) {
    const auto d = rng.derivation();
    for (const auto& k : support_cosets(d, setup)) {
      const auto p = project(d, k, setup);
      ASSERT_FALSE(p.relator_violation().has_value());
      for (int j = 0; j < 100; ++j) ASSERT_TRUE(satisfies_leibniz(p, HA(rng.element(6)), HA(rng.element(6))));
    }
  }
}

TEST_F(HeisenbergGradingTest, CentralDerivationsLocalizeAtIdentity) {
  for (int i = 0; i < 100; ++i) {
    const auto d = rng.central();
    const auto dec = decompose(d, setup);
    if (d.is_zero()) {
      ASSERT_TRUE(dec.components.empty());
      continue;
    }
    ASSERT_EQ(dec.components.size(), 1u);
    ASSERT_EQ(dec.components.begin()->first, setup.identity_key());
  }
  for (std::int64_t m = -3; m <= 3; ++m) EXPECT_EQ(central_component_key({1, 0}, H{0, 0, m}, setup), key(0, 0));
  EXPECT_THROW(central_component_key({1, 0}, x_gen, setup), centrality_error);
}

TEST_F(HeisenbergGradingTest, NonTrivialGrading) {
  const auto d = inner(HA(x_gen));
  ASSERT_FALSE(d.is_zero());
  ASSERT_NE(setup.key(x_gen), setup.identity_key());
  EXPECT_EQ(decompose(d, setup).components.begin()->first, setup.key(x_gen));
}

TEST_F(HeisenbergGradingTest, InnerGradedDecompositionExamples) {
  const auto single = inner_graded_decomposition<Heisenberg>({1}, {x_gen}, setup);
  ASSERT_EQ(single.decomposition.components.size(), 1u);
  EXPECT_EQ(single.witnesses.at(key(1, 0)), HA(x_gen));
  EXPECT_TRUE(single.certified);

  const auto pair = inner_graded_decomposition<Heisenberg>({1, 1}, {x_gen, y_gen}, setup);
  ASSERT_EQ(pair.decomposition.components.size(), 2u);
  EXPECT_TRUE(pair.decomposition.components.contains(key(1, 0)));
  EXPECT_TRUE(pair.decomposition.components.contains(key(0, 1)));
  EXPECT_EQ(pair.witnesses.at(key(1, 0)), HA(x_gen));
  EXPECT_EQ(pair.witnesses.at(key(0, 1)), HA(y_gen));
  EXPECT_TRUE(pair.certified);

  const auto central = inner_graded_decomposition<Heisenberg>({1, 2}, {z_gen, H{0, 0, -4}}, setup);
  EXPECT_TRUE(central.decomposition.components.empty());
  EXPECT_TRUE(central.certified);
}

TEST_F(HeisenbergGradingTest, InnerGradedDecompositionCertifiesRandomInputs) {
  for (int i = 0; i < 100; ++i) {
    std::vector<Coefficient> coeffs;
    std::vector<H> elems;
    for (auto n = rng.integer(1, 4); n > 0; --n) {
      coeffs.push_back(rng.coefficient());
      elems.push_back(rng.element(5));
    }
    const auto r = inner_graded_decomposition(coeffs, elems, setup);
    ASSERT_TRUE(r.certified);
    ASSERT_EQ(r.decomposition.sum(), r.decomposition.base);
  }
}

TEST(FreeAbelianGradingTest, DirectSumAndClosure) {
  auto z2 = std::make_shared<const FreeAbelian>(2);
  const auto setup = GradingSetup<FreeAbelian>::derived(z2);
  Sampler<FreeAbelian> rng(z2, 8);
  for (int i = 0; i < 100; ++i) {
    const auto d = rng.derivation(), e = rng.derivation();
    ASSERT_EQ(decompose(d, setup).sum(), d);
    ASSERT_TRUE(check_bracket_closure(d, e, setup).closed());
  }
  const auto d = central_derivation(z2, {1, 0}, Z{{0, 1}});
  EXPECT_EQ(central_component_key({1, 0}, Z{{0, 1}}, setup), (CosetKey{{0, 1}}));
  EXPECT_EQ(support_cosets(d, setup), (std::set<CosetKey>{{{0, 1}}}));
  EXPECT_EQ(central_component_key({1, 0}, Z{{0, 0}}, setup), setup.identity_key());
}

TEST(PermutationGradingTest, AlternatingQuotientOfS4) {
  auto S4 = perm_group("S4");
  const auto setup = GradingSetup<PermutationGroup>::derived(S4);
  Sampler<PermutationGroup> rng(S4, 12);
  const auto t = Permutation::from_cycles(4, {{1, 2}});
  // The inner derivation of an odd, non-central element sits in the odd coset.
  const auto d = inner_derivation(S4, AlgebraElement<Permutation>(t));
  ASSERT_FALSE(d.is_zero());
  EXPECT_EQ(support_cosets(d, setup), (std::set<CosetKey>{setup.key(t)}));
  EXPECT_NE(setup.key(t), setup.identity_key());
  for (int i = 0; i < 50; ++i) {
    const auto a = rng.derivation(), b = rng.derivation();
    ASSERT_EQ(decompose(a, setup).sum(), a);
    ASSERT_TRUE(check_bracket_closure(a, b, setup).closed());
  }
}

TEST(PermutationGradingTest, DihedralGradingByKleinFour) {
  auto D4 = perm_group("D4");
  const auto setup = GradingSetup<PermutationGroup>::derived(D4);
  EXPECT_EQ(setup.quotient().index(), 4u);
  Sampler<PermutationGroup> rng(D4, 3);
  for (int i = 0; i < 50; ++i) {
    const auto a = rng.derivation(), b = rng.derivation();
    const auto dec = decompose(a, setup);
    ASSERT_EQ(dec.sum(), a);
    for (const auto& [k, c] : dec.components) ASSERT_EQ(support_cosets(c, setup), (std::set<CosetKey>{k}));
    ASSERT_TRUE(check_bracket_closure(a, b, setup).closed());
  }
}

TEST(GradingSetupTest, PerfectGroupIsRejected) {
  auto A5 = perm_group("A5");
  try {
    GradingSetup<PermutationGroup>::derived(A5);
    FAIL() << "A5 = A5' must give a trivial grading";
  } catch (const setup_rejected& e) {
    EXPECT_EQ(e.why(), setup_rejected::reason::trivial_grading);
    EXPECT_NE(std::string(e.what()).find("|G/N| = 1"), std::string::npos);
  }
  auto S4 = perm_group("S4");
  EXPECT_THROW(GradingSetup<PermutationGroup>(S4, PermutationQuotient(S4, S4->generators())), setup_rejected);
}

TEST(StemTest, Examples) {
  EXPECT_TRUE(is_stem(Heisenberg{}));
  EXPECT_FALSE(is_stem(FreeAbelian(2)));
  EXPECT_TRUE(is_stem(*perm_group("S4")));
  EXPECT_TRUE(is_stem(*perm_group("D4")));
  EXPECT_FALSE(is_stem(*perm_group("C6")));
}

TEST(StemTest, ZDerDemo) {
  const auto h = zder_grading_demo(std::make_shared<const Heisenberg>());
  EXPECT_TRUE(h.stem);
  EXPECT_FALSE(h.entries.empty());
  for (const auto& e : h.entries) EXPECT_EQ(e.key, (CosetKey{{0, 0}}));
  EXPECT_EQ(h.distinct_nonidentity_keys, 0u);

  const auto z = zder_grading_demo(std::make_shared<const FreeAbelian>(2));
  EXPECT_FALSE(z.stem);
  EXPECT_GE(z.distinct_nonidentity_keys, 2u);
}

} // namespace
} // namespace dergrade
