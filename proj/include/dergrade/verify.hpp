#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "derivation.hpp"
#include "grading.hpp"
#include "random.hpp"

namespace dergrade {

struct PropertyResult {
  std::string name;
  std::size_t checks = 0;
  std::size_t failures = 0;

  bool passed() const { return failures == 0; }
};

struct VerificationBudget {
  std::size_t samples = 50;
  std::size_t word_length = 4;
};

/// Runs the named invariant suites on `fixtures` plus seeded random
/// derivations: leibniz, char-composition, bracket-equivalence, closure,
/// direct-sum, support-soundness.
template <GroupKernel G>
std::vector<PropertyResult> run_verification(const GradingSetup<G>& setup, std::vector<Derivation<G>> fixtures,
                                             std::uint64_t seed, const VerificationBudget& budget) {
  Sampler<G> rng(setup.group_ptr(), seed);
  const auto L = budget.word_length;
  const auto n = budget.samples;
  while (fixtures.size() < 2) fixtures.push_back(rng.derivation());
  auto pick = [&]() -> Derivation<G> {
    auto i = rng.integer(0, static_cast<std::int64_t>(fixtures.size()));
    return i == static_cast<std::int64_t>(fixtures.size()) ? rng.derivation() : fixtures[static_cast<std::size_t>(i)];
  };
  using algebra_type = typename Derivation<G>::algebra_type;

  PropertyResult leibniz{"leibniz"};
  for (const auto& d : fixtures)
    for (std::size_t i = 0; i < n; ++i) {
      ++leibniz.checks;
      if (!satisfies_leibniz(d, algebra_type(rng.element(L)), algebra_type(rng.element(L)))) ++leibniz.failures;
    }

  PropertyResult composition{"char-composition"};
  for (const auto& d : fixtures)
    for (std::size_t i = 0; i < n; ++i) {
      auto phi = rng.arrow_for(d, L);
      auto psi = rng.composable_after(phi, L);
      ++composition.checks;
      if (!character_composes(d, phi, psi)) ++composition.failures;
    }

  PropertyResult equivalence{"bracket-equivalence"};
  for (std::size_t i = 0; i < n; ++i) {
    auto d = pick();
    auto e = pick();
    auto de = bracket(d, e);
    for (std::size_t j = 0; j < 4; ++j) {
      auto phi = rng.arrow_for(de, L);
      ++equivalence.checks;
      if (bracket_character_value(d, e, phi) != character_value(de, phi)) ++equivalence.failures;
    }
  }

  PropertyResult closure{"closure"};
  for (std::size_t i = 0; i < n; ++i) {
    auto report = check_bracket_closure(pick(), pick(), setup);
    for (const auto& entry : report.entries) {
      ++closure.checks;
      if (!entry.closed) ++closure.failures;
    }
  }

  PropertyResult direct_sum{"direct-sum"};
  for (std::size_t i = 0; i < n; ++i) {
    auto d = pick();
    auto dec = decompose(d, setup);
    ++direct_sum.checks;
    bool ok = dec.sum() == d;
    std::set<CosetKey> seen;
    for (const auto& [k, c] : dec.components)
      for (const auto& key : support_cosets(c, setup)) ok = ok && key == k && seen.insert(key).second;
    if (!ok) ++direct_sum.failures;
  }

  PropertyResult soundness{"support-soundness"};
  for (const auto& d : fixtures) {
    const auto keys = support_cosets(d, setup);
    for (std::size_t i = 0; i < n; ++i) {
      auto phi = rng.arrow_for(d, L);
      ++soundness.checks;
      if (!character_value(d, phi).is_zero() && !keys.contains(setup.key(source(phi)))) ++soundness.failures;
    }
  }

  return {leibniz, composition, equivalence, closure, direct_sum, soundness};
}

} // namespace dergrade
