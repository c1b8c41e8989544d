#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "coset_key.hpp"
#include "derivation.hpp"
#include "error.hpp"
#include "group.hpp"

namespace dergrade {

/// A group together with N ⊴ G such that G/N is abelian and nontrivial.
template <GroupKernel G>
class GradingSetup {
public:
  using group_type = G;
  using element_type = typename G::element_type;
  using quotient_type = typename quotient_traits<G>::type;

  /// Rejects setups in which every generator lies in N (|G/N| = 1).
  GradingSetup(std::shared_ptr<const G> group, quotient_type quotient)
      : group_(std::move(group)), quotient_(std::move(quotient)) {
    const auto e = quotient_.identity_key();
    for (const auto& s : group_->generators())
      if (quotient_.key(s) != e) return;
    throw setup_rejected(setup_rejected::reason::trivial_grading,
                         "trivial grading: every generator of " + group_->name() +
                             " lies in N, so |G/N| = 1 (perfect group or trivial quotient)");
  }

  /// N = G', the abelianization grading.
  static GradingSetup derived(std::shared_ptr<const G> group) {
    auto q = quotient_traits<G>::derived(group);
    return GradingSetup(std::move(group), std::move(q));
  }

  const G& group() const noexcept { return *group_; }
  const std::shared_ptr<const G>& group_ptr() const noexcept { return group_; }
  const quotient_type& quotient() const noexcept { return quotient_; }

  CosetKey key(const element_type& g) const { return quotient_.key(g); }
  CosetKey identity_key() const { return quotient_.identity_key(); }
  CosetKey compose(const CosetKey& k, const CosetKey& l) const { return quotient_.compose(k, l); }

private:
  std::shared_ptr<const G> group_;
  quotient_type quotient_;
};

/// d = Σ_k components[k], with components[k] supported over the coset k.
/// Zero components are omitted.
template <GroupKernel G>
struct GradedDecomposition {
  Derivation<G> base;
  std::map<CosetKey, Derivation<G>> components;

  Derivation<G> sum() const {
    auto out = Derivation<G>::zero(base.group_ptr());
    for (const auto& [k, d] : components) out += d;
    return out;
  }
};

/// Keys of { s^-1 k : s generator, k ∈ supp d(s) }. Every arrow (u, v) with
/// χ^d(u, v) != 0 has key(v^-1 u) in this set: the sources s^-1 k span the
/// finitely many conjugacy classes carrying the support, and each class sits
/// inside a single coset because G/N is abelian.
template <GroupKernel G>
std::set<CosetKey> support_cosets(const Derivation<G>& d, const GradingSetup<G>& setup) {
  std::set<CosetKey> out;
  const auto& gens = d.group().generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const auto s_inv = inv(gens[i]);
    for (const auto& [k, c] : d.image(i).terms()) out.insert(setup.key(mul(s_inv, k)));
  }
  return out;
}

/// Canonical representatives of the conjugacy classes of the sources s^-1 k.
template <GroupKernel G>
std::set<typename G::element_type> support_classes(const Derivation<G>& d) {
  std::set<typename G::element_type> out;
  const auto& group = d.group();
  const auto& gens = group.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const auto s_inv = inv(gens[i]);
    for (const auto& [k, c] : d.image(i).terms()) out.insert(group.class_representative(mul(s_inv, k)));
  }
  return out;
}

/// Restriction of χ^d to arrows whose source lies in the coset `key`,
/// computed on generator images.
template <GroupKernel G>
Derivation<G> project(const Derivation<G>& d, const CosetKey& key, const GradingSetup<G>& setup) {
  using algebra_type = typename Derivation<G>::algebra_type;
  const auto& gens = d.group().generators();
  std::vector<algebra_type> images(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const auto s_inv = inv(gens[i]);
    for (const auto& [k, c] : d.image(i).terms())
      if (setup.key(mul(s_inv, k)) == key) images[i].add_term(c, k);
  }
  return Derivation<G>::from_table_unchecked(d.group_ptr(), std::move(images));
}

template <GroupKernel G>
GradedDecomposition<G> decompose(const Derivation<G>& d, const GradingSetup<G>& setup) {
  GradedDecomposition<G> out{d, {}};
  for (const auto& key : support_cosets(d, setup)) {
    auto component = project(d, key, setup);
    if (!component.is_zero()) out.components.emplace(key, std::move(component));
  }
  return out;
}

struct ClosureEntry {
  CosetKey left;
  CosetKey right;
  CosetKey expected;
  std::set<CosetKey> actual;
  bool closed;
};

struct BracketClosureReport {
  std::vector<ClosureEntry> entries;

  bool closed() const {
    for (const auto& e : entries)
      if (!e.closed) return false;
    return true;
  }
};

/// For every pair of nonzero components (k of d, l of e), checks that the
/// bracket of the two components is supported over the single coset kl.
template <GroupKernel G>
BracketClosureReport check_bracket_closure(const Derivation<G>& d, const Derivation<G>& e,
                                           const GradingSetup<G>& setup) {
  BracketClosureReport report;
  const auto dd = decompose(d, setup);
  const auto de = decompose(e, setup);
  for (const auto& [k, dk] : dd.components)
    for (const auto& [l, el] : de.components) {
      auto expected = setup.compose(k, l);
      auto actual = support_cosets(bracket(dk, el), setup);
      const bool closed = actual.empty() || (actual.size() == 1 && *actual.begin() == expected);
      report.entries.push_back({k, l, std::move(expected), std::move(actual), closed});
    }
  return report;
}

/// Z(G) ⊆ G'.
template <GroupKernel G>
bool is_stem(const G& group) {
  return group.is_stem();
}

/// Coset carrying the central derivation g -> τ(g) g z: every support arrow
/// (gz, g) has source z.
template <GroupKernel G>
CosetKey central_component_key(const std::vector<Coefficient>& tau, const typename G::element_type& z,
                               const GradingSetup<G>& setup) {
  if (!setup.group().is_central(z)) throw centrality_error("element " + to_string(z) + " is not central");
  if (tau.size() != setup.group().abelian_rank()) throw spec_error("tau has the wrong length");
  return setup.key(z);
}

template <GroupElement E>
struct CentralDerivationEntry {
  std::vector<Coefficient> tau;
  E z;
  CosetKey key;
};

template <GroupKernel G>
struct ZDerGradingReport {
  bool stem;
  std::vector<CentralDerivationEntry<typename G::element_type>> entries;
  /// Nonzero component keys of the sum of all sampled central derivations.
  std::set<CosetKey> component_keys;
  std::size_t distinct_nonidentity_keys;
};

/// Builds d_{τ,z} for every unit τ on the abelian basis and every sampled
/// central z, and decomposes their sum under N = G'. For stem groups every
/// key is the identity; otherwise the keys spread over several cosets.
template <GroupKernel G>
ZDerGradingReport<G> zder_grading_demo(std::shared_ptr<const G> group) {
  auto setup = GradingSetup<G>::derived(group);
  ZDerGradingReport<G> report{group->is_stem(), {}, {}, 0};
  auto total = Derivation<G>::zero(group);
  const auto rank = group->abelian_rank();
  for (const auto& z : group->central_samples())
    for (std::size_t i = 0; i < rank; ++i) {
      std::vector<Coefficient> tau(rank);
      tau[i] = Coefficient(1);
      total += central_derivation(group, tau, z);
      report.entries.push_back({tau, z, central_component_key(tau, z, setup)});
    }
  const auto dec = decompose(total, setup);
  for (const auto& [k, c] : dec.components) {
    report.component_keys.insert(k);
    if (k != setup.identity_key()) ++report.distinct_nonidentity_keys;
  }
  return report;
}

template <GroupKernel G>
struct InnerGradedDecomposition {
  GradedDecomposition<G> decomposition;
  std::map<CosetKey, AlgebraElement<typename G::element_type>> witnesses;
  /// Every component is the inner derivation of its witness.
  bool certified;
};

/// Decomposes the inner derivation of Σ a_i y_i and certifies each
/// component as inner, with witness Σ_{key(y_i) = k} a_i y_i.
template <GroupKernel G>
InnerGradedDecomposition<G> inner_graded_decomposition(const std::vector<Coefficient>& coefficients,
                                                       const std::vector<typename G::element_type>& elements,
                                                       const GradingSetup<G>& setup) {
  using algebra_type = AlgebraElement<typename G::element_type>;
  if (coefficients.size() != elements.size()) throw spec_error("coefficient and element lists differ in length");
  algebra_type a;
  std::map<CosetKey, algebra_type> witnesses;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    a.add_term(coefficients[i], elements[i]);
    witnesses[setup.key(elements[i])].add_term(coefficients[i], elements[i]);
  }
  std::erase_if(witnesses, [](const auto& kv) { return kv.second.is_zero(); });
  auto dec = decompose(inner_derivation(setup.group_ptr(), a), setup);
  bool certified = true;
  for (const auto& [k, component] : dec.components) {
    auto it = witnesses.find(k);
    certified = certified && it != witnesses.end() && is_inner_witness(component, it->second);
  }
  // Witnesses without a component must generate the zero derivation.
  for (const auto& [k, w] : witnesses)
    if (!dec.components.contains(k))
      certified = certified && inner_derivation(setup.group_ptr(), w).is_zero();
  return {std::move(dec), std::move(witnesses), certified};
}

} // namespace dergrade
