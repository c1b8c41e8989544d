#pragma once

#include <concepts>
#include <cstdint>
#include <string>
#include <vector>

#include "coset_key.hpp"
#include "word.hpp"

namespace dergrade {

/// Value type of a group element with normal-form payload. `mul`, `inv` and
/// `same_group` are found by ADL; ordering is the fixed total order used for
/// algebra term maps.
template <class E>
concept GroupElement = std::totally_ordered<E> && std::copyable<E> && requires(const E& a, const E& b) {
  { mul(a, b) } -> std::same_as<E>;
  { inv(a) } -> std::same_as<E>;
  { same_group(a, b) } -> std::same_as<bool>;
  { to_string(a) } -> std::convertible_to<std::string>;
};

/// A concrete group kernel: generating set, normal words, relators for the
/// validity check of generator tables, and the conjugacy / centre oracles.
template <class G>
concept GroupKernel = requires(const G& g, const typename G::element_type& x) {
  requires GroupElement<typename G::element_type>;
  { g.name() } -> std::convertible_to<std::string>;
  { g.identity() } -> std::same_as<typename G::element_type>;
  { g.generators() } -> std::convertible_to<const std::vector<typename G::element_type>&>;
  { g.generator_names() } -> std::convertible_to<const std::vector<std::string>&>;
  { g.word_bases() } -> std::convertible_to<const std::vector<WordBase<typename G::element_type>>&>;
  { g.normal_word(x) } -> std::same_as<std::vector<Syllable>>;
  { g.relators() } -> std::same_as<std::vector<Word>>;
  { g.contains(x) } -> std::same_as<bool>;
  { g.is_central(x) } -> std::same_as<bool>;
  { g.is_conjugate(x, x) } -> std::same_as<bool>;
  { g.class_representative(x) } -> std::same_as<typename G::element_type>;
  { g.abelian_rank() } -> std::same_as<std::size_t>;
  { g.abelian_coordinates(x) } -> std::same_as<std::vector<std::int64_t>>;
  { g.is_stem() } -> std::same_as<bool>;
  { g.center_description() } -> std::convertible_to<std::string>;
  { g.derived_subgroup_description() } -> std::convertible_to<std::string>;
  { g.central_samples() } -> std::same_as<std::vector<typename G::element_type>>;
};

/// Map G -> G/N onto canonical coset keys. Composition is the quotient's
/// (abelian) operation.
template <class Q, class E>
concept QuotientMap = requires(const Q& q, const E& g, const CosetKey& k) {
  { q.key(g) } -> std::same_as<CosetKey>;
  { q.identity_key() } -> std::same_as<CosetKey>;
  { q.compose(k, k) } -> std::same_as<CosetKey>;
  { q.description() } -> std::convertible_to<std::string>;
};

/// Maps a kernel to its quotient class; `derived(group)` builds N = G'.
template <class G>
struct quotient_traits;

template <GroupElement E>
E conjugate(const E& t, const E& a) {
  return mul(mul(t, a), inv(t));
}

template <GroupElement E>
E commutator(const E& a, const E& b) {
  return mul(mul(a, b), mul(inv(a), inv(b)));
}

/// g^k by repeated squaring; k may be negative.
template <GroupElement E>
E power(const E& g, std::int64_t k, const E& identity) {
  E base = k < 0 ? inv(g) : g;
  auto n = static_cast<std::uint64_t>(k < 0 ? -(k + 1) : k) + (k < 0 ? 1u : 0u);
  E out = identity;
  while (n) {
    if (n & 1u) out = mul(out, base);
    n >>= 1u;
    if (n) base = mul(base, base);
  }
  return out;
}

template <GroupKernel G>
typename G::element_type evaluate(const G& group, const Word& w) {
  auto out = group.identity();
  for (const auto& l : w) out = mul(out, power(group.generators().at(l.generator), l.power, group.identity()));
  return out;
}

template <GroupKernel G>
typename G::element_type evaluate(const G& group, const std::vector<Syllable>& w) {
  auto out = group.identity();
  for (const auto& s : w) out = mul(out, power(group.word_bases().at(s.base).value, s.power, group.identity()));
  return out;
}

/// True iff z commutes with every generator (sufficient, generators generate).
template <GroupKernel G>
bool commutes_with_generators(const G& group, const typename G::element_type& z) {
  for (const auto& s : group.generators())
    if (mul(s, z) != mul(z, s)) return false;
  return true;
}

/// Verifies G/N is abelian through key(st) == key(ts) on generator pairs.
template <GroupKernel G, class Q>
  requires QuotientMap<Q, typename G::element_type>
bool quotient_is_abelian_on_generators(const G& group, const Q& q) {
  const auto& gens = group.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (q.key(mul(gens[i], gens[j])) != q.key(mul(gens[j], gens[i]))) return false;
  return true;
}

} // namespace dergrade
