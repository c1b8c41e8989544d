#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <vector>

#include "algebra.hpp"
#include "derivation.hpp"
#include "group.hpp"
#include "groupoid.hpp"

namespace dergrade {

/// Seeded generator of random elements, words, algebra elements, derivations
/// and arrows over one kernel. Same seed, same sequence.
template <GroupKernel G>
class Sampler {
public:
  using element_type = typename G::element_type;
  using algebra_type = AlgebraElement<element_type>;

  Sampler(std::shared_ptr<const G> group, std::uint64_t seed) : group_(std::move(group)), rng_(seed) {}

  const G& group() const { return *group_; }

  std::int64_t integer(std::int64_t lo, std::int64_t hi) { return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_); }

  bool coin() { return integer(0, 1) == 1; }

  /// Word of length in [0, max_length] over generators and their inverses.
  Word word(std::size_t max_length) {
    Word w;
    const auto n = static_cast<std::int64_t>(group_->generators().size());
    const auto len = integer(0, static_cast<std::int64_t>(max_length));
    for (std::int64_t i = 0; i < len; ++i)
      w.push_back({static_cast<std::size_t>(integer(0, n - 1)), coin() ? 1 : -1});
    return w;
  }

  element_type element(std::size_t max_length = 5) { return evaluate(*group_, word(max_length)); }

  /// Small nonzero Gaussian integer, real most of the time.
  Coefficient coefficient() {
    std::int64_t re = 0;
    while (re == 0) re = integer(-3, 3);
    if (integer(0, 3) == 0) return Coefficient(rational(re), rational(integer(-2, 2)));
    return Coefficient(re);
  }

  algebra_type algebra(std::size_t max_terms = 3, std::size_t word_length = 3) {
    algebra_type x;
    const auto n = integer(1, static_cast<std::int64_t>(max_terms));
    for (std::int64_t i = 0; i < n; ++i) x.add_term(coefficient(), element(word_length));
    return x;
  }

  element_type central_element() {
    const auto samples = group_->central_samples();
    return samples[static_cast<std::size_t>(integer(0, static_cast<std::int64_t>(samples.size()) - 1))];
  }

  Derivation<G> inner() { return inner_derivation(group_, algebra()); }

  Derivation<G> central() {
    std::vector<Coefficient> tau;
    for (std::size_t i = 0; i < group_->abelian_rank(); ++i) tau.push_back(Coefficient(integer(-3, 3)));
    return central_derivation(group_, tau, central_element());
  }

  /// Generator table validated against the relators. Tries a free random
  /// table first (every table is valid on Z^n) and falls back to the images
  /// of an inner + central combination.
  Derivation<G> tabular() {
    std::vector<algebra_type> images;
    for (std::size_t i = 0; i < group_->generators().size(); ++i) images.push_back(algebra(2, 3));
    auto candidate = Derivation<G>::from_table_unchecked(group_, images);
    if (!candidate.relator_violation()) return candidate;
    auto combo = inner() + central();
    return Derivation<G>::from_table(group_, combo.images());
  }

  /// Random mix of one to three inner / central / tabular derivations.
  Derivation<G> derivation() {
    auto d = Derivation<G>::zero(group_);
    const auto parts = integer(1, 3);
    for (std::int64_t i = 0; i < parts; ++i) {
      switch (integer(0, 2)) {
      case 0: d += inner(); break;
      case 1: d += central(); break;
      default: d += tabular(); break;
      }
    }
    return d;
  }

  /// Arrow (u, v) with v a random word of length <= max_length; u is drawn
  /// from supp d(v) half of the time so that nonzero values are exercised.
  Arrow<element_type> arrow_for(const Derivation<G>& d, std::size_t max_length = 5) {
    auto v = element(max_length);
    if (coin()) {
      const auto dv = d.apply(v);
      if (!dv.is_zero()) {
        auto it = dv.terms().begin();
        std::advance(it, integer(0, static_cast<std::int64_t>(dv.size()) - 1));
        return {it->first, v};
      }
    }
    return {mul(v, element(max_length)), v};
  }

  Arrow<element_type> arrow(std::size_t max_length = 5) { return {element(max_length), element(max_length)}; }

  /// Arrow composable after `phi` on the right: T(result) = S(phi).
  Arrow<element_type> composable_after(const Arrow<element_type>& phi, std::size_t max_length = 5) {
    auto v = element(max_length);
    // T(u, v) = u v^-1 = S(phi)  =>  u = S(phi) v
    return {mul(source(phi), v), v};
  }

private:
  std::shared_ptr<const G> group_;
  std::mt19937_64 rng_;
};

} // namespace dergrade
