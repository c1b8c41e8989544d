#pragma once

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "coefficient.hpp"
#include "error.hpp"
#include "group.hpp"
#include "groupoid.hpp"
#include "word.hpp"

namespace dergrade {

/// A derivation of C[G], stored as its images on the generating set and
/// extended to all of C[G] by linearity and the Leibniz rule
/// d(ab) = d(a) b + a d(b).
///
/// Its character χ(k, x) = coefficient of k in d(x) is the derived view; see
/// character_value().
template <GroupKernel G>
class Derivation {
public:
  using group_type = G;
  using element_type = typename G::element_type;
  using algebra_type = AlgebraElement<element_type>;

  /// Validated generator table: rejects tables whose Leibniz extension does
  /// not kill every relator of the kernel.
  static Derivation from_table(std::shared_ptr<const G> group, std::vector<algebra_type> images) {
    Derivation d(std::move(group), std::move(images));
    if (auto r = d.relator_violation())
      throw spec_error("generator table is not a derivation: relator " + std::to_string(*r) +
                       " is not mapped to zero");
    return d;
  }

  /// Generator table taken as is. Used for deliberately corrupted tables and
  /// for tables already known to be derivations (brackets, projections).
  static Derivation from_table_unchecked(std::shared_ptr<const G> group, std::vector<algebra_type> images) {
    return Derivation(std::move(group), std::move(images));
  }

  static Derivation zero(std::shared_ptr<const G> group) {
    auto n = group->generators().size();
    return Derivation(std::move(group), std::vector<algebra_type>(n));
  }

  const G& group() const noexcept { return *group_; }
  const std::shared_ptr<const G>& group_ptr() const noexcept { return group_; }
  const std::vector<algebra_type>& images() const noexcept { return images_; }
  const algebra_type& image(std::size_t generator) const { return images_.at(generator); }

  bool is_zero() const {
    for (const auto& x : images_)
      if (!x.is_zero()) return false;
    return true;
  }

  /// d(g) through the kernel's normal word of g.
  algebra_type apply(const element_type& g) const {
    if (!group_->contains(g)) throw group_mismatch("element " + to_string(g) + " is not in " + group_->name());
    algebra_type out;
    auto prefix = group_->identity();
    for (const auto& syl : group_->normal_word(g)) {
      const auto& base = group_->word_bases()[syl.base];
      auto next = mul(prefix, power(base.value, syl.power, group_->identity()));
      auto suffix = mul(inv(next), g);
      expand_power(out, prefix, base.value, base_images_[syl.base], base.central, syl.power, suffix);
      prefix = std::move(next);
    }
    return out;
  }

  /// Linear extension of apply(g).
  algebra_type apply(const algebra_type& x) const {
    algebra_type out;
    for (const auto& [g, c] : x.terms()) {
      if (c.is_zero()) continue;
      auto dg = apply(g);
      for (const auto& [h, a] : dg.terms()) out.add_term(c * a, h);
    }
    return out;
  }

  /// d applied to a formal word over the generators, expanded letter by
  /// letter without reducing the word first.
  algebra_type apply(const Word& w) const {
    algebra_type out;
    const auto g = evaluate(*group_, w);
    auto prefix = group_->identity();
    for (const auto& l : w) {
      const auto& base = group_->word_bases().at(l.generator);
      auto next = mul(prefix, power(base.value, l.power, group_->identity()));
      auto suffix = mul(inv(next), g);
      expand_power(out, prefix, base.value, images_.at(l.generator), base.central, l.power, suffix);
      prefix = std::move(next);
    }
    return out;
  }

  /// Index of the first relator r with d(r) != 0, if any.
  std::optional<std::size_t> relator_violation() const {
    const auto relators = group_->relators();
    for (std::size_t i = 0; i < relators.size(); ++i)
      if (!apply(relators[i]).is_zero()) return i;
    return std::nullopt;
  }

  Derivation& operator+=(const Derivation& o) {
    require_same_group(o);
    for (std::size_t i = 0; i < images_.size(); ++i) images_[i] += o.images_[i];
    refresh();
    return *this;
  }
  Derivation& operator-=(const Derivation& o) {
    require_same_group(o);
    for (std::size_t i = 0; i < images_.size(); ++i) images_[i] -= o.images_[i];
    refresh();
    return *this;
  }
  friend Derivation operator+(Derivation a, const Derivation& b) { return a += b; }
  friend Derivation operator-(Derivation a, const Derivation& b) { return a -= b; }
  friend Derivation operator*(const Coefficient& c, const Derivation& d) {
    std::vector<algebra_type> images;
    for (const auto& x : d.images_) images.push_back(c * x);
    return Derivation(d.group_, std::move(images));
  }

  friend bool operator==(const Derivation& a, const Derivation& b) {
    return (a.group_ == b.group_ || *a.group_ == *b.group_) && a.images_ == b.images_;
  }

  void require_same_group(const Derivation& o) const {
    if (group_ != o.group_ && !(*group_ == *o.group_))
      throw group_mismatch("derivations over " + group_->name() + " and " + o.group_->name());
  }

private:
  Derivation(std::shared_ptr<const G> group, std::vector<algebra_type> images)
      : group_(std::move(group)), images_(std::move(images)) {
    if (images_.size() != group_->generators().size())
      throw spec_error("derivation needs one image per generator of " + group_->name());
    for (const auto& x : images_)
      for (const auto& [g, c] : x.terms())
        if (!group_->contains(g)) throw group_mismatch("image term " + to_string(g) + " is not in " + group_->name());
    refresh();
  }

  /// Images of derived word bases (the Heisenberg z) from their definitions.
  void refresh() {
    const auto& bases = group_->word_bases();
    base_images_.assign(bases.size(), algebra_type{});
    for (std::size_t i = 0; i < bases.size(); ++i)
      base_images_[i] = bases[i].definition ? apply(*bases[i].definition) : images_.at(i);
  }

  /// out += prefix · d(s^k) · suffix, given ds = d(s).
  ///   k > 0:  d(s^k)  =  Σ_{i<k} s^i ds s^(k-1-i)
  ///   k < 0:  d(s^-m) = -Σ_{i<m} s^-(i+1) ds s^-(m-i)
  ///   central s: d(s^k) = k s^(k-1) ds
  void expand_power(algebra_type& out, const element_type& prefix, const element_type& s, const algebra_type& ds,
                    bool central, std::int64_t k, const element_type& suffix) const {
    if (k == 0 || ds.is_zero()) return;
    const auto e = group_->identity();
    if (central) {
      out.add_sandwich(Coefficient(k), mul(prefix, power(s, k - 1, e)), ds, suffix);
      return;
    }
    const auto m = k > 0 ? k : -k;
    const auto step = k > 0 ? s : inv(s);
    // Left factor starts at s^0 (k > 0) or s^-1 (k < 0); right at s^(k-1) or s^-m.
    auto left = k > 0 ? prefix : mul(prefix, step);
    auto right = k > 0 ? mul(power(s, k - 1, e), suffix) : mul(power(step, m, e), suffix);
    const auto inv_step = inv(step);
    const Coefficient sign(k > 0 ? 1 : -1);
    for (std::int64_t i = 0; i < m; ++i) {
      out.add_sandwich(sign, left, ds, right);
      left = mul(left, step);
      right = mul(inv_step, right);
    }
  }

  std::shared_ptr<const G> group_;
  std::vector<algebra_type> images_;
  std::vector<algebra_type> base_images_;
};

// ---------------------------------------------------------------------------
// Constructors

/// Inner derivation x -> xa - ax, i.e. s -> s a - a s on generators.
template <GroupKernel G>
Derivation<G> inner_derivation(std::shared_ptr<const G> group, const AlgebraElement<typename G::element_type>& a) {
  std::vector<AlgebraElement<typename G::element_type>> images;
  for (const auto& s : group->generators()) {
    AlgebraElement<typename G::element_type> one_s(s);
    images.push_back(one_s * a - a * one_s);
  }
  return Derivation<G>::from_table_unchecked(std::move(group), std::move(images));
}

/// τ(g) for an additive character given on the free abelian part of G/G'.
template <GroupKernel G>
Coefficient additive_character(const G& group, const std::vector<Coefficient>& tau, const typename G::element_type& g) {
  if (tau.size() != group.abelian_rank())
    throw spec_error("tau needs " + std::to_string(group.abelian_rank()) + " values on the abelian basis of " +
                     group.name() + ", got " + std::to_string(tau.size()));
  const auto coords = group.abelian_coordinates(g);
  Coefficient out;
  for (std::size_t i = 0; i < coords.size(); ++i) out += tau[i] * Coefficient(coords[i]);
  return out;
}

/// Central derivation g -> τ(g) g z for central z.
template <GroupKernel G>
Derivation<G> central_derivation(std::shared_ptr<const G> group, const std::vector<Coefficient>& tau,
                                 const typename G::element_type& z) {
  if (!group->contains(z)) throw group_mismatch("element " + to_string(z) + " is not in " + group->name());
  if (!group->is_central(z)) throw centrality_error("element " + to_string(z) + " is not central");
  std::vector<AlgebraElement<typename G::element_type>> images;
  for (const auto& s : group->generators())
    images.emplace_back(additive_character(*group, tau, s), mul(s, z));
  return Derivation<G>::from_table_unchecked(std::move(group), std::move(images));
}

// ---------------------------------------------------------------------------
// Characters

/// χ^d(u, v): coefficient of u in d(v).
template <GroupKernel G>
Coefficient character_value(const Derivation<G>& d, const Arrow<typename G::element_type>& phi) {
  return d.apply(phi.v).coefficient_of(phi.u);
}

/// Closed-form character of the inner derivation of a single element a:
/// [a = S(φ)] - [a = T(φ)].
template <GroupElement E>
Coefficient inner_character(const E& a, const Arrow<E>& phi) {
  return Coefficient((source(phi) == a ? 1 : 0) - (target(phi) == a ? 1 : 0));
}

/// [d, ∂](x) = d(∂(x)) - ∂(d(x)), tabulated on generators.
template <GroupKernel G>
Derivation<G> bracket(const Derivation<G>& d, const Derivation<G>& e) {
  d.require_same_group(e);
  std::vector<AlgebraElement<typename G::element_type>> images;
  for (std::size_t i = 0; i < d.images().size(); ++i)
    images.push_back(d.apply(e.image(i)) - e.apply(d.image(i)));
  return Derivation<G>::from_table_unchecked(d.group_ptr(), std::move(images));
}

/// {α, β}(a, b) = Σ_k α(a,k) β(k,b) - β(a,k) α(k,b), evaluated over the
/// finite set of k where β(k,b) or α(k,b) can be nonzero.
template <GroupKernel G>
Coefficient bracket_character_value(const Derivation<G>& d, const Derivation<G>& e,
                                    const Arrow<typename G::element_type>& phi) {
  d.require_same_group(e);
  const auto db = d.apply(phi.v);
  const auto eb = e.apply(phi.v);
  Coefficient out;
  for (const auto& [k, beta_kb] : eb.terms()) out += d.apply(k).coefficient_of(phi.u) * beta_kb;
  for (const auto& [k, alpha_kb] : db.terms()) out -= e.apply(k).coefficient_of(phi.u) * alpha_kb;
  return out;
}

// ---------------------------------------------------------------------------
// Checks

/// d(xy) == d(x) y + x d(y), exactly.
template <GroupKernel G>
bool satisfies_leibniz(const Derivation<G>& d, const AlgebraElement<typename G::element_type>& x,
                       const AlgebraElement<typename G::element_type>& y) {
  return d.apply(x * y) == d.apply(x) * y + x * d.apply(y);
}

/// χ(φ∘ψ) == χ(φ) + χ(ψ). Throws composition_error when S(φ) != T(ψ).
template <GroupKernel G>
bool character_composes(const Derivation<G>& d, const Arrow<typename G::element_type>& phi,
                        const Arrow<typename G::element_type>& psi) {
  const auto composite = compose(phi, psi);
  return character_value(d, composite) == character_value(d, phi) + character_value(d, psi);
}

/// True iff d(s) = s w - w s on every generator s, i.e. d is the inner
/// derivation of w.
template <GroupKernel G>
bool is_inner_witness(const Derivation<G>& d, const AlgebraElement<typename G::element_type>& w) {
  const auto& gens = d.group().generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    AlgebraElement<typename G::element_type> one_s(gens[i]);
    if (d.image(i) != one_s * w - w * one_s) return false;
  }
  return true;
}

} // namespace dergrade
