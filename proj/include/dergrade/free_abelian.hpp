#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "coset_key.hpp"
#include "detail/checked.hpp"
#include "error.hpp"
#include "group.hpp"
#include "word.hpp"

namespace dergrade {

/// Element of Z^n written additively.
struct FreeAbelianElement {
  std::vector<std::int64_t> x;

  auto operator<=>(const FreeAbelianElement&) const = default;
};

inline bool same_group(const FreeAbelianElement& g, const FreeAbelianElement& h) {
  return g.x.size() == h.x.size();
}

inline FreeAbelianElement mul(const FreeAbelianElement& g, const FreeAbelianElement& h) {
  if (!same_group(g, h))
    throw group_mismatch("Z^" + std::to_string(g.x.size()) + " and Z^" + std::to_string(h.x.size()) +
                         " elements cannot be multiplied");
  FreeAbelianElement out{g.x};
  for (std::size_t i = 0; i < out.x.size(); ++i) out.x[i] = detail::checked_add(out.x[i], h.x[i]);
  return out;
}

inline FreeAbelianElement inv(const FreeAbelianElement& g) {
  FreeAbelianElement out{g.x};
  for (auto& v : out.x) v = detail::checked_neg(v);
  return out;
}

inline std::string to_string(const FreeAbelianElement& g) {
  std::string s = "(";
  for (std::size_t i = 0; i < g.x.size(); ++i) s += (i ? "," : "") + std::to_string(g.x[i]);
  return s + ")";
}

/// Z^n with its standard basis e1..en.
class FreeAbelian {
public:
  using element_type = FreeAbelianElement;

  explicit FreeAbelian(std::size_t rank) : rank_(rank) {
    if (rank == 0) throw spec_error("Z^n needs n >= 1");
    for (std::size_t i = 0; i < rank; ++i) {
      element_type e{std::vector<std::int64_t>(rank, 0)};
      e.x[i] = 1;
      generators_.push_back(e);
      names_.push_back("e" + std::to_string(i + 1));
      bases_.push_back({e, std::nullopt, true});
    }
  }

  std::size_t rank() const { return rank_; }
  std::string name() const { return "zn:" + std::to_string(rank_); }
  element_type identity() const { return {std::vector<std::int64_t>(rank_, 0)}; }
  const std::vector<element_type>& generators() const { return generators_; }
  const std::vector<std::string>& generator_names() const { return names_; }
  const std::vector<WordBase<element_type>>& word_bases() const { return bases_; }

  std::vector<Syllable> normal_word(const element_type& g) const {
    check(g);
    std::vector<Syllable> w;
    for (std::size_t i = 0; i < rank_; ++i)
      if (g.x[i]) w.push_back({i, g.x[i]});
    return w;
  }

  std::vector<Word> relators() const {
    std::vector<Word> out;
    for (std::size_t i = 0; i < rank_; ++i)
      for (std::size_t j = i + 1; j < rank_; ++j) out.push_back(commutator_word(Word{{i, 1}}, Word{{j, 1}}));
    return out;
  }

  bool contains(const element_type& g) const { return g.x.size() == rank_; }
  bool is_central(const element_type& g) const { return check(g), true; }
  bool is_conjugate(const element_type& g, const element_type& h) const { return check(g), check(h), g == h; }
  element_type class_representative(const element_type& g) const { return check(g), g; }

  std::size_t abelian_rank() const { return rank_; }
  std::vector<std::int64_t> abelian_coordinates(const element_type& g) const { return check(g), g.x; }

  /// Z(G) = G is never inside G' = {0}.
  bool is_stem() const { return false; }
  std::string center_description() const { return "the whole group Z^" + std::to_string(rank_); }
  std::string derived_subgroup_description() const { return "trivial {0}"; }

  /// Identity, the basis, and e1 + e2 when n >= 2.
  std::vector<element_type> central_samples() const {
    std::vector<element_type> out{identity()};
    out.insert(out.end(), generators_.begin(), generators_.end());
    if (rank_ >= 2) out.push_back(mul(generators_[0], generators_[1]));
    return out;
  }

  friend bool operator==(const FreeAbelian& a, const FreeAbelian& b) { return a.rank_ == b.rank_; }

private:
  void check(const element_type& g) const {
    if (g.x.size() != rank_)
      throw group_mismatch("element " + to_string(g) + " does not belong to Z^" + std::to_string(rank_));
  }

  std::size_t rank_;
  std::vector<element_type> generators_;
  std::vector<std::string> names_;
  std::vector<WordBase<element_type>> bases_;
};

/// Z^n -> Z^n / {0}: the key is the vector itself.
class FreeAbelianQuotient {
public:
  explicit FreeAbelianQuotient(const std::shared_ptr<const FreeAbelian>& group_ptr) : rank_(group_ptr->rank()) {
    if (!quotient_is_abelian_on_generators(*group_ptr, *this))
      throw setup_rejected(setup_rejected::reason::non_abelian_quotient, "quotient not abelian");
  }

  CosetKey key(const FreeAbelianElement& g) const {
    if (g.x.size() != rank_) throw group_mismatch("element " + to_string(g) + " has the wrong rank");
    return {g.x};
  }
  CosetKey identity_key() const { return {std::vector<std::int64_t>(rank_, 0)}; }
  CosetKey compose(const CosetKey& k, const CosetKey& l) const {
    CosetKey out = k;
    for (std::size_t i = 0; i < out.value.size(); ++i) out.value[i] = detail::checked_add(out.value[i], l.value.at(i));
    return out;
  }
  std::string description() const { return "N = G' = {0}, G/N = Z^" + std::to_string(rank_); }

private:
  std::size_t rank_;
};

template <>
struct quotient_traits<FreeAbelian> {
  using type = FreeAbelianQuotient;
  static type derived(std::shared_ptr<const FreeAbelian> group) { return type(group); }
};

} // namespace dergrade
