#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <deque>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "coset_key.hpp"
#include "error.hpp"
#include "group.hpp"
#include "word.hpp"

namespace dergrade {

/// Bijection of {0..n-1}, stored as its image table (one-line notation).
/// Printed and serialized 1-based.
struct Permutation {
  std::vector<std::uint16_t> image;

  auto operator<=>(const Permutation&) const = default;

  std::size_t degree() const { return image.size(); }

  static Permutation identity(std::size_t n) {
    Permutation p;
    p.image.resize(n);
    for (std::size_t i = 0; i < n; ++i) p.image[i] = static_cast<std::uint16_t>(i);
    return p;
  }

  /// Cycles given 1-based, e.g. {{1,2},{3,4}} for (12)(34).
  static Permutation from_cycles(std::size_t n, const std::vector<std::vector<std::size_t>>& cycles) {
    Permutation p = identity(n);
    for (const auto& c : cycles)
      for (std::size_t i = 0; i < c.size(); ++i) {
        const auto from = c[i], to = c[(i + 1) % c.size()];
        if (from < 1 || from > n || to < 1 || to > n) throw spec_error("cycle entry out of range");
        p.image[from - 1] = static_cast<std::uint16_t>(to - 1);
      }
    if (!p.valid()) throw spec_error("cycles do not describe a permutation");
    return p;
  }

  /// One-line notation, 1-based. Throws spec_error if not a bijection.
  static Permutation from_one_line(const std::vector<std::int64_t>& one_line) {
    Permutation p;
    for (auto v : one_line) {
      if (v < 1 || v > static_cast<std::int64_t>(one_line.size()))
        throw spec_error("one-line permutation entry out of range");
      p.image.push_back(static_cast<std::uint16_t>(v - 1));
    }
    if (!p.valid()) throw spec_error("one-line array is not a bijection");
    return p;
  }

  std::vector<std::int64_t> one_line() const {
    std::vector<std::int64_t> out;
    for (auto v : image) out.push_back(v + 1);
    return out;
  }

  bool valid() const {
    std::vector<bool> seen(image.size(), false);
    for (auto v : image) {
      if (v >= image.size() || seen[v]) return false;
      seen[v] = true;
    }
    return true;
  }

  /// +1 for even, -1 for odd.
  int sign() const {
    std::vector<bool> seen(image.size(), false);
    int s = 1;
    for (std::size_t i = 0; i < image.size(); ++i) {
      if (seen[i]) continue;
      std::size_t len = 0;
      for (std::size_t j = i; !seen[j]; j = image[j]) seen[j] = true, ++len;
      if (len % 2 == 0) s = -s;
    }
    return s;
  }
};

inline bool same_group(const Permutation& p, const Permutation& q) { return p.degree() == q.degree(); }

/// Composition p∘q: apply q first.
inline Permutation mul(const Permutation& p, const Permutation& q) {
  if (!same_group(p, q))
    throw group_mismatch("permutations of degree " + std::to_string(p.degree()) + " and " +
                         std::to_string(q.degree()) + " cannot be multiplied");
  Permutation r;
  r.image.resize(p.degree());
  for (std::size_t i = 0; i < r.image.size(); ++i) r.image[i] = p.image[q.image[i]];
  return r;
}

inline Permutation inv(const Permutation& p) {
  Permutation r;
  r.image.resize(p.degree());
  for (std::size_t i = 0; i < r.image.size(); ++i) r.image[p.image[i]] = static_cast<std::uint16_t>(i);
  return r;
}

/// Cycle notation, e.g. "(1 2)(3 4)"; identity is "()".
inline std::string to_string(const Permutation& p) {
  std::string s;
  std::vector<bool> seen(p.degree(), false);
  for (std::size_t i = 0; i < p.degree(); ++i) {
    if (seen[i] || p.image[i] == i) continue;
    s += "(";
    for (std::size_t j = i; !seen[j]; j = p.image[j]) {
      seen[j] = true;
      if (j != i) s += " ";
      s += std::to_string(j + 1);
    }
    s += ")";
  }
  return s.empty() ? "()" : s;
}

/// Finite permutation group given by generators; every oracle is answered by
/// enumeration of the element list.
class PermutationGroup {
public:
  using element_type = Permutation;

  static constexpr std::size_t max_order = 50000;

  PermutationGroup(std::string name, std::size_t degree, std::vector<Permutation> gens)
      : name_(std::move(name)), degree_(degree), generators_(std::move(gens)) {
    if (degree_ == 0) throw spec_error("permutation degree must be positive");
    for (std::size_t i = 0; i < generators_.size(); ++i) {
      const auto& s = generators_[i];
      if (s.degree() != degree_ || !s.valid()) throw spec_error("generator is not a permutation of the right degree");
      names_.push_back("s" + std::to_string(i + 1));
      bases_.push_back({s, std::nullopt, false});
    }
    enumerate();
    compute_classes();
    derived_ = closure(normal_closure_seed());
    for (const auto& g : elements_)
      if (commutes_with_generators(*this, g)) center_.push_back(g);
  }

  /// Symmetric "S<n>", alternating "A<n>", dihedral "D<n>" (order 2n),
  /// cyclic "C<n>", Klein four-group "V4".
  static PermutationGroup named(const std::string& name) {
    auto parse_n = [&](std::size_t min) {
      std::size_t n = 0;
      try {
        std::size_t pos = 0;
        n = std::stoul(name.substr(1), &pos);
        if (pos + 1 != name.size()) throw spec_error("");
      } catch (...) {
        throw spec_error("unknown permutation group '" + name + "'");
      }
      if (n < min || n > 12) throw spec_error("degree out of range for group '" + name + "'");
      return n;
    };
    std::vector<std::size_t> all;
    if (name == "V4")
      return {name, 4, {Permutation::from_cycles(4, {{1, 2}, {3, 4}}), Permutation::from_cycles(4, {{1, 3}, {2, 4}})}};
    switch (name.empty() ? '\0' : name[0]) {
    case 'S': {
      auto n = parse_n(2);
      for (std::size_t i = 1; i <= n; ++i) all.push_back(i);
      return {name, n, {Permutation::from_cycles(n, {{1, 2}}), Permutation::from_cycles(n, {all})}};
    }
    case 'A': {
      auto n = parse_n(3);
      std::vector<Permutation> gens;
      for (std::size_t k = 3; k <= n; ++k) gens.push_back(Permutation::from_cycles(n, {{1, 2, k}}));
      return {name, n, gens};
    }
    case 'D': {
      auto n = parse_n(3);
      for (std::size_t i = 1; i <= n; ++i) all.push_back(i);
      Permutation flip = Permutation::identity(n);
      for (std::size_t i = 0; i < n; ++i) flip.image[i] = static_cast<std::uint16_t>(n - 1 - i);
      return {name, n, {Permutation::from_cycles(n, {all}), flip}};
    }
    case 'C': {
      auto n = parse_n(2);
      for (std::size_t i = 1; i <= n; ++i) all.push_back(i);
      return {name, n, {Permutation::from_cycles(n, {all})}};
    }
    default:
      throw spec_error("unknown permutation group '" + name + "'");
    }
  }

  std::string name() const { return "perm:" + name_; }
  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  element_type identity() const { return Permutation::identity(degree_); }
  const std::vector<element_type>& generators() const { return generators_; }
  const std::vector<std::string>& generator_names() const { return names_; }
  const std::vector<WordBase<element_type>>& word_bases() const { return bases_; }
  /// Sorted lexicographically by one-line notation.
  const std::vector<element_type>& elements() const { return elements_; }
  const std::vector<element_type>& center() const { return center_; }
  const std::vector<element_type>& derived_subgroup() const { return derived_; }

  std::optional<std::size_t> index_of(const element_type& g) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), g);
    if (it == elements_.end() || *it != g) return std::nullopt;
    return static_cast<std::size_t>(it - elements_.begin());
  }

  bool contains(const element_type& g) const { return index_of(g).has_value(); }

  std::vector<Syllable> normal_word(const element_type& g) const {
    std::vector<Syllable> out;
    for (const auto& l : words_[require(g)]) out.push_back({l.generator, l.power});
    return out;
  }

  /// word(g) s word(gs)^-1 for every non-tree edge of the Cayley graph
  /// spanning tree; together they present the group.
  std::vector<Word> relators() const {
    std::vector<Word> out;
    for (std::size_t i = 0; i < elements_.size(); ++i)
      for (std::size_t s = 0; s < generators_.size(); ++s) {
        const auto j = *index_of(mul(elements_[i], generators_[s]));
        if (parent_[j] == i && parent_gen_[j] == s) continue;
        out.push_back(concat({words_[i], Word{{s, 1}}, inverse(words_[j])}));
      }
    return out;
  }

  bool is_central(const element_type& g) const { return require(g), commutes_with_generators(*this, g); }

  /// Brute force over every conjugator.
  bool is_conjugate(const element_type& a, const element_type& b) const {
    require(a);
    require(b);
    for (const auto& t : elements_)
      if (conjugate(t, a) == b) return true;
    return false;
  }

  /// Lexicographically minimal member of the conjugacy class.
  element_type class_representative(const element_type& g) const { return elements_[class_rep_[require(g)]]; }

  std::vector<element_type> conjugacy_class(const element_type& a) const {
    require(a);
    std::set<element_type> cls;
    for (const auto& t : elements_) cls.insert(conjugate(t, a));
    return {cls.begin(), cls.end()};
  }

  /// Finite groups have no nonzero homomorphism to (C,+).
  std::size_t abelian_rank() const { return 0; }
  std::vector<std::int64_t> abelian_coordinates(const element_type& g) const { return require(g), std::vector<std::int64_t>{}; }

  bool is_in_derived_subgroup(const element_type& g) const {
    return std::binary_search(derived_.begin(), derived_.end(), g);
  }

  bool is_stem() const {
    return std::all_of(center_.begin(), center_.end(), [&](const auto& z) { return is_in_derived_subgroup(z); });
  }

  std::vector<element_type> central_samples() const { return center_; }

  std::string center_description() const { return describe(center_); }
  std::string derived_subgroup_description() const { return describe(derived_); }

  /// Subgroup generated by `gens`, sorted.
  std::vector<element_type> closure(const std::vector<element_type>& gens) const {
    std::set<element_type> seen{identity()};
    std::deque<element_type> queue{identity()};
    while (!queue.empty()) {
      auto g = queue.front();
      queue.pop_front();
      for (const auto& s : gens) {
        if (s.degree() != degree_) throw group_mismatch("subgroup generator has the wrong degree");
        auto h = mul(g, s);
        if (seen.insert(h).second) queue.push_back(h);
      }
    }
    return {seen.begin(), seen.end()};
  }

  friend bool operator==(const PermutationGroup& a, const PermutationGroup& b) {
    return a.degree_ == b.degree_ && a.elements_ == b.elements_ && a.generators_ == b.generators_;
  }

private:
  std::size_t require(const element_type& g) const {
    if (g.degree() != degree_) throw group_mismatch("permutation " + to_string(g) + " has the wrong degree for " + name());
    auto i = index_of(g);
    if (!i) throw group_mismatch("permutation " + to_string(g) + " is not in " + name());
    return *i;
  }

  std::string describe(const std::vector<element_type>& set) const {
    std::ostringstream os;
    os << "order " << set.size() << ": {";
    for (std::size_t i = 0; i < set.size() && i < 24; ++i) os << (i ? ", " : "") << to_string(set[i]);
    if (set.size() > 24) os << ", ...";
    os << "}";
    return os.str();
  }

  void enumerate() {
    // BFS from the identity, right-multiplying by generators; BFS order gives
    // shortest words.
    std::vector<element_type> order{identity()};
    std::vector<std::size_t> parent{0}, parent_gen{0};
    std::set<element_type> seen{identity()};
    for (std::size_t head = 0; head < order.size(); ++head)
      for (std::size_t s = 0; s < generators_.size(); ++s) {
        auto h = mul(order[head], generators_[s]);
        if (!seen.insert(h).second) continue;
        if (order.size() >= max_order) throw capability_error("permutation group exceeds enumeration limit");
        order.push_back(h);
        parent.push_back(head);
        parent_gen.push_back(s);
      }
    std::vector<Word> bfs_words(order.size());
    for (std::size_t i = 1; i < order.size(); ++i) {
      bfs_words[i] = bfs_words[parent[i]];
      auto s = parent_gen[i];
      if (!bfs_words[i].empty() && bfs_words[i].back().generator == s)
        ++bfs_words[i].back().power;
      else
        bfs_words[i].push_back({s, 1});
    }
    elements_ = {seen.begin(), seen.end()};
    words_.resize(order.size());
    parent_.resize(order.size());
    parent_gen_.resize(order.size());
    std::vector<std::size_t> to_sorted(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) to_sorted[i] = *index_of(order[i]);
    for (std::size_t i = 0; i < order.size(); ++i) {
      words_[to_sorted[i]] = bfs_words[i];
      parent_[to_sorted[i]] = to_sorted[parent[i]];
      parent_gen_[to_sorted[i]] = i == 0 ? generators_.size() : parent_gen[i];
    }
  }

  void compute_classes() {
    class_rep_.assign(elements_.size(), elements_.size());
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      if (class_rep_[i] != elements_.size()) continue;
      // Elements are visited in sorted order, so i is the class minimum.
      std::deque<std::size_t> queue{i};
      class_rep_[i] = i;
      while (!queue.empty()) {
        auto j = queue.front();
        queue.pop_front();
        for (const auto& s : generators_) {
          auto k = *index_of(conjugate(s, elements_[j]));
          if (class_rep_[k] == elements_.size()) class_rep_[k] = i, queue.push_back(k);
        }
      }
    }
  }

  std::vector<element_type> normal_closure_seed() const {
    std::set<element_type> seed;
    for (const auto& s : generators_)
      for (const auto& t : generators_) {
        auto c = commutator(s, t);
        for (const auto& g : elements_) seed.insert(conjugate(g, c));
      }
    return {seed.begin(), seed.end()};
  }

  std::string name_;
  std::size_t degree_;
  std::vector<element_type> generators_;
  std::vector<std::string> names_;
  std::vector<WordBase<element_type>> bases_;
  std::vector<element_type> elements_;
  std::vector<Word> words_;
  std::vector<std::size_t> parent_, parent_gen_;
  std::vector<std::size_t> class_rep_;
  std::vector<element_type> derived_;
  std::vector<element_type> center_;
};

/// G -> G/N for an explicit normal subgroup N of a finite permutation group.
/// Keys are lexicographically minimal coset members.
class PermutationQuotient {
public:
  /// N is the subgroup generated by `normal_generators`. Rejects N that is
  /// not contained in G, not normal, or with non-abelian G/N.
  PermutationQuotient(std::shared_ptr<const PermutationGroup> group_ptr,
                      const std::vector<Permutation>& normal_generators)
      : group_(std::move(group_ptr)), normal_(group_->closure(normal_generators)) {
    const auto& group = *group_;
    for (const auto& n : normal_)
      if (!group.contains(n)) throw spec_error("normal subgroup element " + to_string(n) + " is not in " + group.name());
    for (const auto& s : group.generators())
      for (const auto& n : normal_)
        if (!std::binary_search(normal_.begin(), normal_.end(), conjugate(s, n)))
          throw setup_rejected(setup_rejected::reason::not_normal,
                               "subgroup is not normal: " + to_string(s) + " conjugates " + to_string(n) +
                                   " outside it");
    rep_.resize(group.order());
    for (std::size_t i = 0; i < group.order(); ++i) {
      const auto& g = group.elements()[i];
      auto best = mul(g, normal_.front());
      for (const auto& n : normal_) best = std::min(best, mul(g, n));
      rep_[i] = best;
    }
    if (!quotient_is_abelian_on_generators(group, *this))
      throw setup_rejected(setup_rejected::reason::non_abelian_quotient, non_abelian_diagnostic());
  }

  static PermutationQuotient derived(std::shared_ptr<const PermutationGroup> group) {
    auto gens = group->derived_subgroup();
    return {std::move(group), gens};
  }

  const std::vector<Permutation>& normal_subgroup() const { return normal_; }
  std::size_t index() const { return group_->order() / normal_.size(); }

  CosetKey key(const Permutation& g) const { return {representative(g).one_line()}; }
  CosetKey identity_key() const { return {group_->identity().one_line()}; }
  CosetKey compose(const CosetKey& k, const CosetKey& l) const {
    return key(mul(Permutation::from_one_line(k.value), Permutation::from_one_line(l.value)));
  }
  std::string description() const {
    return "N of order " + std::to_string(normal_.size()) + ", |G/N| = " + std::to_string(index());
  }

  const Permutation& representative(const Permutation& g) const {
    auto i = group_->index_of(g);
    if (!i) throw group_mismatch("permutation " + to_string(g) + " is not in " + group_->name());
    return rep_[*i];
  }

private:
  /// Names a generator pair that fails to commute mod N, and an element whose
  /// conjugacy class escapes its coset.
  std::string non_abelian_diagnostic() const {
    std::ostringstream os;
    os << "quotient not abelian: G/N with " << description();
    const auto& gens = group_->generators();
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t j = i + 1; j < gens.size(); ++j)
        if (key(mul(gens[i], gens[j])) != key(mul(gens[j], gens[i]))) {
          os << "; generators " << to_string(gens[i]) << " and " << to_string(gens[j]) << " do not commute modulo N";
          i = j = gens.size();
        }
    std::vector<Permutation> candidates = gens;
    candidates.insert(candidates.end(), group_->elements().begin(), group_->elements().end());
    for (const auto& a : candidates) {
      const auto cls = group_->conjugacy_class(a);
      std::vector<Permutation> coset;
      for (const auto& n : normal_) coset.push_back(mul(a, n));
      std::sort(coset.begin(), coset.end());
      for (const auto& c : cls)
        if (!std::binary_search(coset.begin(), coset.end(), c)) {
          os << "; class of " << to_string(a) << " (" << cls.size() << " elements) is not contained in the coset "
             << to_string(a) << "N (" << coset.size() << " elements), e.g. " << to_string(c) << " lies outside";
          return os.str();
        }
    }
    return os.str();
  }

  std::shared_ptr<const PermutationGroup> group_;
  std::vector<Permutation> normal_;
  std::vector<Permutation> rep_;
};

template <>
struct quotient_traits<PermutationGroup> {
  using type = PermutationQuotient;
  static type derived(std::shared_ptr<const PermutationGroup> group) { return type::derived(std::move(group)); }
};

} // namespace dergrade
