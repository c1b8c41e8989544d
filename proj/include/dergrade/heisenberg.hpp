#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "coset_key.hpp"
#include "detail/checked.hpp"
#include "error.hpp"
#include "group.hpp"
#include "word.hpp"

namespace dergrade {

/// Integer upper unitriangular 3x3 matrix
///
///   | 1 a c |
///   | 0 1 b |
///   | 0 0 1 |
///
/// stored as the triple (a, b, c). The triple is the normal form.
struct HeisenbergElement {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;

  auto operator<=>(const HeisenbergElement&) const = default;
};

/// (a,b,c)(x,y,z) = (a+x, b+y, c+z+ay)
inline HeisenbergElement mul(const HeisenbergElement& g, const HeisenbergElement& h) {
  using namespace detail;
  return {checked_add(g.a, h.a), checked_add(g.b, h.b),
          checked_add(checked_add(g.c, h.c), checked_mul(g.a, h.b))};
}

/// (a,b,c)^-1 = (-a, -b, ab - c)
inline HeisenbergElement inv(const HeisenbergElement& g) {
  using namespace detail;
  return {checked_neg(g.a), checked_neg(g.b), checked_sub(checked_mul(g.a, g.b), g.c)};
}

inline bool same_group(const HeisenbergElement&, const HeisenbergElement&) { return true; }

inline std::string to_string(const HeisenbergElement& g) {
  return "(" + std::to_string(g.a) + "," + std::to_string(g.b) + "," + std::to_string(g.c) + ")";
}

/// Discrete Heisenberg group H generated by x = (1,0,0), y = (0,1,0).
///
/// Normal word of (a,b,c) is x^a y^b z^(c-ab) with z = [x,y] = (0,0,1), which
/// is central. Relators of the presentation <x, y | [x,z], [y,z]>.
class Heisenberg {
public:
  using element_type = HeisenbergElement;

  Heisenberg()
      : generators_{{1, 0, 0}, {0, 1, 0}},
        names_{"x", "y"},
        bases_{{{1, 0, 0}, std::nullopt, false},
               {{0, 1, 0}, std::nullopt, false},
               {{0, 0, 1}, z_word(), true}} {}

  std::string name() const { return "heisenberg"; }
  element_type identity() const { return {}; }
  const std::vector<element_type>& generators() const { return generators_; }
  const std::vector<std::string>& generator_names() const { return names_; }
  const std::vector<WordBase<element_type>>& word_bases() const { return bases_; }

  std::vector<Syllable> normal_word(const element_type& g) const {
    std::vector<Syllable> w;
    if (g.a) w.push_back({0, g.a});
    if (g.b) w.push_back({1, g.b});
    if (auto m = detail::checked_sub(g.c, detail::checked_mul(g.a, g.b))) w.push_back({2, m});
    return w;
  }

  std::vector<Word> relators() const {
    const Word x{{0, 1}}, y{{1, 1}};
    return {commutator_word(x, z_word()), commutator_word(y, z_word())};
  }

  bool contains(const element_type&) const { return true; }

  bool is_central(const element_type& g) const { return g.a == 0 && g.b == 0; }

  /// t(a,b,c)t^-1 = (a, b, c + alpha*b - beta*a) for t = (alpha, beta, gamma),
  /// so the class of a non-central element is (a, b, c + gcd(a,b)Z).
  bool is_conjugate(const element_type& g, const element_type& h) const {
    if (g.a != h.a || g.b != h.b) return false;
    if (is_central(g)) return g.c == h.c;
    const auto d = std::gcd(g.a, g.b);
    return (detail::checked_sub(h.c, g.c)) % d == 0;
  }

  element_type class_representative(const element_type& g) const {
    if (is_central(g)) return g;
    const auto d = std::gcd(g.a, g.b);
    auto c = g.c % d;
    if (c < 0) c += d;
    return {g.a, g.b, c};
  }

  std::size_t abelian_rank() const { return 2; }
  std::vector<std::int64_t> abelian_coordinates(const element_type& g) const { return {g.a, g.b}; }

  /// H' = Z(H) = {(0,0,c)}.
  bool is_stem() const { return true; }
  std::string center_description() const { return "{(0,0,c) : c in Z} (the c-axis)"; }
  std::string derived_subgroup_description() const {
    return "{(0,0,c) : c in Z} (equal to the centre; H/H' = Z+Z via (a,b,c) -> (a,b))";
  }

  /// A few central elements (0,0,c), |c| <= 2.
  std::vector<element_type> central_samples() const { return {{0, 0, 0}, {0, 0, 1}, {0, 0, -1}, {0, 0, 2}, {0, 0, -2}}; }

  friend bool operator==(const Heisenberg&, const Heisenberg&) { return true; }

private:
  static Word z_word() { return commutator_word(Word{{0, 1}}, Word{{1, 1}}); }

  std::vector<element_type> generators_;
  std::vector<std::string> names_;
  std::vector<WordBase<element_type>> bases_;
};

/// H -> H/H' = Z + Z, (a,b,c) -> (a,b). The only quotient offered for H.
class HeisenbergQuotient {
public:
  explicit HeisenbergQuotient(const std::shared_ptr<const Heisenberg>& group_ptr) {
    if (!quotient_is_abelian_on_generators(*group_ptr, *this))
      throw setup_rejected(setup_rejected::reason::non_abelian_quotient, "quotient not abelian");
  }

  CosetKey key(const HeisenbergElement& g) const { return {{g.a, g.b}}; }
  CosetKey identity_key() const { return {{0, 0}}; }
  CosetKey compose(const CosetKey& k, const CosetKey& l) const {
    return {{detail::checked_add(k.value.at(0), l.value.at(0)),
             detail::checked_add(k.value.at(1), l.value.at(1))}};
  }
  std::string description() const { return "N = H' = Z(H), H/N = Z+Z"; }
};

template <>
struct quotient_traits<Heisenberg> {
  using type = HeisenbergQuotient;
  static type derived(std::shared_ptr<const Heisenberg> group) { return type(group); }
};

} // namespace dergrade
