#pragma once

#include <initializer_list>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "coefficient.hpp"
#include "error.hpp"
#include "group.hpp"

namespace dergrade {

/// Finite formal sum Σ c_g g in C[G] with Gaussian-rational coefficients.
///
/// Terms are kept in a map ordered by the element order; no stored
/// coefficient is zero, so equality of values is equality of sums.
template <GroupElement E>
class AlgebraElement {
public:
  using element_type = E;
  using term_map = std::map<E, Coefficient>;

  AlgebraElement() = default;

  /// 1·g
  explicit AlgebraElement(const E& g) { terms_.emplace(g, Coefficient(1)); }

  AlgebraElement(const Coefficient& c, const E& g) { add_term(c, g); }

  AlgebraElement(std::initializer_list<std::pair<Coefficient, E>> terms) {
    for (const auto& [c, g] : terms) add_term(c, g);
  }

  const term_map& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Coefficient coefficient_of(const E& g) const {
    auto it = terms_.find(g);
    return it == terms_.end() ? Coefficient() : it->second;
  }

  std::set<E> support() const {
    std::set<E> out;
    for (const auto& [g, c] : terms_) out.insert(g);
    return out;
  }

  /// this += c·g, dropping the term if it cancels.
  void add_term(const Coefficient& c, const E& g) {
    if (c.is_zero()) return;
    check_compatible(g);
    auto [it, inserted] = terms_.try_emplace(g, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  /// this += c · left · x · right, the building block of Leibniz expansions.
  void add_sandwich(const Coefficient& c, const E& left, const AlgebraElement& x, const E& right) {
    if (c.is_zero()) return;
    for (const auto& [g, a] : x.terms_) add_term(c * a, mul(mul(left, g), right));
  }

  AlgebraElement& operator+=(const AlgebraElement& o) {
    for (const auto& [g, c] : o.terms_) add_term(c, g);
    return *this;
  }
  AlgebraElement& operator-=(const AlgebraElement& o) {
    for (const auto& [g, c] : o.terms_) add_term(-c, g);
    return *this;
  }

  AlgebraElement operator-() const {
    AlgebraElement out;
    for (const auto& [g, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), g, -c);
    return out;
  }

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }

  friend AlgebraElement operator*(const Coefficient& c, const AlgebraElement& x) {
    AlgebraElement out;
    if (c.is_zero()) return out;
    for (const auto& [g, a] : x.terms_) out.terms_.emplace_hint(out.terms_.end(), g, c * a);
    return out;
  }

  /// Convolution product: bilinear extension of the group product.
  friend AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y) {
    AlgebraElement out;
    for (const auto& [g, a] : x.terms_)
      for (const auto& [h, b] : y.terms_) out.add_term(a * b, mul(g, h));
    return out;
  }

  /// x·g
  AlgebraElement right_mul(const E& g) const {
    AlgebraElement out;
    for (const auto& [h, a] : terms_) out.add_term(a, mul(h, g));
    return out;
  }

  /// g·x
  AlgebraElement left_mul(const E& g) const {
    AlgebraElement out;
    for (const auto& [h, a] : terms_) out.add_term(a, mul(g, h));
    return out;
  }

  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

  friend std::ostream& operator<<(std::ostream& os, const AlgebraElement& x) {
    if (x.is_zero()) return os << "0";
    bool first = true;
    for (const auto& [g, c] : x.terms_) {
      if (!first) os << " + ";
      first = false;
      os << c << "*" << to_string(g);
    }
    return os;
  }

  std::string str() const {
    std::ostringstream os;
    os << *this;
    return os.str();
  }

private:
  void check_compatible(const E& g) const {
    if (!terms_.empty() && !same_group(terms_.begin()->first, g))
      throw group_mismatch("element " + to_string(g) + " does not belong to the group of " +
                           to_string(terms_.begin()->first));
  }

  term_map terms_;
};

/// [x, y] = xy - yx
template <GroupElement E>
AlgebraElement<E> commutator(const AlgebraElement<E>& x, const AlgebraElement<E>& y) {
  return x * y - y * x;
}

} // namespace dergrade
