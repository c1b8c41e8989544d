#pragma once

#include "error.hpp"
#include "group.hpp"

namespace dergrade {

/// Arrow (u, v) of the adjoint-action groupoid: source v^-1 u, target u v^-1.
template <GroupElement E>
struct Arrow {
  E u;
  E v;

  auto operator<=>(const Arrow&) const = default;
};

template <GroupElement E>
E source(const Arrow<E>& phi) {
  return mul(inv(phi.v), phi.u);
}

template <GroupElement E>
E target(const Arrow<E>& phi) {
  return mul(phi.u, inv(phi.v));
}

template <GroupElement E>
bool composable(const Arrow<E>& phi, const Arrow<E>& psi) {
  return source(phi) == target(psi);
}

/// (u2, v2) ∘ (u1, v1) = (v2 u1, v2 v1). Requires S(phi) = T(psi).
template <GroupElement E>
Arrow<E> compose(const Arrow<E>& phi, const Arrow<E>& psi) {
  auto s = source(phi);
  auto t = target(psi);
  if (s != t) throw composition_error(to_string(s), to_string(t));
  return {mul(phi.v, psi.u), mul(phi.v, psi.v)};
}

/// Identity arrow at object a is (a, e).
template <GroupElement E>
Arrow<E> identity_arrow(const E& a, const E& identity) {
  return {a, identity};
}

/// Unique arrow with the given source `s` and middle element `v`: (v s, v).
template <GroupElement E>
Arrow<E> arrow_from_source(const E& s, const E& v) {
  return {mul(v, s), v};
}

/// Arrow lies in the connected component of `a` iff its source is conjugate to a.
template <GroupKernel G>
bool in_component(const G& group, const Arrow<typename G::element_type>& phi, const typename G::element_type& a) {
  return group.is_conjugate(source(phi), a);
}

} // namespace dergrade
