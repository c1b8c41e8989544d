#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "algebra.hpp"
#include "coefficient.hpp"
#include "derivation.hpp"
#include "error.hpp"
#include "free_abelian.hpp"
#include "grading.hpp"
#include "groupoid.hpp"
#include "heisenberg.hpp"
#include "permutation.hpp"

namespace dergrade::io {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Scalars

/// Integers that fit in int64 are plain JSON numbers, larger ones strings.
inline json integer_to_json(const integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

inline integer integer_from_json(const json& j, const std::string& where) {
  if (j.is_number_integer()) return integer(j.get<std::int64_t>());
  if (j.is_number_unsigned()) return integer(j.get<std::uint64_t>());
  if (j.is_string()) {
    try {
      return integer(j.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw spec_error(where + ": expected an integer");
}

inline std::int64_t int64_from_json(const json& j, const std::string& where) {
  if (!j.is_number_integer()) throw spec_error(where + ": expected a 64-bit integer");
  return j.get<std::int64_t>();
}

/// [re_num, re_den, im_num, im_den] in lowest terms.
inline json to_json(const Coefficient& c) {
  return json::array({integer_to_json(numerator(c.re())), integer_to_json(denominator(c.re())),
                      integer_to_json(numerator(c.im())), integer_to_json(denominator(c.im()))});
}

/// Accepts the 4-array form or a plain integer.
inline Coefficient coefficient_from_json(const json& j, const std::string& where = "coefficient") {
  if (j.is_number_integer() || j.is_string()) return Coefficient(rational(integer_from_json(j, where)));
  if (!j.is_array() || j.size() != 4) throw spec_error(where + ": expected [re_num, re_den, im_num, im_den]");
  auto part = [&](std::size_t n, std::size_t d) {
    auto den = integer_from_json(j[d], where);
    if (den == 0) throw spec_error(where + ": zero denominator");
    return rational(integer_from_json(j[n], where), den);
  };
  return Coefficient(part(0, 1), part(2, 3));
}

// ---------------------------------------------------------------------------
// Group elements

inline json to_json(const HeisenbergElement& g) { return json::array({g.a, g.b, g.c}); }
inline json to_json(const FreeAbelianElement& g) { return g.x; }
inline json to_json(const Permutation& p) { return p.one_line(); }
inline json to_json(const CosetKey& k) { return k.value; }

inline std::vector<std::int64_t> int_array(const json& j, const std::string& where) {
  if (!j.is_array()) throw spec_error(where + ": expected an array of integers");
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(int64_from_json(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

inline HeisenbergElement element_from_json(const Heisenberg&, const json& j, const std::string& where = "element") {
  auto v = int_array(j, where);
  if (v.size() != 3) throw spec_error(where + ": Heisenberg elements are [a,b,c]");
  return {v[0], v[1], v[2]};
}

inline FreeAbelianElement element_from_json(const FreeAbelian& group, const json& j,
                                            const std::string& where = "element") {
  auto v = int_array(j, where);
  if (v.size() != group.rank())
    throw spec_error(where + ": expected " + std::to_string(group.rank()) + " coordinates");
  return {v};
}

inline Permutation element_from_json(const PermutationGroup& group, const json& j,
                                     const std::string& where = "element") {
  auto v = int_array(j, where);
  if (v.size() != group.degree()) throw spec_error(where + ": expected a permutation of degree " + std::to_string(group.degree()));
  Permutation p;
  try {
    p = Permutation::from_one_line(v);
  } catch (const spec_error& e) {
    throw spec_error(where + ": " + e.what());
  }
  if (!group.contains(p)) throw spec_error(where + ": " + to_string(p) + " is not in " + group.name());
  return p;
}

// ---------------------------------------------------------------------------
// Algebra elements and arrows

/// [[coefficient, element], ...] in the fixed element order.
template <GroupElement E>
json to_json(const AlgebraElement<E>& x) {
  json out = json::array();
  for (const auto& [g, c] : x.terms()) out.push_back(json::array({to_json(c), to_json(g)}));
  return out;
}

template <GroupKernel G>
AlgebraElement<typename G::element_type> algebra_from_json(const G& group, const json& j,
                                                           const std::string& where = "algebra element") {
  if (!j.is_array()) throw spec_error(where + ": expected [[coefficient, element], ...]");
  AlgebraElement<typename G::element_type> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto at = where + "[" + std::to_string(i) + "]";
    if (!j[i].is_array() || j[i].size() != 2) throw spec_error(at + ": expected [coefficient, element]");
    out.add_term(coefficient_from_json(j[i][0], at), element_from_json(group, j[i][1], at));
  }
  return out;
}

template <GroupElement E>
json to_json(const Arrow<E>& phi) {
  return {{"u", to_json(phi.u)}, {"v", to_json(phi.v)}};
}

template <GroupKernel G>
Arrow<typename G::element_type> arrow_from_json(const G& group, const json& j, const std::string& where = "arrow") {
  if (!j.is_object() || !j.contains("u") || !j.contains("v")) throw spec_error(where + ": expected {\"u\": ..., \"v\": ...}");
  return {element_from_json(group, j["u"], where + ".u"), element_from_json(group, j["v"], where + ".v")};
}

// ---------------------------------------------------------------------------
// Derivations

/// Tabular form {"group", "kind": "table", "images": {generator: element}}.
template <GroupKernel G>
json to_json(const Derivation<G>& d) {
  json images = json::object();
  const auto& names = d.group().generator_names();
  for (std::size_t i = 0; i < names.size(); ++i) images[names[i]] = to_json(d.image(i));
  return {{"group", d.group().name()}, {"kind", "table"}, {"images", images}};
}

/// Parses a derivation spec of kind "inner" (field "a"), "central" ("tau",
/// "z") or "table" ("images", validated against the relators unless
/// "unchecked": true, which lets `verify` test a candidate table). Generators
/// missing from "images" map to zero.
template <GroupKernel G>
Derivation<G> derivation_from_json(const std::shared_ptr<const G>& group, const json& j,
                                   const std::string& where = "derivation") {
  if (!j.is_object()) throw spec_error(where + ": expected an object");
  if (j.contains("group") && j["group"] != group->name())
    throw spec_error(where + ": spec is for group " + j["group"].dump() + " but the job uses " + group->name());
  if (!j.contains("kind") || !j["kind"].is_string()) throw spec_error(where + ": missing \"kind\"");
  const auto kind = j["kind"].get<std::string>();
  if (kind == "inner") {
    if (!j.contains("a")) throw spec_error(where + ": inner derivation needs \"a\"");
    return inner_derivation(group, algebra_from_json(*group, j["a"], where + ".a"));
  }
  if (kind == "central") {
    if (!j.contains("tau") || !j["tau"].is_array() || !j.contains("z"))
      throw spec_error(where + ": central derivation needs \"tau\" (array) and \"z\"");
    std::vector<Coefficient> tau;
    for (std::size_t i = 0; i < j["tau"].size(); ++i)
      tau.push_back(coefficient_from_json(j["tau"][i], where + ".tau[" + std::to_string(i) + "]"));
    return central_derivation(group, tau, element_from_json(*group, j["z"], where + ".z"));
  }
  if (kind == "table") {
    if (!j.contains("images") || !j["images"].is_object()) throw spec_error(where + ": table derivation needs \"images\"");
    const auto& names = group->generator_names();
    std::vector<AlgebraElement<typename G::element_type>> images(names.size());
    for (const auto& [name, value] : j["images"].items()) {
      auto it = std::find(names.begin(), names.end(), name);
      if (it == names.end()) throw spec_error(where + ".images: unknown generator \"" + name + "\"");
      images[static_cast<std::size_t>(it - names.begin())] = algebra_from_json(*group, value, where + ".images." + name);
    }
    if (j.contains("unchecked") && !j["unchecked"].is_boolean()) throw spec_error(where + ".unchecked: expected a boolean");
    if (j.value("unchecked", false)) return Derivation<G>::from_table_unchecked(group, std::move(images));
    return Derivation<G>::from_table(group, std::move(images));
  }
  throw spec_error(where + ": unknown kind \"" + kind + "\"");
}

template <GroupKernel G>
json to_json(const GradedDecomposition<G>& dec) {
  json components = json::array();
  for (const auto& [k, d] : dec.components) components.push_back({{"key", to_json(k)}, {"derivation", to_json(d)}});
  return {{"base", to_json(dec.base)}, {"components", components}};
}

/// Parses text, reporting the byte offset of syntax errors.
inline json parse(const std::string& text, const std::string& source = "input") {
  try {
    return json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw parse_error(source + ": malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

} // namespace dergrade::io
