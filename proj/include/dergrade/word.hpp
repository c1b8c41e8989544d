#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace dergrade {

/// One syllable s^power of a word over the generating set.
struct Letter {
  std::size_t generator;
  std::int64_t power;

  friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

inline Word inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->generator, -it->power});
  return out;
}

inline Word concat(std::initializer_list<Word> parts) {
  Word out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

/// s t s^-1 t^-1
inline Word commutator_word(const Word& s, const Word& t) {
  return concat({s, t, inverse(s), inverse(t)});
}

/// An element that appears as the base of a syllable in a kernel's normal
/// word. Generators have no definition; derived bases (the Heisenberg `z`)
/// carry their expression over the generators. Central bases let the
/// Leibniz expansion collapse d(z^m) to m z^(m-1) d(z).
template <class E>
struct WordBase {
  E value;
  std::optional<Word> definition;
  bool central = false;
};

/// base^power where `base` indexes the kernel's word_bases().
struct Syllable {
  std::size_t base;
  std::int64_t power;
};

} // namespace dergrade
