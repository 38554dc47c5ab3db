#pragma once

// The free abelian group G = ⊕ℤ on generators x1, x2, ..., written
// multiplicatively, with its lexicographic total order.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace mnr {

using GenIndex = std::uint32_t;  // generators are numbered from 1
using Exponent = std::int64_t;

class GroupElement {
 public:
  using Entry = std::pair<GenIndex, Exponent>;

  GroupElement() = default;  // identity
  // Entries may repeat or be zero; they are summed and canonicalized.
  GroupElement(std::initializer_list<Entry> entries);
  explicit GroupElement(std::vector<Entry> entries);

  static GroupElement generator(GenIndex i, Exponent e = 1);

  // Sorted by index, no zero exponents.
  const std::vector<Entry>& entries() const { return entries_; }
  Exponent exponent(GenIndex i) const;
  bool is_identity() const { return entries_.empty(); }
  GenIndex max_index() const { return entries_.empty() ? 0 : entries_.back().first; }
  // Σ|n_i|
  std::uint64_t height() const;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;

 private:
  void canonicalize();
  std::vector<Entry> entries_;
};

GroupElement compose(const GroupElement& g, const GroupElement& h);
GroupElement invert(const GroupElement& g);
GroupElement power(const GroupElement& g, Exponent k);

// Lexicographic order: the first index at which the exponents differ decides,
// absent indices count as 0.
std::strong_ordering lex_compare(const GroupElement& g, const GroupElement& h);

// H = {x^2 : x in G}, i.e. all exponents even.
bool in_H(const GroupElement& g);

bool translation_invariance_check(const GroupElement& g, const GroupElement& h,
                                  const GroupElement& k);

inline GroupElement operator*(const GroupElement& g, const GroupElement& h) { return compose(g, h); }
inline std::strong_ordering operator<=>(const GroupElement& g, const GroupElement& h) {
  return lex_compare(g, h);
}

// "x1^2*x3^-1"; identity prints as "1".
std::string to_string(const GroupElement& g);

}  // namespace mnr
