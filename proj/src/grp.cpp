#include "mnring/grp.hpp"

#include <algorithm>
#include <cstdlib>

namespace mnr {

GroupElement::GroupElement(std::initializer_list<Entry> entries)
    : entries_(entries) {
  canonicalize();
}

GroupElement::GroupElement(std::vector<Entry> entries) : entries_(std::move(entries)) {
  canonicalize();
}

GroupElement GroupElement::generator(GenIndex i, Exponent e) { return GroupElement{{i, e}}; }

void GroupElement::canonicalize() {
  std::sort(entries_.begin(), entries_.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  std::vector<Entry> out;
  out.reserve(entries_.size());
  for (const auto& [i, e] : entries_) {
    if (!out.empty() && out.back().first == i)
      out.back().second += e;
    else
      out.emplace_back(i, e);
    if (out.back().second == 0) out.pop_back();
  }
  entries_ = std::move(out);
}

Exponent GroupElement::exponent(GenIndex i) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                             [](const Entry& e, GenIndex k) { return e.first < k; });
  return (it != entries_.end() && it->first == i) ? it->second : 0;
}

std::uint64_t GroupElement::height() const {
  std::uint64_t h = 0;
  for (const auto& [i, e] : entries_) h += static_cast<std::uint64_t>(e < 0 ? -e : e);
  return h;
}

GroupElement compose(const GroupElement& g, const GroupElement& h) {
  std::vector<GroupElement::Entry> merged;
  merged.reserve(g.entries().size() + h.entries().size());
  auto a = g.entries().begin(), ae = g.entries().end();
  auto b = h.entries().begin(), be = h.entries().end();
  while (a != ae || b != be) {
    if (b == be || (a != ae && a->first < b->first)) {
      merged.push_back(*a++);
    } else if (a == ae || b->first < a->first) {
      merged.push_back(*b++);
    } else {
      if (Exponent s = a->second + b->second; s != 0) merged.emplace_back(a->first, s);
      ++a;
      ++b;
    }
  }
  return GroupElement(std::move(merged));
}

GroupElement invert(const GroupElement& g) {
  std::vector<GroupElement::Entry> neg(g.entries());
  for (auto& [i, e] : neg) e = -e;
  return GroupElement(std::move(neg));
}

GroupElement power(const GroupElement& g, Exponent k) {
  std::vector<GroupElement::Entry> out(g.entries());
  for (auto& [i, e] : out) e *= k;
  return GroupElement(std::move(out));
}

std::strong_ordering lex_compare(const GroupElement& g, const GroupElement& h) {
  auto a = g.entries().begin(), ae = g.entries().end();
  auto b = h.entries().begin(), be = h.entries().end();
  while (a != ae || b != be) {
    // Smallest index present in either sequence; the other one is 0 there.
    if (b == be || (a != ae && a->first < b->first)) return a->second <=> 0;
    if (a == ae || b->first < a->first) return 0 <=> b->second;
    if (a->second != b->second) return a->second <=> b->second;
    ++a;
    ++b;
  }
  return std::strong_ordering::equal;
}

bool in_H(const GroupElement& g) {
  return std::all_of(g.entries().begin(), g.entries().end(),
                     [](const auto& e) { return e.second % 2 == 0; });
}

bool translation_invariance_check(const GroupElement& g, const GroupElement& h,
                                  const GroupElement& k) {
  return lex_compare(g, h) == lex_compare(compose(g, k), compose(h, k));
}

std::string to_string(const GroupElement& g) {
  if (g.is_identity()) return "1";
  std::string out;
  for (const auto& [i, e] : g.entries()) {
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(i);
    if (e != 1) out += '^' + std::to_string(e);
  }
  return out;
}

}  // namespace mnr
