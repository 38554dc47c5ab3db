#include "mnring/series.hpp"

#include <stdexcept>

namespace mnr {

SeriesElement SeriesElement::constant(const FieldElement& c) {
  return monomial(c, GroupElement());
}

SeriesElement SeriesElement::monomial(const FieldElement& c, const GroupElement& g) {
  SeriesElement out(c.basis());
  out.accumulate(g, c);
  return out;
}

SeriesElement SeriesElement::group(BasisPtr basis, const GroupElement& g) {
  FieldElement one = FieldElement::scalar(basis, Rational(1));
  return monomial(one, g);
}

SeriesElement SeriesElement::one(BasisPtr basis) { return group(std::move(basis), GroupElement()); }

bool SeriesElement::is_one() const {
  if (terms_.size() != 1) return false;
  const auto& [g, c] = *terms_.begin();
  return g.is_identity() && c.is_scalar() && c.coefficient(0) == 1;
}

const GroupElement& SeriesElement::leading() const {
  if (terms_.empty()) throw DomainError("zero series has no leading term");
  return terms_.begin()->first;
}

FieldElement SeriesElement::coefficient(const GroupElement& g) const {
  auto it = terms_.find(g);
  return it == terms_.end() ? FieldElement(basis_) : it->second;
}

GenIndex SeriesElement::max_index() const {
  GenIndex out = 0;
  for (const auto& [g, c] : terms_) out = std::max(out, g.max_index());
  return out;
}

void SeriesElement::accumulate(const GroupElement& g, const FieldElement& c) {
  if (c.is_zero()) return;
  require_same_basis(basis_, c.basis());
  auto [it, inserted] = terms_.try_emplace(g, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SeriesElement SeriesElement::operator-() const {
  SeriesElement out(*this);
  for (auto& [g, c] : out.terms_) c = -c;
  return out;
}

SeriesElement& SeriesElement::operator+=(const SeriesElement& b) {
  require_same_basis(basis_, b.basis_);
  for (const auto& [g, c] : b.terms_) accumulate(g, c);
  return *this;
}

SeriesElement& SeriesElement::operator-=(const SeriesElement& b) {
  require_same_basis(basis_, b.basis_);
  for (const auto& [g, c] : b.terms_) accumulate(g, -c);
  return *this;
}

SeriesElement series_add(const SeriesElement& a, const SeriesElement& b) { return a + b; }

SeriesElement series_mul(const SeriesElement& a, const SeriesElement& b) {
  require_same_basis(a.basis(), b.basis());
  SeriesElement out(a.basis());
  for (const auto& [x, ax] : a.terms()) {
    for (const auto& [y, by] : b.terms()) out.accumulate(compose(x, y), ax * apply_phi(x, by));
  }
  return out;
}

SeriesElement monomial_inverse(const SeriesElement& a) {
  if (a.is_zero()) throw DivisionByZero();
  if (!a.is_monomial()) throw DomainError("only monomials have finite inverses");
  const auto& [u, c] = *a.terms().begin();
  GroupElement u_inv = invert(u);
  return SeriesElement::monomial(apply_phi(u_inv, inverse(c)), u_inv);
}

SeriesElement commutator(const SeriesElement& a, const SeriesElement& b) {
  return a * b * monomial_inverse(a) * monomial_inverse(b);
}

void check_window(const SeriesElement& a, GenIndex window) {
  if (a.max_index() > window)
    throw StructuralError("generator x" + std::to_string(a.max_index()) + " outside window 1.." +
                          std::to_string(window));
}

namespace {

// Drops terms above the height budget; returns the lex-least dropped support element.
std::optional<GroupElement> trim_height(SeriesElement& s, std::optional<std::uint64_t> budget) {
  if (!budget) return std::nullopt;
  std::optional<GroupElement> lowest;
  SeriesElement kept(s.basis());
  for (const auto& [g, c] : s.terms()) {
    if (g.height() > *budget) {
      if (!lowest) lowest = g;
    } else {
      kept.accumulate(g, c);
    }
  }
  s = std::move(kept);
  return lowest;
}

}  // namespace

TruncatedSeries series_inv(const SeriesElement& a, const SeriesInvOptions& opts) {
  if (a.is_zero()) throw DivisionByZero();
  const BasisPtr& basis = a.basis();
  TruncatedSeries out{SeriesElement(basis), a.max_index(), opts.height_budget, std::nullopt};

  const auto& [u, c] = *a.terms().begin();
  SeriesElement lead_inv = monomial_inverse(SeriesElement::monomial(c, u));
  SeriesElement eps = lead_inv * a - SeriesElement::one(basis);
  if (eps.is_zero()) {
    out.body = lead_inv;
    return out;
  }
  if (lex_compare(eps.leading(), GroupElement()) <= 0)
    throw std::logic_error("series_inv: normalized tail is not strictly positive");

  SeriesElement neg_eps = -eps;
  SeriesElement term = SeriesElement::one(basis);
  SeriesElement sum = term;
  std::optional<GroupElement> frontier;
  for (std::uint64_t k = 1; k <= opts.budget && !term.is_zero(); ++k) {
    term = term * neg_eps;
    if (auto dropped = trim_height(term, opts.height_budget)) {
      if (!frontier || lex_compare(*dropped, *frontier) < 0) frontier = dropped;
    }
    sum += term;
  }
  // The omitted tail Σ_{k>K} (−ε)^k starts at (min ε)^{K+1}.
  GroupElement tail = power(eps.leading(), static_cast<Exponent>(opts.budget + 1));
  if (!frontier || lex_compare(tail, *frontier) < 0) frontier = tail;

  out.body = sum * lead_inv;
  out.exact_below = compose(*frontier, invert(u));
  return out;
}

SeriesElement residual(const SeriesElement& a, const SeriesElement& inv) {
  return a * inv - SeriesElement::one(a.basis());
}

TruncatedSeries alpha_prefix(BasisPtr basis, GenIndex n, GenIndex window) {
  if (n > window)
    throw StructuralError("alpha prefix length " + std::to_string(n) + " exceeds window " +
                          std::to_string(window));
  TruncatedSeries out{SeriesElement(basis), window, std::nullopt, GroupElement::generator(n + 1, -1)};
  for (GenIndex i = 1; i <= n; ++i) out.body += SeriesElement::group(basis, GroupElement::generator(i, -1));
  return out;
}

std::string to_string(const SeriesElement& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto& [g, c] : a.terms()) {
    std::string coeff = to_string(c);
    bool single = c.terms().size() == 1;
    bool negative = single && sgn(c.terms().begin()->second) < 0;
    if (negative) coeff = to_string(-c);
    if (!out.empty()) out += negative ? " - " : " + ";
    else if (negative) out += "-";
    if (g.is_identity()) {
      out += single ? coeff : "(" + coeff + ")";
    } else {
      if (coeff != "1") out += (single ? coeff : "(" + coeff + ")") + "*";
      out += to_string(g);
    }
  }
  return out;
}

std::string to_string(const TruncatedSeries& t) {
  std::string out = to_string(t.body);
  if (t.exact_below) out += " + O(" + to_string(*t.exact_below) + ")";
  return out;
}

}  // namespace mnr
