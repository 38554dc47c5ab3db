#pragma once

// Finite twisted sums Σ a_x x over G with coefficients in K_m, multiplied by
//   (a_x x)(b_y y) = a_x Φ_x(b_y) xy,
// and budget-truncated stand-ins for infinite well-ordered sums.

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "mnring/grp.hpp"
#include "mnring/numfield.hpp"

namespace mnr {

class SeriesElement {
 public:
  using Terms = std::map<GroupElement, FieldElement>;  // ascending lex

  explicit SeriesElement(BasisPtr basis) : basis_(std::move(basis)) {}

  static SeriesElement constant(const FieldElement& c);
  static SeriesElement monomial(const FieldElement& c, const GroupElement& g);
  static SeriesElement group(BasisPtr basis, const GroupElement& g);
  static SeriesElement one(BasisPtr basis);

  const BasisPtr& basis() const { return basis_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_monomial() const { return terms_.size() == 1; }
  // Lex-least support element; the element must be nonzero.
  const GroupElement& leading() const;
  FieldElement coefficient(const GroupElement& g) const;
  GenIndex max_index() const;

  void accumulate(const GroupElement& g, const FieldElement& c);

  SeriesElement operator-() const;
  SeriesElement& operator+=(const SeriesElement& b);
  SeriesElement& operator-=(const SeriesElement& b);
  friend SeriesElement operator+(SeriesElement a, const SeriesElement& b) { return a += b; }
  friend SeriesElement operator-(SeriesElement a, const SeriesElement& b) { return a -= b; }
  friend bool operator==(const SeriesElement& a, const SeriesElement& b) {
    return *a.basis_ == *b.basis_ && a.terms_ == b.terms_;
  }

 private:
  BasisPtr basis_;
  Terms terms_;
};

SeriesElement series_add(const SeriesElement& a, const SeriesElement& b);
SeriesElement series_mul(const SeriesElement& a, const SeriesElement& b);
inline SeriesElement operator*(const SeriesElement& a, const SeriesElement& b) { return series_mul(a, b); }

// Exact inverse of a monomial c·u, i.e. Φ_{u⁻¹}(c⁻¹)·u⁻¹. Throws DomainError for
// elements with more than one term (their inverses have infinite support).
SeriesElement monomial_inverse(const SeriesElement& a);

// a b a⁻¹ b⁻¹ for monomial a, b.
SeriesElement commutator(const SeriesElement& a, const SeriesElement& b);

// Rejects any generator index above the window.
void check_window(const SeriesElement& a, GenIndex window);

struct TruncatedSeries {
  SeriesElement body;
  GenIndex window = 0;
  std::optional<std::uint64_t> height_budget;
  // Every term of the represented series lex-below this element appears in
  // `body` with its exact coefficient. Absent: `body` is the whole series.
  std::optional<GroupElement> exact_below;

  bool is_exact() const { return !exact_below.has_value(); }
};

struct SeriesInvOptions {
  std::uint64_t budget = 8;  // K: number of geometric terms beyond the first
  std::optional<std::uint64_t> height_budget;
};

// Writes a = c·u·(1 + ε) with u the lex-least support element, so supp(ε) lies
// strictly above the identity, and returns Σ_{k≤K} (−ε)^k·(c·u)⁻¹. Terms of
// height above the budget are dropped and lower the exactness frontier.
TruncatedSeries series_inv(const SeriesElement& a, const SeriesInvOptions& opts = {});

// a·inv − 1
SeriesElement residual(const SeriesElement& a, const SeriesElement& inv);

// x1⁻¹ + ... + xn⁻¹, the first n terms of α = Σ x_i⁻¹; frontier x_{n+1}⁻¹.
TruncatedSeries alpha_prefix(BasisPtr basis, GenIndex n, GenIndex window);

// "(1 + r1)*x1^-1 - 2*x2"; ascending lex order.
std::string to_string(const SeriesElement& a);
std::string to_string(const TruncatedSeries& t);

}  // namespace mnr
