#pragma once

// Level-m crossed-product model of L_m (and of R_m with one more central
// variable s). Elements are normal forms
//   Σ a_{ε,μ} (√p1)^{ε1}···(√pm)^{εm} x1^{μ1}···xm^{μm},   ε, μ ∈ {0,1}^m,
// with coefficients in Q(t1, ..., tm[, s]), subject to
//   (√p_i)² = p_i,  x_i² = t_i,  √p_i x_j = x_j √p_i (i ≠ j),  √p_i x_i = −x_i √p_i.

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "mnring/central.hpp"
#include "mnring/linalg.hpp"
#include "mnring/numfield.hpp"
#include "mnring/series.hpp"

namespace mnr {

inline constexpr std::size_t kMaxCrossedLevel = 5;

using SignMask = std::uint32_t;

// Basis monomial (√p)^ε x^μ. B_m is ordered by (ε, μ), each read as a
// little-endian binary integer: index = (ε << m) | μ.
struct BasisMonomial {
  SignMask eps = 0;
  SignMask mu = 0;
  friend bool operator==(const BasisMonomial&, const BasisMonomial&) = default;
};

struct MonomialProduct {
  int sign = 1;
  SignMask eps = 0;
  SignMask mu = 0;
  Integer radical_factor = 1;  // Π p_i^{ε_i ε'_i}
  SignMask t_mask = 0;         // Π t_i^{μ_i μ'_i}

  // sign · radical_factor · Π t_i over t_mask
  LaurentPoly correction() const;
};

// (√p)^ε x^μ · (√p)^ε' x^μ'
MonomialProduct monomial_mul(const PrimeBasis& basis, BasisMonomial a, BasisMonomial b);

class CrossedElement {
 public:
  struct Term {
    BasisMonomial monomial;
    CentralFraction coeff;
  };

  // Zero of the level-m model (m = basis level); with_s selects R-mode.
  CrossedElement(BasisPtr basis, bool with_s);

  static CrossedElement scalar(BasisPtr basis, bool with_s, CentralFraction c);
  static CrossedElement monomial(BasisPtr basis, bool with_s, BasisMonomial b, CentralFraction c);
  static CrossedElement radical(BasisPtr basis, bool with_s, std::size_t i);    // √p_i
  static CrossedElement generator(BasisPtr basis, bool with_s, std::size_t i);  // x_i
  static CrossedElement t(BasisPtr basis, bool with_s, std::size_t i);          // t_i = x_i²
  // α_m, the central transcendental of R-mode.
  static CrossedElement s(BasisPtr basis);
  // α = x1⁻¹ + ... + xm⁻¹ + α_m (R-mode).
  static CrossedElement alpha(BasisPtr basis);

  const BasisPtr& basis() const { return basis_; }
  std::size_t level() const { return basis_->level(); }
  bool with_s() const { return with_s_; }
  std::size_t dimension() const { return coeffs_.size(); }
  std::size_t num_vars() const { return level() + (with_s_ ? 1 : 0); }

  std::uint32_t index_of(BasisMonomial b) const {
    return (b.eps << level()) | b.mu;
  }
  BasisMonomial monomial_at(std::uint32_t index) const {
    SignMask low = (SignMask{1} << level()) - 1;
    return {index >> level(), index & low};
  }

  const CentralFraction& coefficient(BasisMonomial b) const { return coeffs_[index_of(b)]; }
  const CentralFraction& coefficient_at(std::uint32_t index) const { return coeffs_[index]; }
  void set_coefficient(BasisMonomial b, CentralFraction c) { coeffs_[index_of(b)] = std::move(c); }
  void accumulate(BasisMonomial b, const CentralFraction& c);

  // Nonzero terms in basis order.
  std::vector<Term> terms() const;
  bool is_zero() const;
  bool is_scalar() const;  // only the (0, 0) term
  bool is_one() const;

  CrossedElement operator-() const;
  CrossedElement& operator+=(const CrossedElement& b);
  CrossedElement& operator-=(const CrossedElement& b);
  friend CrossedElement operator+(CrossedElement a, const CrossedElement& b) { return a += b; }
  friend CrossedElement operator-(CrossedElement a, const CrossedElement& b) { return a -= b; }
  friend CrossedElement operator*(const CrossedElement& a, const CrossedElement& b);
  CrossedElement scaled(const CentralFraction& c) const;
  friend bool operator==(const CrossedElement& a, const CrossedElement& b);

 private:
  BasisPtr basis_;
  bool with_s_;
  std::vector<CentralFraction> coeffs_;  // dense, indexed by index_of
};

void require_same_model(const CrossedElement& a, const CrossedElement& b);

CrossedElement crossed_mul(const CrossedElement& a, const CrossedElement& b);

// Matrix of b ↦ a·b on B_m (column j holds the coordinates of a·b_j).
Matrix<CentralFraction> left_regular_matrix(const CrossedElement& a);

// The same operator written over E = F(√p1, ..., √pm) on the right E-basis
// {x^ν}: entry (λ, ν) = Φ_λ(e_{λ⊕ν})·t^{(λ⊕ν)∧ν}, where a = Σ_μ e_μ x^μ.
using ExtensionElement = RadicalElement<CentralFraction>;
Matrix<ExtensionElement> twisted_matrix(const CrossedElement& a);

// Inverse via the 2^m × 2^m system over E; multiply-back checked.
CrossedElement crossed_inv(const CrossedElement& a);
// Inverse via the 4^m × 4^m system over F; multiply-back checked.
CrossedElement crossed_inv_regular(const CrossedElement& a);

// det of left_regular_matrix(a), computed as N_{E/F}(det_E twisted_matrix(a)).
CentralFraction regular_norm(const CrossedElement& a);
// det of left_regular_matrix(a) by fraction-free elimination over F.
CentralFraction regular_norm_direct(const CrossedElement& a);

CrossedElement commutator(const CrossedElement& a, const CrossedElement& b);

// Basis over F of the elements commuting with every √p_i and x_i.
std::vector<CrossedElement> center_basis(BasisPtr basis, bool with_s);
// dim over the center: 4^m / |center_basis|, with rank of B_m checked.
std::size_t dim_over_center(BasisPtr basis, bool with_s);

bool is_central(const CrossedElement& a);
// ±1; throws DomainError when a is not central.
bool is_torsion_central(const CrossedElement& c);
// {i : a·√p_i ≠ √p_i·a}
std::set<std::size_t> noncommuting_witnesses(const CrossedElement& a);

// L-mode element with Laurent coefficients ↦ series, t_i ↦ x_i².
SeriesElement to_series(const CrossedElement& a);
// Series with generators inside the level ↦ normal form.
CrossedElement from_series(const SeriesElement& a, bool with_s = false);

// "2 + t1*r1 - (t1 + 1)/(t2)*r1*x2"; terms in basis order.
std::string to_string(const CrossedElement& a);
std::string monomial_word(BasisMonomial b);

}  // namespace mnr
