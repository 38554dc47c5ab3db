#pragma once

// Exact arithmetic in the multiquadratic field K_m = Q(√p1, ..., √pm).
//
// An element is a finite sum Σ a_ε Π_i (√p_i)^{ε_i} over sign-exponent vectors
// ε ∈ {0,1}^m, stored as bit masks (bit i-1 set <=> √p_i present). The
// coefficient type is a template parameter so the same code serves K_m over Q
// and its extension of scalars over the central fraction field.

#include <bit>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "mnring/errors.hpp"
#include "mnring/grp.hpp"

namespace mnr {

using Rational = mpq_class;
using Integer = mpz_class;

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
inline Rational inverse(const Rational& r) {
  if (sgn(r) == 0) throw DivisionByZero();
  return Rational(1) / r;
}

bool is_prime(std::uint64_t n);

class PrimeBasis {
 public:
  // Strictly increasing primes; throws std::invalid_argument otherwise.
  explicit PrimeBasis(std::vector<std::uint64_t> primes);
  // The first m primes.
  static std::shared_ptr<const PrimeBasis> first(std::size_t m);

  std::size_t level() const { return primes_.size(); }
  const std::vector<std::uint64_t>& primes() const { return primes_; }
  // 1-based, p_i
  std::uint64_t prime(std::size_t i) const;
  // Π p_i over the set bits of mask.
  const Integer& radical_square(std::uint32_t mask) const;

  friend bool operator==(const PrimeBasis& a, const PrimeBasis& b) { return a.primes_ == b.primes_; }

 private:
  std::vector<std::uint64_t> primes_;
  std::vector<Integer> square_table_;  // indexed by mask
};

using BasisPtr = std::shared_ptr<const PrimeBasis>;

namespace detail {
// Unqualified so that coefficient types in this namespace are found by ADL.
template <class C>
bool coeff_is_zero(const C& c) {
  return is_zero(c);
}
}  // namespace detail

inline constexpr std::size_t kMaxFieldLevel = 16;

void require_same_basis(const BasisPtr& a, const BasisPtr& b);

// Bit mask of the generators whose exponent in g is odd, restricted to indices
// 1..level. Φ_g acts on (√p)^ε by (−1)^{popcount(ε & mask)}.
std::uint32_t twist_mask(const GroupElement& g, std::size_t level);

template <class C>
class RadicalElement {
 public:
  using Mask = std::uint32_t;
  using Terms = std::map<Mask, C>;

  explicit RadicalElement(BasisPtr basis) : basis_(std::move(basis)) {}

  static RadicalElement scalar(BasisPtr basis, C c) {
    return monomial(std::move(basis), 0, std::move(c));
  }
  static RadicalElement monomial(BasisPtr basis, Mask eps, C c) {
    RadicalElement out(std::move(basis));
    out.check_mask(eps);
    if (!detail::coeff_is_zero(c)) out.terms_.emplace(eps, std::move(c));
    return out;
  }
  // √p_i, 1-based.
  static RadicalElement radical(BasisPtr basis, std::size_t i) {
    if (i == 0 || i > basis->level())
      throw IndexError("radical index " + std::to_string(i) + " outside 1.." +
                       std::to_string(basis->level()));
    return monomial(std::move(basis), Mask{1} << (i - 1), C(1));
  }

  const BasisPtr& basis() const { return basis_; }
  std::size_t level() const { return basis_->level(); }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // Only the ε = 0 term is present (or the element is zero).
  bool is_scalar() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }

  C coefficient(Mask eps) const {
    auto it = terms_.find(eps);
    return it == terms_.end() ? C() : it->second;
  }

  // Adds c at ε, dropping the entry if it cancels.
  void accumulate(Mask eps, const C& c) {
    if (detail::coeff_is_zero(c)) return;
    check_mask(eps);
    auto [it, inserted] = terms_.try_emplace(eps, c);
    if (!inserted) {
      it->second += c;
      if (detail::coeff_is_zero(it->second)) terms_.erase(it);
    }
  }

  RadicalElement operator-() const {
    RadicalElement out(*this);
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
  }
  RadicalElement& operator+=(const RadicalElement& b) {
    require_same_basis(basis_, b.basis_);
    for (const auto& [m, c] : b.terms_) accumulate(m, c);
    return *this;
  }
  RadicalElement& operator-=(const RadicalElement& b) {
    require_same_basis(basis_, b.basis_);
    for (const auto& [m, c] : b.terms_) accumulate(m, -c);
    return *this;
  }
  friend RadicalElement operator+(RadicalElement a, const RadicalElement& b) { return a += b; }
  friend RadicalElement operator-(RadicalElement a, const RadicalElement& b) { return a -= b; }

  friend RadicalElement operator*(const RadicalElement& a, const RadicalElement& b) {
    require_same_basis(a.basis_, b.basis_);
    RadicalElement out(a.basis_);
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        C prod = ca * cb;
        if (Mask both = ma & mb; both != 0) prod *= C(Rational(a.basis_->radical_square(both)));
        out.accumulate(ma ^ mb, prod);
      }
    }
    return out;
  }
  RadicalElement& operator*=(const RadicalElement& b) { return *this = *this * b; }

  RadicalElement scaled(const C& s) const {
    RadicalElement out(basis_);
    if (detail::coeff_is_zero(s)) return out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, c * s);
    return out;
  }

  // Negates the terms whose mask meets `mask` an odd number of times: the
  // automorphism Π_{i in mask} f_i.
  RadicalElement twisted(Mask mask) const {
    RadicalElement out(*this);
    for (auto& [m, c] : out.terms_)
      if (std::popcount(m & mask) % 2 == 1) c = -c;
    return out;
  }

  friend bool operator==(const RadicalElement& a, const RadicalElement& b) {
    return *a.basis_ == *b.basis_ && a.terms_ == b.terms_;
  }

 private:
  void check_mask(Mask eps) const {
    if (basis_->level() < 32 && (eps >> basis_->level()) != 0)
      throw StructuralError("radical outside the prime basis");
  }

  BasisPtr basis_;
  Terms terms_;
};

template <class C>
bool is_zero(const RadicalElement<C>& a) {
  return a.is_zero();
}

namespace detail {

template <class C>
RadicalElement<C> inverse_below(const RadicalElement<C>& a, std::size_t k) {
  using Mask = typename RadicalElement<C>::Mask;
  if (k == 0) return RadicalElement<C>::scalar(a.basis(), inverse(a.coefficient(0)));
  const Mask top = Mask{1} << (k - 1);
  bool has_top = false;
  for (const auto& [m, c] : a.terms()) has_top = has_top || (m & top);
  if (!has_top) return inverse_below(a, k - 1);
  // a = c + d√p_k; (c + d√p_k)(c − d√p_k) = c² − p_k d² lies one level down.
  RadicalElement<C> conj = a.twisted(top);
  RadicalElement<C> norm = a * conj;
  return conj * inverse_below(norm, k - 1);
}

}  // namespace detail

// Inverse by recursive conjugation down the tower of quadratic extensions.
template <class C>
RadicalElement<C> inverse(const RadicalElement<C>& a) {
  if (a.is_zero()) throw DivisionByZero();
  return detail::inverse_below(a, a.level());
}

using FieldElement = RadicalElement<Rational>;

FieldElement field_add(const FieldElement& a, const FieldElement& b);
FieldElement field_mul(const FieldElement& a, const FieldElement& b);
// Checks the product with the argument is 1 before returning.
FieldElement field_inv(const FieldElement& a);

// f_i: √p_i ↦ −√p_i, fixes √p_j for j ≠ i.
template <class C>
RadicalElement<C> apply_auto(std::size_t i, const RadicalElement<C>& a) {
  if (i == 0 || i > a.level())
    throw IndexError("automorphism index " + std::to_string(i) + " outside 1.." +
                     std::to_string(a.level()));
  return a.twisted(typename RadicalElement<C>::Mask{1} << (i - 1));
}

// Φ_g = Π f_i^{n_i}. Generators beyond the basis act trivially.
template <class C>
RadicalElement<C> apply_phi(const GroupElement& g, const RadicalElement<C>& a) {
  return a.twisted(twist_mask(g, a.level()));
}

// f_i(a) = a for every i.
bool fixed_by_all(const FieldElement& a);

// "r1*r3" for ε = 0b101; empty for ε = 0.
std::string radical_word(std::uint32_t eps);

// "3 + 1/2*r1 - r1*r2"; zero prints as "0".
std::string to_string(const FieldElement& a);

}  // namespace mnr
