#pragma once

// Sparse multivariate Laurent polynomials over Q in the central variables
// t1..tm (and s), with exact division and gcd.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mnring/numfield.hpp"

namespace mnr {

inline constexpr std::size_t kMaxVars = 8;
using Exponents = std::array<std::int32_t, kMaxVars>;

class LaurentPoly {
 public:
  struct Term {
    Exponents exps{};
    Rational coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  LaurentPoly() = default;
  LaurentPoly(const Rational& c);  // NOLINT: constants convert implicitly
  LaurentPoly(long c) : LaurentPoly(Rational(c)) {}  // NOLINT

  static LaurentPoly variable(std::size_t v, std::int32_t e = 1);
  static LaurentPoly monomial(const Exponents& e, const Rational& c);
  // Takes unsorted, possibly repeated terms.
  static LaurentPoly from_terms(std::vector<Term> terms);

  // Sorted by exponent vector, lexicographically descending.
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading() const { return terms_.front(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_polynomial() const;  // no negative exponents
  Rational constant_term() const;
  Exponents min_exponents() const;  // componentwise; zero polynomial gives 0
  Exponents max_exponents() const;
  std::size_t size() const { return terms_.size(); }

  LaurentPoly shifted(const Exponents& delta) const;
  LaurentPoly scaled(const Rational& c) const;
  // Positive rational c with this/c integral and primitive; 1 for zero.
  Rational content() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& b);
  LaurentPoly& operator-=(const LaurentPoly& b);
  LaurentPoly& operator*=(const LaurentPoly& b);
  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  LaurentPoly pow(unsigned k) const;

 private:
  std::vector<Term> terms_;
};

inline bool is_zero(const LaurentPoly& p) { return p.is_zero(); }

Exponents operator+(const Exponents& a, const Exponents& b);
Exponents operator-(const Exponents& a, const Exponents& b);

// q with a = q·b in the Laurent ring, if it exists.
std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b);

// Greatest common divisor up to units of the Laurent ring: a polynomial with
// no monomial factor, coprime integer coefficients and positive leading
// coefficient. gcd(0, 0) = 0.
LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

// Names for variable indices; index i prints as names[i].
using VarNames = std::vector<std::string>;
std::string to_string(const LaurentPoly& p, const VarNames& names);

}  // namespace mnr
