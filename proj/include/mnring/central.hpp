#pragma once

// Quotients of Laurent polynomials in the central variables: the coefficient
// field of the crossed-product model.

#include <string>

#include "mnring/poly.hpp"

namespace mnr {

class CentralFraction {
 public:
  CentralFraction() : den_(Rational(1)) {}
  CentralFraction(const Rational& c) : num_(c), den_(Rational(1)) {}  // NOLINT
  CentralFraction(long c) : CentralFraction(Rational(c)) {}           // NOLINT
  CentralFraction(LaurentPoly p) : num_(std::move(p)), den_(Rational(1)) {}  // NOLINT
  // Throws DivisionByZero when den is zero.
  CentralFraction(LaurentPoly num, LaurentPoly den);

  static CentralFraction variable(std::size_t v) { return CentralFraction(LaurentPoly::variable(v)); }

  // den is a polynomial with no monomial factor, coprime integer coefficients
  // and positive leading coefficient; with gcd reduction on, num and den are
  // coprime, which makes the representation canonical.
  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_laurent() const { return den_.is_constant(); }
  bool is_rational() const { return is_laurent() && num_.is_constant(); }

  CentralFraction operator-() const;
  CentralFraction& operator+=(const CentralFraction& b);
  CentralFraction& operator-=(const CentralFraction& b);
  CentralFraction& operator*=(const CentralFraction& b);
  CentralFraction& operator/=(const CentralFraction& b);
  friend CentralFraction operator+(CentralFraction a, const CentralFraction& b) { return a += b; }
  friend CentralFraction operator-(CentralFraction a, const CentralFraction& b) { return a -= b; }
  friend CentralFraction operator*(CentralFraction a, const CentralFraction& b) { return a *= b; }
  friend CentralFraction operator/(CentralFraction a, const CentralFraction& b) { return a /= b; }

  // Cross-multiplication, so it is correct with or without gcd reduction.
  friend bool operator==(const CentralFraction& a, const CentralFraction& b);

  // Full gcd reduction on every normalization (default on). When off, only
  // content and common monomial factors are removed.
  static void set_gcd_reduction(bool on);
  static bool gcd_reduction();

 private:
  void normalize(bool reduce = gcd_reduction());

  LaurentPoly num_;
  LaurentPoly den_;
};

inline bool is_zero(const CentralFraction& c) { return c.is_zero(); }
CentralFraction inverse(const CentralFraction& c);
CentralFraction pow(const CentralFraction& c, long k);

// Variable names for a model of level m: t1..tm, then s when with_s.
VarNames central_names(std::size_t level, bool with_s);

// "3", "t1 + 2", "(t1 + 2)/(t2 - 1)".
std::string to_string(const CentralFraction& c, const VarNames& names);

}  // namespace mnr
