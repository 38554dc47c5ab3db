#include "mnring/central.hpp"

#include <atomic>

namespace mnr {

namespace {
std::atomic<bool> g_gcd_reduction{true};
}

void CentralFraction::set_gcd_reduction(bool on) { g_gcd_reduction.store(on); }
bool CentralFraction::gcd_reduction() { return g_gcd_reduction.load(); }

CentralFraction::CentralFraction(LaurentPoly num, LaurentPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero();
  normalize();
}

void CentralFraction::normalize(bool reduce) {
  if (num_.is_zero()) {
    den_ = LaurentPoly(Rational(1));
    return;
  }
  if (den_.is_monomial()) {
    auto q = divide_exact(num_, den_);
    num_ = std::move(*q);
    den_ = LaurentPoly(Rational(1));
    return;
  }
  // Move the monomial factor and the content of den into num.
  Exponents shift = Exponents{} - den_.min_exponents();
  Rational c = den_.content();
  if (sgn(den_.shifted(shift).leading().coeff) < 0) c = -c;
  Rational inv_c = Rational(1) / c;
  den_ = den_.shifted(shift).scaled(inv_c);
  num_ = num_.shifted(shift).scaled(inv_c);
  if (!reduce) return;
  LaurentPoly g = gcd(num_, den_);
  if (g.is_constant()) return;
  num_ = *divide_exact(num_, g);
  den_ = *divide_exact(den_, g);
  // g has positive leading coefficient and den was primitive, so den/g is too.
  if (den_.is_constant()) {
    num_ = num_.scaled(Rational(1) / den_.leading().coeff);
    den_ = LaurentPoly(Rational(1));
  }
}

CentralFraction CentralFraction::operator-() const {
  CentralFraction out(*this);
  out.num_ = -out.num_;
  return out;
}

CentralFraction& CentralFraction::operator+=(const CentralFraction& b) {
  if (b.is_zero()) return *this;
  if (is_zero()) return *this = b;
  if (den_ == b.den_) {
    num_ += b.num_;
    if (!den_.is_constant()) normalize();
    else if (num_.is_zero()) den_ = LaurentPoly(Rational(1));
    return *this;
  }
  if (b.den_.is_constant()) {
    num_ += b.num_ * den_;
    normalize();
    return *this;
  }
  if (den_.is_constant()) {
    num_ = num_ * b.den_ + b.num_;
    den_ = b.den_;
    normalize();
    return *this;
  }
  // n1/d1 + n2/d2 over lcm(d1, d2).
  LaurentPoly g = gcd_reduction() ? gcd(den_, b.den_) : LaurentPoly(Rational(1));
  LaurentPoly d1 = g.is_constant() ? den_ : *divide_exact(den_, g);
  LaurentPoly d2 = g.is_constant() ? b.den_ : *divide_exact(b.den_, g);
  num_ = num_ * d2 + b.num_ * d1;
  den_ = den_ * d2;
  normalize();
  return *this;
}

CentralFraction& CentralFraction::operator-=(const CentralFraction& b) { return *this += -b; }

CentralFraction& CentralFraction::operator*=(const CentralFraction& b) {
  if (is_zero()) return *this;
  if (b.is_zero()) return *this = CentralFraction();
  if (den_.is_constant() && b.den_.is_constant()) {
    num_ *= b.num_;
    return *this;
  }
  // Monomials are units of the Laurent ring: no new common factor can appear.
  if (b.den_.is_constant() && b.num_.is_monomial()) {
    num_ *= b.num_;
    return *this;
  }
  if (den_.is_constant() && num_.is_monomial()) {
    num_ *= b.num_;
    den_ = b.den_;
    return *this;
  }
  if (gcd_reduction()) {
    // Cancel crosswise first so the products stay small.
    LaurentPoly n1 = num_, d1 = den_, n2 = b.num_, d2 = b.den_;
    if (!d2.is_constant()) {
      LaurentPoly g = gcd(n1, d2);
      if (!g.is_constant()) n1 = *divide_exact(n1, g), d2 = *divide_exact(d2, g);
    }
    if (!d1.is_constant()) {
      LaurentPoly g = gcd(n2, d1);
      if (!g.is_constant()) n2 = *divide_exact(n2, g), d1 = *divide_exact(d1, g);
    }
    num_ = n1 * n2;
    den_ = d1 * d2;
    // Factors are coprime already; only the unit normalization remains.
    normalize(false);
    return *this;
  }
  num_ *= b.num_;
  den_ *= b.den_;
  normalize();
  return *this;
}

CentralFraction& CentralFraction::operator/=(const CentralFraction& b) { return *this *= inverse(b); }

bool operator==(const CentralFraction& a, const CentralFraction& b) {
  if (a.den_ == b.den_) return a.num_ == b.num_;
  return a.num_ * b.den_ == b.num_ * a.den_;
}

CentralFraction inverse(const CentralFraction& c) {
  if (c.is_zero()) throw DivisionByZero();
  return CentralFraction(c.den(), c.num());
}

CentralFraction pow(const CentralFraction& c, long k) {
  if (k < 0) return pow(inverse(c), -k);
  return CentralFraction(c.num().pow(static_cast<unsigned>(k)), c.den().pow(static_cast<unsigned>(k)));
}

VarNames central_names(std::size_t level, bool with_s) {
  VarNames out;
  for (std::size_t i = 1; i <= level; ++i) out.push_back("t" + std::to_string(i));
  if (with_s) out.push_back("s");
  return out;
}

std::string to_string(const CentralFraction& c, const VarNames& names) {
  std::string num = to_string(c.num(), names);
  if (c.is_laurent()) return num;
  if (c.num().size() > 1) num = "(" + num + ")";
  return num + "/(" + to_string(c.den(), names) + ")";
}

}  // namespace mnr
