#include "mnring/crossed.hpp"

#include <bit>
#include <stdexcept>

namespace mnr {

LaurentPoly MonomialProduct::correction() const {
  Exponents e{};
  for (std::size_t i = 0; i < 32 && (t_mask >> i); ++i)
    if ((t_mask >> i) & 1) e[i] = 1;
  Rational c(radical_factor);
  if (sign < 0) c = -c;
  return LaurentPoly::monomial(e, c);
}

MonomialProduct monomial_mul(const PrimeBasis& basis, BasisMonomial a, BasisMonomial b) {
  MonomialProduct out;
  // Moving x^μ past (√p)^ε' picks up Φ_{x^μ}.
  out.sign = std::popcount(a.mu & b.eps) % 2 ? -1 : 1;
  out.eps = a.eps ^ b.eps;
  out.mu = a.mu ^ b.mu;
  out.radical_factor = basis.radical_square(a.eps & b.eps);
  out.t_mask = a.mu & b.mu;
  return out;
}

CrossedElement::CrossedElement(BasisPtr basis, bool with_s)
    : basis_(std::move(basis)), with_s_(with_s) {
  if (basis_->level() > kMaxCrossedLevel)
    throw std::invalid_argument("crossed model supports levels up to " + std::to_string(kMaxCrossedLevel));
  coeffs_.resize(std::size_t{1} << (2 * basis_->level()));
}

CrossedElement CrossedElement::scalar(BasisPtr basis, bool with_s, CentralFraction c) {
  return monomial(std::move(basis), with_s, {}, std::move(c));
}

CrossedElement CrossedElement::monomial(BasisPtr basis, bool with_s, BasisMonomial b, CentralFraction c) {
  CrossedElement out(std::move(basis), with_s);
  SignMask limit = SignMask{1} << out.level();
  if (b.eps >= limit || b.mu >= limit) throw StructuralError("basis monomial outside the level");
  out.set_coefficient(b, std::move(c));
  return out;
}

namespace {
void check_index(std::size_t i, std::size_t level) {
  if (i == 0 || i > level)
    throw IndexError("generator index " + std::to_string(i) + " outside 1.." + std::to_string(level));
}
}  // namespace

CrossedElement CrossedElement::radical(BasisPtr basis, bool with_s, std::size_t i) {
  check_index(i, basis->level());
  return monomial(std::move(basis), with_s, {SignMask{1} << (i - 1), 0}, CentralFraction(1));
}

CrossedElement CrossedElement::generator(BasisPtr basis, bool with_s, std::size_t i) {
  check_index(i, basis->level());
  return monomial(std::move(basis), with_s, {0, SignMask{1} << (i - 1)}, CentralFraction(1));
}

CrossedElement CrossedElement::t(BasisPtr basis, bool with_s, std::size_t i) {
  check_index(i, basis->level());
  return scalar(std::move(basis), with_s, CentralFraction::variable(i - 1));
}

CrossedElement CrossedElement::s(BasisPtr basis) {
  std::size_t m = basis->level();
  return scalar(std::move(basis), true, CentralFraction::variable(m));
}

CrossedElement CrossedElement::alpha(BasisPtr basis) {
  CrossedElement out = s(basis);
  for (std::size_t i = 1; i <= basis->level(); ++i) {
    CentralFraction inv_t = inverse(CentralFraction::variable(i - 1));
    out += monomial(basis, true, {0, SignMask{1} << (i - 1)}, inv_t);
  }
  return out;
}

void CrossedElement::accumulate(BasisMonomial b, const CentralFraction& c) {
  if (c.is_zero()) return;
  coeffs_[index_of(b)] += c;
}

std::vector<CrossedElement::Term> CrossedElement::terms() const {
  std::vector<Term> out;
  for (std::uint32_t i = 0; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero()) out.push_back({monomial_at(i), coeffs_[i]});
  return out;
}

bool CrossedElement::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

bool CrossedElement::is_scalar() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero()) return false;
  return true;
}

bool CrossedElement::is_one() const { return is_scalar() && coeffs_[0] == CentralFraction(1); }

CrossedElement CrossedElement::operator-() const {
  CrossedElement out(*this);
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

void require_same_model(const CrossedElement& a, const CrossedElement& b) {
  require_same_basis(a.basis(), b.basis());
  if (a.with_s() != b.with_s()) throw StructuralError("operands from different modes (L vs R)");
}

CrossedElement& CrossedElement::operator+=(const CrossedElement& b) {
  require_same_model(*this, b);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (!b.coeffs_[i].is_zero()) coeffs_[i] += b.coeffs_[i];
  return *this;
}

CrossedElement& CrossedElement::operator-=(const CrossedElement& b) {
  require_same_model(*this, b);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (!b.coeffs_[i].is_zero()) coeffs_[i] -= b.coeffs_[i];
  return *this;
}

CrossedElement operator*(const CrossedElement& a, const CrossedElement& b) {
  require_same_model(a, b);
  CrossedElement out(a.basis_, a.with_s_);
  const auto ta = a.terms(), tb = b.terms();
  for (const auto& [ma, ca] : ta) {
    for (const auto& [mb, cb] : tb) {
      MonomialProduct p = monomial_mul(*a.basis_, ma, mb);
      out.accumulate({p.eps, p.mu}, ca * cb * CentralFraction(p.correction()));
    }
  }
  return out;
}

CrossedElement CrossedElement::scaled(const CentralFraction& c) const {
  CrossedElement out(basis_, with_s_);
  if (c.is_zero()) return out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero()) out.coeffs_[i] = coeffs_[i] * c;
  return out;
}

bool operator==(const CrossedElement& a, const CrossedElement& b) {
  return *a.basis_ == *b.basis_ && a.with_s_ == b.with_s_ && a.coeffs_ == b.coeffs_;
}

CrossedElement crossed_mul(const CrossedElement& a, const CrossedElement& b) { return a * b; }

Matrix<CentralFraction> left_regular_matrix(const CrossedElement& a) {
  const std::size_t n = a.dimension();
  Matrix<CentralFraction> m(n, n);
  const auto terms = a.terms();
  for (std::uint32_t j = 0; j < n; ++j) {
    BasisMonomial bj = a.monomial_at(j);
    for (const auto& [ma, ca] : terms) {
      MonomialProduct p = monomial_mul(*a.basis(), ma, bj);
      m(a.index_of({p.eps, p.mu}), j) += ca * CentralFraction(p.correction());
    }
  }
  return m;
}

namespace {

// e_μ = Σ_ε a_{ε,μ} (√p)^ε
std::vector<ExtensionElement> extension_coefficients(const CrossedElement& a) {
  const std::size_t d = std::size_t{1} << a.level();
  std::vector<ExtensionElement> e(d, ExtensionElement(a.basis()));
  for (const auto& [b, c] : a.terms()) e[b.mu].accumulate(b.eps, c);
  return e;
}

CentralFraction t_monomial(SignMask mask) {
  Exponents e{};
  for (std::size_t i = 0; i < 32 && (mask >> i); ++i)
    if ((mask >> i) & 1) e[i] = 1;
  return CentralFraction(LaurentPoly::monomial(e, Rational(1)));
}

// N_{E/F}(z) = Π_σ σ(z), folded down the tower one quadratic step at a time.
CentralFraction extension_norm(ExtensionElement z) {
  for (std::size_t k = z.level(); k >= 1; --k) z = z * z.twisted(SignMask{1} << (k - 1));
  if (!z.is_scalar()) throw std::logic_error("extension norm left the base field");
  return z.coefficient(0);
}

}  // namespace

Matrix<ExtensionElement> twisted_matrix(const CrossedElement& a) {
  const std::size_t d = std::size_t{1} << a.level();
  const auto e = extension_coefficients(a);
  Matrix<ExtensionElement> m(d, d, ExtensionElement(a.basis()));
  for (SignMask lambda = 0; lambda < d; ++lambda) {
    for (SignMask nu = 0; nu < d; ++nu) {
      SignMask mu = lambda ^ nu;
      if (e[mu].is_zero()) continue;
      m(lambda, nu) = e[mu].twisted(lambda).scaled(t_monomial(mu & nu));
    }
  }
  return m;
}

namespace {

void check_inverse(const CrossedElement& a, const CrossedElement& inv) {
  if (!(a * inv).is_one()) throw std::logic_error("crossed_inv: multiply-back check failed");
}

}  // namespace

CrossedElement crossed_inv(const CrossedElement& a) {
  if (a.is_zero()) throw DivisionByZero();
  const std::size_t d = std::size_t{1} << a.level();
  const ExtensionElement zero(a.basis());
  std::vector<ExtensionElement> rhs(d, zero);
  rhs[0] = ExtensionElement::scalar(a.basis(), CentralFraction(1));
  auto v = solve(twisted_matrix(a), std::move(rhs), zero);
  if (!v) throw std::logic_error("crossed_inv: singular system for a nonzero element");
  // a⁻¹ = Σ_λ x^λ v_λ = Σ_λ Φ_λ(v_λ) x^λ
  CrossedElement out(a.basis(), a.with_s());
  for (SignMask lambda = 0; lambda < d; ++lambda) {
    const ExtensionElement coeff = (*v)[lambda].twisted(lambda);
    for (const auto& [eps, c] : coeff.terms()) out.set_coefficient({eps, lambda}, c);
  }
  check_inverse(a, out);
  return out;
}

CrossedElement crossed_inv_regular(const CrossedElement& a) {
  if (a.is_zero()) throw DivisionByZero();
  const std::size_t n = a.dimension();
  std::vector<CentralFraction> rhs(n);
  rhs[0] = CentralFraction(1);
  auto v = solve(left_regular_matrix(a), std::move(rhs), CentralFraction());
  if (!v) throw std::logic_error("crossed_inv: singular system for a nonzero element");
  CrossedElement out(a.basis(), a.with_s());
  for (std::uint32_t i = 0; i < n; ++i) out.set_coefficient(out.monomial_at(i), (*v)[i]);
  check_inverse(a, out);
  return out;
}

namespace {

using IntegralElement = RadicalElement<LaurentPoly>;

// Least common multiple of the coefficient denominators.
LaurentPoly common_denominator(const CrossedElement& a) {
  LaurentPoly common(Rational(1));
  for (const auto& [b, c] : a.terms()) {
    if (c.is_laurent() || c.den() == common) continue;
    LaurentPoly g = gcd(common, c.den());
    common = common * *divide_exact(c.den(), g);
  }
  return common;
}

// Exact quotient in Q[t^±][√p]: x/y = x·ȳ / N(y), ȳ the product of the
// other conjugates of y.
IntegralElement divide_integral(IntegralElement x, IntegralElement y) {
  for (std::size_t k = y.level(); k >= 1; --k) {
    const SignMask top = SignMask{1} << (k - 1);
    bool has_top = false;
    for (const auto& [m, c] : y.terms()) has_top = has_top || (m & top);
    if (!has_top) continue;
    IntegralElement conj = y.twisted(top);
    x = x * conj;
    y = y * conj;
  }
  if (!y.is_scalar() || y.is_zero()) throw std::logic_error("integral division by a non-unit norm");
  const LaurentPoly n = y.coefficient(0);
  IntegralElement out(x.basis());
  for (const auto& [m, c] : x.terms()) {
    auto q = divide_exact(c, n);
    if (!q) throw std::logic_error("bareiss: inexact division");
    out.accumulate(m, *q);
  }
  return out;
}

}  // namespace

// det_F(L_a) = N_{E/F}(det_E M_a). The E-determinant is taken fraction-free on
// D·a, D the common denominator, so no rational function arithmetic happens
// until the final division by D^{2^m}.
CentralFraction regular_norm(const CrossedElement& a) {
  if (a.is_zero()) return CentralFraction();
  const std::size_t d = std::size_t{1} << a.level();
  const LaurentPoly common = common_denominator(a);
  std::vector<IntegralElement> e(d, IntegralElement(a.basis()));
  for (const auto& [b, c] : a.terms()) e[b.mu].accumulate(b.eps, c.num() * *divide_exact(common, c.den()));
  Matrix<IntegralElement> m(d, d, IntegralElement(a.basis()));
  for (SignMask lambda = 0; lambda < d; ++lambda) {
    for (SignMask nu = 0; nu < d; ++nu) {
      SignMask mu = lambda ^ nu;
      if (e[mu].is_zero()) continue;
      m(lambda, nu) = e[mu].twisted(lambda).scaled(t_monomial(mu & nu).num());
    }
  }
  const IntegralElement zero(a.basis());
  const IntegralElement one = IntegralElement::scalar(a.basis(), LaurentPoly(Rational(1)));
  // Expansion needs no divisions, which dominate Bareiss here for small d.
  IntegralElement det = d <= 8 ? expansion_determinant(m, zero, one)
                               : bareiss_determinant(std::move(m), zero, one, divide_integral);
  if (det.is_zero()) return CentralFraction();
  const LaurentPoly scale = common.pow(static_cast<unsigned>(d));
  ExtensionElement z(a.basis());
  for (const auto& [eps, c] : det.terms()) z.accumulate(eps, CentralFraction(c, scale));
  return extension_norm(std::move(z));
}

CentralFraction regular_norm_direct(const CrossedElement& a) {
  Matrix<CentralFraction> l = left_regular_matrix(a);
  const std::size_t n = l.rows();
  // det(L) = det(D·L) / D^n.
  const LaurentPoly common = common_denominator(a);
  Matrix<LaurentPoly> p(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const CentralFraction& c = l(i, j);
      if (c.is_zero()) continue;
      p(i, j) = c.num() * *divide_exact(common, c.den());
    }
  }
  LaurentPoly det = bareiss_determinant(std::move(p));
  return CentralFraction(det, common.pow(static_cast<unsigned>(n)));
}

CrossedElement commutator(const CrossedElement& a, const CrossedElement& b) {
  return a * b * crossed_inv(a) * crossed_inv(b);
}

namespace {

std::vector<CrossedElement> generators_of(const BasisPtr& basis, bool with_s) {
  std::vector<CrossedElement> gens;
  for (std::size_t i = 1; i <= basis->level(); ++i) {
    gens.push_back(CrossedElement::radical(basis, with_s, i));
    gens.push_back(CrossedElement::generator(basis, with_s, i));
  }
  return gens;
}

}  // namespace

std::vector<CrossedElement> center_basis(BasisPtr basis, bool with_s) {
  const CrossedElement zero(basis, with_s);
  const std::size_t n = zero.dimension();
  const auto gens = generators_of(basis, with_s);
  // Unknown a = Σ c_j b_j; row block k encodes the coordinates of a·g_k − g_k·a.
  Matrix<CentralFraction> conditions(gens.size() * n, n);
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const BasisMonomial g = gens[k].terms().front().monomial;
    for (std::uint32_t j = 0; j < n; ++j) {
      const BasisMonomial b = zero.monomial_at(j);
      MonomialProduct right = monomial_mul(*basis, b, g);
      MonomialProduct left = monomial_mul(*basis, g, b);
      conditions(k * n + zero.index_of({right.eps, right.mu}), j) += CentralFraction(right.correction());
      conditions(k * n + zero.index_of({left.eps, left.mu}), j) -= CentralFraction(left.correction());
    }
  }
  std::vector<CrossedElement> out;
  for (const auto& v : nullspace(conditions, CentralFraction(), CentralFraction(1))) {
    CrossedElement e(basis, with_s);
    for (std::uint32_t j = 0; j < n; ++j) e.set_coefficient(e.monomial_at(j), v[j]);
    out.push_back(std::move(e));
  }
  return out;
}

std::size_t dim_over_center(BasisPtr basis, bool with_s) {
  const auto center = center_basis(basis, with_s);
  const CrossedElement one = CrossedElement::scalar(basis, with_s, CentralFraction(1));
  const std::size_t n = one.dimension();
  const std::size_t m = basis->level();
  // Coordinates of every (√p1)^ε1···xm^μm built as an actual product of generators.
  Matrix<CentralFraction> coords(n, n);
  for (std::uint32_t j = 0; j < n; ++j) {
    BasisMonomial target = one.monomial_at(j);
    CrossedElement prod = one;
    for (std::size_t i = 1; i <= m; ++i)
      if ((target.eps >> (i - 1)) & 1) prod = prod * CrossedElement::radical(basis, with_s, i);
    for (std::size_t i = 1; i <= m; ++i)
      if ((target.mu >> (i - 1)) & 1) prod = prod * CrossedElement::generator(basis, with_s, i);
    for (std::uint32_t i = 0; i < n; ++i) coords(i, j) = prod.coefficient_at(i);
  }
  if (rank(coords) != n) throw std::logic_error("dim_over_center: normal-form monomials are dependent");
  if (center.empty() || n % center.size() != 0)
    throw std::logic_error("dim_over_center: center dimension does not divide 4^m");
  return n / center.size();
}

bool is_central(const CrossedElement& a) {
  for (const auto& g : generators_of(a.basis(), a.with_s()))
    if (!(a * g == g * a)) return false;
  return true;
}

bool is_torsion_central(const CrossedElement& c) {
  if (!is_central(c)) throw DomainError("is_torsion_central: element is not central");
  if (!c.is_scalar()) return false;
  const CentralFraction& c0 = c.coefficient({0, 0});
  return c0 == CentralFraction(1) || c0 == CentralFraction(-1);
}

std::set<std::size_t> noncommuting_witnesses(const CrossedElement& a) {
  std::set<std::size_t> out;
  for (std::size_t i = 1; i <= a.level(); ++i) {
    CrossedElement r = CrossedElement::radical(a.basis(), a.with_s(), i);
    if (!(a * r == r * a)) out.insert(i);
  }
  return out;
}

SeriesElement to_series(const CrossedElement& a) {
  if (a.with_s()) throw DomainError("R-mode elements have no finite series form");
  SeriesElement out(a.basis());
  const std::size_t m = a.level();
  for (const auto& [b, c] : a.terms()) {
    if (!c.is_laurent()) throw DomainError("coefficient is not a Laurent polynomial");
    const Rational scale = Rational(1) / c.den().leading().coeff;
    for (const auto& term : c.num().terms()) {
      std::vector<GroupElement::Entry> g;
      for (std::size_t i = 0; i < m; ++i)
        g.emplace_back(static_cast<GenIndex>(i + 1), ((b.mu >> i) & 1) + 2 * Exponent{term.exps[i]});
      out.accumulate(GroupElement(std::move(g)),
                     FieldElement::monomial(a.basis(), b.eps, Rational(term.coeff * scale)));
    }
  }
  return out;
}

CrossedElement from_series(const SeriesElement& a, bool with_s) {
  CrossedElement out(a.basis(), with_s);
  const std::size_t m = a.basis()->level();
  for (const auto& [g, fe] : a.terms()) {
    if (g.max_index() > m)
      throw StructuralError("generator x" + std::to_string(g.max_index()) + " outside level " +
                            std::to_string(m));
    SignMask mu = 0;
    Exponents t{};
    for (const auto& [i, n] : g.entries()) {
      Exponent odd = ((n % 2) + 2) % 2;
      if (odd) mu |= SignMask{1} << (i - 1);
      t[i - 1] = static_cast<std::int32_t>((n - odd) / 2);
    }
    for (const auto& [eps, q] : fe.terms())
      out.accumulate({eps, mu}, CentralFraction(LaurentPoly::monomial(t, q)));
  }
  return out;
}

std::string monomial_word(BasisMonomial b) {
  std::string out = radical_word(b.eps);
  for (std::size_t i = 0; b.mu >> i; ++i) {
    if (!((b.mu >> i) & 1)) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(i + 1);
  }
  return out;
}

std::string to_string(const CrossedElement& a) {
  const VarNames names = central_names(a.level(), a.with_s());
  std::string out;
  for (const auto& [b, c] : a.terms()) {
    std::string word = monomial_word(b);
    std::string term;
    if (word.empty()) {
      term = to_string(c, names);
    } else {
      // A negative leading coefficient becomes a subtraction.
      const bool negative = sgn(c.num().leading().coeff) < 0;
      const CentralFraction magnitude = negative ? -c : c;
      std::string coeff = to_string(magnitude, names);
      if (magnitude == CentralFraction(1))
        term = word;
      else if (magnitude.is_laurent() && magnitude.num().is_monomial())
        term = coeff + "*" + word;
      else
        term = "(" + coeff + ")*" + word;
      if (negative) term = "-" + term;
    }
    if (out.empty())
      out = term;
    else if (term.front() == '-')
      out += " - " + term.substr(1);
    else
      out += " + " + term;
  }
  return out.empty() ? "0" : out;
}

}  // namespace mnr
