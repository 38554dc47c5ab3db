#include "mnring/poly.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace mnr {

Exponents operator+(const Exponents& a, const Exponents& b) {
  Exponents out;
  for (std::size_t i = 0; i < kMaxVars; ++i) out[i] = a[i] + b[i];
  return out;
}

Exponents operator-(const Exponents& a, const Exponents& b) {
  Exponents out;
  for (std::size_t i = 0; i < kMaxVars; ++i) out[i] = a[i] - b[i];
  return out;
}

namespace {

bool descending(const LaurentPoly::Term& a, const LaurentPoly::Term& b) { return a.exps > b.exps; }

// Merge of two descending term lists with b scaled by sign.
std::vector<LaurentPoly::Term> merge(const std::vector<LaurentPoly::Term>& a,
                                     const std::vector<LaurentPoly::Term>& b, bool negate_b) {
  std::vector<LaurentPoly::Term> out;
  out.reserve(a.size() + b.size());
  auto i = a.begin(), j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->exps > j->exps)) {
      out.push_back(*i++);
    } else if (i == a.end() || j->exps > i->exps) {
      out.push_back(*j++);
      if (negate_b) out.back().coeff = -out.back().coeff;
    } else {
      Rational c = negate_b ? Rational(i->coeff - j->coeff) : Rational(i->coeff + j->coeff);
      if (sgn(c) != 0) out.push_back({i->exps, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

LaurentPoly::LaurentPoly(const Rational& c) {
  if (sgn(c) != 0) terms_.push_back({Exponents{}, c});
}

LaurentPoly LaurentPoly::variable(std::size_t v, std::int32_t e) {
  if (v >= kMaxVars) throw std::out_of_range("too many central variables");
  Exponents x{};
  x[v] = e;
  return monomial(x, Rational(1));
}

LaurentPoly LaurentPoly::monomial(const Exponents& e, const Rational& c) {
  LaurentPoly out;
  if (sgn(c) != 0) out.terms_.push_back({e, c});
  return out;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), descending);
  LaurentPoly out;
  for (auto& t : terms) {
    if (!out.terms_.empty() && out.terms_.back().exps == t.exps) {
      out.terms_.back().coeff += t.coeff;
      if (sgn(out.terms_.back().coeff) == 0) out.terms_.pop_back();
    } else if (sgn(t.coeff) != 0) {
      out.terms_.push_back(std::move(t));
    }
  }
  return out;
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exps == Exponents{});
}

bool LaurentPoly::is_polynomial() const {
  for (const auto& t : terms_)
    for (auto e : t.exps)
      if (e < 0) return false;
  return true;
}

Rational LaurentPoly::constant_term() const {
  if (!terms_.empty() && terms_.back().exps == Exponents{}) return terms_.back().coeff;
  return Rational(0);
}

Exponents LaurentPoly::min_exponents() const {
  if (terms_.empty()) return Exponents{};
  Exponents out = terms_[0].exps;
  for (const auto& t : terms_)
    for (std::size_t i = 0; i < kMaxVars; ++i) out[i] = std::min(out[i], t.exps[i]);
  return out;
}

Exponents LaurentPoly::max_exponents() const {
  if (terms_.empty()) return Exponents{};
  Exponents out = terms_[0].exps;
  for (const auto& t : terms_)
    for (std::size_t i = 0; i < kMaxVars; ++i) out[i] = std::max(out[i], t.exps[i]);
  return out;
}

LaurentPoly LaurentPoly::shifted(const Exponents& delta) const {
  LaurentPoly out(*this);
  for (auto& t : out.terms_) t.exps = t.exps + delta;  // order preserved
  return out;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
  if (sgn(c) == 0) return {};
  LaurentPoly out(*this);
  for (auto& t : out.terms_) t.coeff *= c;
  return out;
}

Rational LaurentPoly::content() const {
  if (terms_.empty()) return Rational(1);
  Integer num = 0, den = 1;
  for (const auto& t : terms_) {
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), t.coeff.get_num_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
  }
  Rational c(num, den);
  c.canonicalize();
  return c;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out(*this);
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& b) {
  terms_ = merge(terms_, b.terms_, false);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& b) {
  terms_ = merge(terms_, b.terms_, true);
  return *this;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  out.terms_ = merge(a.terms_, b.terms_, false);
  return out;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  out.terms_ = merge(a.terms_, b.terms_, true);
  return out;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.terms_.empty() || b.terms_.empty()) return {};
  if (a.terms_.size() < b.terms_.size()) return b * a;
  if (b.terms_.size() == 1) {
    // Monomial multiples keep the order.
    LaurentPoly out(a);
    const auto& m = b.terms_[0];
    for (auto& t : out.terms_) {
      t.exps = t.exps + m.exps;
      t.coeff *= m.coeff;
    }
    return out;
  }
  // Sort the product exponents first so that each output coefficient is
  // accumulated in place instead of materializing every pairwise product.
  struct Key {
    Exponents exps;
    std::uint32_t i, j;
  };
  std::vector<Key> keys;
  keys.reserve(a.terms_.size() * b.terms_.size());
  for (std::uint32_t i = 0; i < a.terms_.size(); ++i)
    for (std::uint32_t j = 0; j < b.terms_.size(); ++j)
      keys.push_back({a.terms_[i].exps + b.terms_[j].exps, i, j});
  std::sort(keys.begin(), keys.end(), [](const Key& x, const Key& y) { return x.exps > y.exps; });
  LaurentPoly out;
  Rational acc, prod;
  for (std::size_t k = 0; k < keys.size();) {
    acc = 0;
    std::size_t l = k;
    for (; l < keys.size() && keys[l].exps == keys[k].exps; ++l) {
      mpq_mul(prod.get_mpq_t(), a.terms_[keys[l].i].coeff.get_mpq_t(), b.terms_[keys[l].j].coeff.get_mpq_t());
      acc += prod;
    }
    if (sgn(acc) != 0) out.terms_.push_back({keys[k].exps, acc});
    k = l;
  }
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& b) { return *this = *this * b; }

LaurentPoly LaurentPoly::pow(unsigned k) const {
  LaurentPoly result(Rational(1)), base(*this);
  for (; k; k >>= 1) {
    if (k & 1) result *= base;
    if (k > 1) base *= base;
  }
  return result;
}

namespace {

bool dominates(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (a[i] < b[i]) return false;
  return true;
}

// Division of polynomials with nonnegative exponents and min exponent 0 in b.
std::optional<LaurentPoly> divide_polynomial(const LaurentPoly& a, const LaurentPoly& b) {
  if (!dominates(a.max_exponents(), b.max_exponents())) return std::nullopt;
  const auto& lb = b.leading();
  std::vector<LaurentPoly::Term> quotient;
  LaurentPoly r = a;
  while (!r.is_zero()) {
    const auto& lr = r.leading();
    if (!dominates(lr.exps, lb.exps)) return std::nullopt;
    LaurentPoly::Term q{lr.exps - lb.exps, lr.coeff / lb.coeff};
    r -= b * LaurentPoly::monomial(q.exps, q.coeff);
    quotient.push_back(std::move(q));
  }
  return LaurentPoly::from_terms(std::move(quotient));
}

}  // namespace

std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (a.is_zero()) return LaurentPoly{};
  if (b.is_monomial()) {
    const auto& m = b.leading();
    Exponents neg{};
    neg = neg - m.exps;
    return a.shifted(neg).scaled(Rational(1) / m.coeff);
  }
  // Low degrees add under multiplication, so a = q·b forces the shifted
  // quotient to be a polynomial.
  Exponents la = a.min_exponents(), lb = b.min_exponents();
  Exponents zero{};
  auto q = divide_polynomial(a.shifted(zero - la), b.shifted(zero - lb));
  if (!q) return std::nullopt;
  return q->shifted(la - lb);
}

namespace {

LaurentPoly normalized_unit(const LaurentPoly& p) {
  LaurentPoly q = p.shifted(Exponents{} - p.min_exponents());
  Rational c = q.content();
  if (sgn(q.leading().coeff) < 0) c = -c;
  return q.scaled(Rational(1) / c);
}

int degree_in(const LaurentPoly& p, std::size_t v) { return p.is_zero() ? -1 : p.max_exponents()[v]; }

// Degree -> coefficient, with v removed from the coefficients.
std::map<int, LaurentPoly> coefficients_in(const LaurentPoly& p, std::size_t v) {
  std::map<int, std::vector<LaurentPoly::Term>> buckets;
  for (auto t : p.terms()) {
    int d = t.exps[v];
    t.exps[v] = 0;
    buckets[d].push_back(std::move(t));
  }
  std::map<int, LaurentPoly> out;
  for (auto& [d, ts] : buckets) out.emplace(d, LaurentPoly::from_terms(std::move(ts)));
  return out;
}

LaurentPoly leading_coefficient_in(const LaurentPoly& p, std::size_t v) {
  int d = degree_in(p, v);
  std::vector<LaurentPoly::Term> ts;
  for (auto t : p.terms()) {
    if (t.exps[v] != d) continue;
    t.exps[v] = 0;
    ts.push_back(std::move(t));
  }
  return LaurentPoly::from_terms(std::move(ts));
}

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

// gcd of the coefficients of p with respect to v, seeded with `seed`.
LaurentPoly content_in(const LaurentPoly& p, std::size_t v, LaurentPoly seed = {}) {
  LaurentPoly g = std::move(seed);
  for (const auto& [d, c] : coefficients_in(p, v)) {
    g = g.is_zero() ? normalized_unit(c) : poly_gcd(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

LaurentPoly primitive_in(const LaurentPoly& p, std::size_t v) {
  LaurentPoly c = content_in(p, v);
  LaurentPoly q = c.is_constant() ? p : *divide_exact(p, c);
  return normalized_unit(q);
}

// lc(b)^k·a mod b with respect to v, for some k.
LaurentPoly pseudo_remainder(LaurentPoly a, const LaurentPoly& b, std::size_t v) {
  const int db = degree_in(b, v);
  const LaurentPoly lb = leading_coefficient_in(b, v);
  while (!a.is_zero() && degree_in(a, v) >= db) {
    Exponents shift{};
    shift[v] = degree_in(a, v) - db;
    LaurentPoly la = leading_coefficient_in(a, v);
    a = lb * a - la.shifted(shift) * b;
  }
  return a;
}

// Heuristic gcd: evaluate the highest variable at a large integer ξ, recurse,
// and read the candidate back off the balanced ξ-adic digits. A candidate is
// accepted only if it divides both inputs. Inputs have integer coefficients.
Integer max_norm(const LaurentPoly& p) {
  Integer out = 0;
  for (const auto& t : p.terms()) {
    Integer a = abs(t.coeff.get_num());
    if (a > out) out = a;
  }
  return out;
}

LaurentPoly evaluate_at(const LaurentPoly& p, std::size_t v, const Integer& xi) {
  std::vector<LaurentPoly::Term> ts;
  ts.reserve(p.size());
  Integer pw;
  for (auto t : p.terms()) {
    mpz_pow_ui(pw.get_mpz_t(), xi.get_mpz_t(), static_cast<unsigned long>(t.exps[v]));
    t.coeff *= Rational(pw);
    t.exps[v] = 0;
    ts.push_back(std::move(t));
  }
  return LaurentPoly::from_terms(std::move(ts));
}

LaurentPoly xi_adic_lift(const LaurentPoly& g, std::size_t v, const Integer& xi) {
  std::vector<LaurentPoly::Term> ts;
  const Integer half = xi / 2;
  for (const auto& t : g.terms()) {
    Integer c = t.coeff.get_num();
    for (std::int32_t i = 0; c != 0; ++i) {
      Integer d = c % xi;  // truncates toward zero
      if (d > half) d -= xi;
      if (d < -half) d += xi;
      if (d != 0) {
        Exponents e = t.exps;
        e[v] = i;
        ts.push_back({e, Rational(d)});
      }
      c = (c - d) / xi;
    }
  }
  return LaurentPoly::from_terms(std::move(ts));
}

std::optional<LaurentPoly> heuristic_gcd(const LaurentPoly& a, const LaurentPoly& b, int depth = 0) {
  if (a.is_constant() && b.is_constant()) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.constant_term().get_num_mpz_t(), b.constant_term().get_num_mpz_t());
    return LaurentPoly(Rational(g));
  }
  Exponents da = a.max_exponents(), db = b.max_exponents();
  std::size_t v = kMaxVars;
  while (v-- > 0)
    if (da[v] > 0 || db[v] > 0) break;
  Integer xi = 2 * std::min(max_norm(a), max_norm(b)) + 29;
  for (int attempt = 0; attempt < 6; ++attempt) {
    LaurentPoly ea = evaluate_at(a, v, xi), eb = evaluate_at(b, v, xi);
    if (auto gamma = heuristic_gcd(ea, eb, depth + 1)) {
      LaurentPoly cand = xi_adic_lift(*gamma, v, xi);
      if (!cand.is_zero()) {
        cand = cand.scaled(Rational(1) / cand.content());
        if (divide_exact(a, cand) && divide_exact(b, cand)) return cand;
      }
    }
    xi = xi * 73794 / 27011;
  }
  return std::nullopt;
}

// Both arguments nonzero with nonnegative exponents.
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  Exponents la = a.min_exponents(), lb = b.min_exponents(), mono{};
  for (std::size_t i = 0; i < kMaxVars; ++i) mono[i] = std::min(la[i], lb[i]);
  LaurentPoly A = a.shifted(Exponents{} - la), B = b.shifted(Exponents{} - lb);
  const LaurentPoly mono_part = LaurentPoly::monomial(mono, Rational(1));
  if (A.is_constant() || B.is_constant()) return mono_part;

  Exponents da = A.max_exponents(), db = B.max_exponents();
  for (std::size_t v = 0; v < kMaxVars; ++v) {
    if (da[v] > 0 && db[v] == 0) return mono_part * content_in(A, v, normalized_unit(B));
    if (db[v] > 0 && da[v] == 0) return mono_part * content_in(B, v, normalized_unit(A));
  }
  std::size_t v = 0;
  while (da[v] == 0) ++v;

  if (auto q = divide_exact(A, B)) return mono_part * normalized_unit(B);
  if (auto q = divide_exact(B, A)) return mono_part * normalized_unit(A);
  {
    LaurentPoly pa = A.scaled(Rational(1) / A.content()), pb = B.scaled(Rational(1) / B.content());
    if (auto h = heuristic_gcd(pa, pb)) return normalized_unit(mono_part * *h);
  }

  LaurentPoly ca = content_in(A, v), cb = content_in(B, v);
  LaurentPoly c = poly_gcd(ca, cb);
  LaurentPoly P = primitive_in(A, v), Q = primitive_in(B, v);
  if (degree_in(P, v) < degree_in(Q, v)) std::swap(P, Q);
  LaurentPoly g;
  for (;;) {
    LaurentPoly R = pseudo_remainder(P, Q, v);
    if (R.is_zero()) {
      g = primitive_in(Q, v);
      break;
    }
    if (degree_in(R, v) == 0) {
      g = LaurentPoly(Rational(1));
      break;
    }
    P = std::move(Q);
    Q = primitive_in(R, v);
  }
  return normalized_unit(mono_part * c * g);
}

}  // namespace

LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return b.is_zero() ? LaurentPoly{} : normalized_unit(b);
  if (b.is_zero()) return normalized_unit(a);
  LaurentPoly A = a.shifted(Exponents{} - a.min_exponents());
  LaurentPoly B = b.shifted(Exponents{} - b.min_exponents());
  LaurentPoly g = poly_gcd(A, B);
  return normalized_unit(g);
}

std::string to_string(const LaurentPoly& p, const VarNames& names) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& t : p.terms()) {
    Rational mag = abs(t.coeff);
    bool negative = sgn(t.coeff) < 0;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    std::string word;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (t.exps[i] == 0) continue;
      if (!word.empty()) word += '*';
      word += i < names.size() ? names[i] : "v" + std::to_string(i);
      if (t.exps[i] != 1) word += '^' + std::to_string(t.exps[i]);
    }
    if (word.empty())
      out += mag.get_str();
    else if (mag == 1)
      out += word;
    else
      out += mag.get_str() + '*' + word;
  }
  return out;
}

}  // namespace mnr
