#include "mnring/numfield.hpp"

#include <stdexcept>

namespace mnr {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow_mod(u64 b, u64 e, u64 m) {
  u64 r = 1;
  b %= m;
  for (; e; e >>= 1, b = mul_mod(b, b, m))
    if (e & 1) r = mul_mod(r, b, m);
  return r;
}

}  // namespace

// Miller–Rabin with the first twelve prime bases, deterministic below 2^64.
bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while (d % 2 == 0) d /= 2, ++s;
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s && composite; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) composite = false;
    }
    if (composite) return false;
  }
  return true;
}

PrimeBasis::PrimeBasis(std::vector<std::uint64_t> primes) : primes_(std::move(primes)) {
  if (primes_.size() > kMaxFieldLevel)
    throw std::invalid_argument("at most " + std::to_string(kMaxFieldLevel) + " primes supported");
  for (std::size_t i = 0; i < primes_.size(); ++i) {
    if (!is_prime(primes_[i]))
      throw std::invalid_argument(std::to_string(primes_[i]) + " is not prime");
    if (i > 0 && primes_[i] <= primes_[i - 1])
      throw std::invalid_argument("primes must be strictly increasing");
  }
  square_table_.assign(std::size_t{1} << primes_.size(), Integer(1));
  for (std::size_t mask = 1; mask < square_table_.size(); ++mask) {
    std::size_t low = static_cast<std::size_t>(std::countr_zero(mask));
    square_table_[mask] = square_table_[mask & (mask - 1)] * Integer(static_cast<unsigned long>(primes_[low]));
  }
}

std::shared_ptr<const PrimeBasis> PrimeBasis::first(std::size_t m) {
  std::vector<std::uint64_t> ps;
  for (std::uint64_t n = 2; ps.size() < m; ++n)
    if (is_prime(n)) ps.push_back(n);
  return std::make_shared<const PrimeBasis>(std::move(ps));
}

std::uint64_t PrimeBasis::prime(std::size_t i) const {
  if (i == 0 || i > primes_.size()) throw IndexError("prime index " + std::to_string(i) + " out of range");
  return primes_[i - 1];
}

const Integer& PrimeBasis::radical_square(std::uint32_t mask) const {
  if (mask >= square_table_.size()) throw StructuralError("radical outside the prime basis");
  return square_table_[mask];
}

void require_same_basis(const BasisPtr& a, const BasisPtr& b) {
  if (a != b && !(*a == *b)) throw StructuralError("operands use different prime bases");
}

std::uint32_t twist_mask(const GroupElement& g, std::size_t level) {
#ifdef MNR_MUTANT_DROP_TWIST_SIGN
  // Mutation-testing build: the acceptance suite must notice this.
  (void)g;
  (void)level;
  return 0;
#else
  std::uint32_t mask = 0;
  for (const auto& [i, e] : g.entries()) {
    if (i > level) break;
    if (e % 2 != 0) mask |= std::uint32_t{1} << (i - 1);
  }
  return mask;
#endif
}

FieldElement field_add(const FieldElement& a, const FieldElement& b) { return a + b; }

FieldElement field_mul(const FieldElement& a, const FieldElement& b) { return a * b; }

FieldElement field_inv(const FieldElement& a) {
  FieldElement inv = inverse(a);
  FieldElement check = a * inv;
  if (!(check.terms().size() == 1 && check.coefficient(0) == 1))
    throw std::logic_error("field_inv: multiply-back check failed");
  return inv;
}

bool fixed_by_all(const FieldElement& a) {
  for (std::size_t i = 1; i <= a.level(); ++i)
    if (!(apply_auto(i, a) == a)) return false;
  return true;
}

std::string radical_word(std::uint32_t eps) {
  std::string out;
  for (std::size_t i = 0; eps >> i; ++i) {
    if (!((eps >> i) & 1)) continue;
    if (!out.empty()) out += '*';
    out += 'r' + std::to_string(i + 1);
  }
  return out;
}

std::string to_string(const FieldElement& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto& [eps, c] : a.terms()) {
    Rational mag = abs(c);
    bool negative = sgn(c) < 0;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (eps == 0) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + '*';
      out += radical_word(eps);
    }
  }
  return out;
}

}  // namespace mnr
