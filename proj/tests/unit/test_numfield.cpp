#include "doctest.h"
#include "mnring/numfield.hpp"
#include "mnring/random.hpp"

using namespace mnr;

namespace {
FieldElement q(const BasisPtr& b, long n, long d = 1) { return FieldElement::scalar(b, Rational(n, d)); }
FieldElement r(const BasisPtr& b, std::size_t i) { return FieldElement::radical(b, i); }
}  // namespace

TEST_CASE("prime bases") {
  CHECK(PrimeBasis::first(4)->primes() == std::vector<std::uint64_t>{2, 3, 5, 7});
  CHECK_THROWS_AS(PrimeBasis({3, 2}), std::invalid_argument);
  CHECK_THROWS_AS(PrimeBasis({2, 4}), std::invalid_argument);
  CHECK_THROWS_AS(PrimeBasis({2, 2}), std::invalid_argument);
  const auto b = PrimeBasis::first(3);
  CHECK(b->radical_square(0b101) == 10);
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(91));
}

TEST_CASE("multiplication of radicals") {
  const auto b = PrimeBasis::first(3);
  CHECK(r(b, 1) * r(b, 1) == q(b, 2));
  CHECK(r(b, 1) * r(b, 2) * r(b, 1) * r(b, 2) == q(b, 6));
  // (1 + √2)(√2 − 1) = 1
  CHECK((q(b, 1) + r(b, 1)) * (r(b, 1) - q(b, 1)) == q(b, 1));
  CHECK(to_string(q(b, 3) + q(b, 1, 2) * r(b, 1) - r(b, 1) * r(b, 2)) == "3 + 1/2*r1 - r1*r2");
  CHECK(to_string(FieldElement(b)) == "0");
  CHECK_THROWS_AS(r(b, 4), IndexError);
}

TEST_CASE("inverse by conjugation") {
  const auto b = PrimeBasis::first(2);
  CHECK(field_inv(q(b, 1) + r(b, 1)) == r(b, 1) - q(b, 1));
  // 1/(√2 + √3) = √3 − √2
  CHECK(field_inv(r(b, 1) + r(b, 2)) == r(b, 2) - r(b, 1));
  CHECK_THROWS_AS(field_inv(FieldElement(b)), DivisionByZero);

  Sampler rng(3);
  const auto b4 = PrimeBasis::first(4);
  for (int k = 0; k < 100; ++k) {
    const FieldElement a = rng.field_element(b4, 6);
    if (a.is_zero()) continue;
    CHECK(a * field_inv(a) == q(b4, 1));
  }
}

TEST_CASE("field axioms on random elements") {
  Sampler rng(4);
  const auto b = PrimeBasis::first(3);
  for (int k = 0; k < 200; ++k) {
    const FieldElement x = rng.field_element(b, 4), y = rng.field_element(b, 4), z = rng.field_element(b, 4);
    CHECK(x * y == y * x);
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(field_add(x, y) == x + y);
    CHECK(field_mul(x, y) == x * y);
  }
}

TEST_CASE("automorphisms") {
  const auto b = PrimeBasis::first(3);
  const FieldElement a = q(b, 1) + r(b, 1) + r(b, 1) * r(b, 3);
  CHECK(apply_auto(1, a) == q(b, 1) - r(b, 1) - r(b, 1) * r(b, 3));
  CHECK(apply_auto(2, a) == a);
  CHECK(apply_auto(3, a) == q(b, 1) + r(b, 1) - r(b, 1) * r(b, 3));
  CHECK_THROWS_AS(apply_auto(4, a), IndexError);
  CHECK(fixed_by_all(q(b, 7, 3)));
  CHECK_FALSE(fixed_by_all(a));
  CHECK_FALSE(fixed_by_all(r(b, 1) * r(b, 2)));

  // Φ_g depends only on the exponents mod 2, and generators beyond the basis act trivially.
  const GroupElement g{{1, 3}, {3, -1}, {7, 1}};
  CHECK(twist_mask(g, 3) == 0b101);
  CHECK(apply_phi(g, a) == apply_auto(3, apply_auto(1, a)));
  CHECK(apply_phi(GroupElement{{1, 2}, {2, -4}}, a) == a);

  Sampler rng(5);
  for (int k = 0; k < 100; ++k) {
    const FieldElement x = rng.field_element(b, 4), y = rng.field_element(b, 4);
    const GroupElement h = rng.group_element(4, 3);
    CHECK(apply_phi(h, x * y) == apply_phi(h, x) * apply_phi(h, y));
    CHECK(apply_phi(h, apply_phi(h, x)) == x);
  }
}
