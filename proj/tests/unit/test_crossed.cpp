#include "doctest.h"
#include "mnring/crossed.hpp"
#include "mnring/random.hpp"

using namespace mnr;

namespace {
const BasisPtr b1 = PrimeBasis::first(1);
const BasisPtr b2 = PrimeBasis::first(2);
const BasisPtr b3 = PrimeBasis::first(3);

CrossedElement r(const BasisPtr& b, std::size_t i, bool s = false) { return CrossedElement::radical(b, s, i); }
CrossedElement x(const BasisPtr& b, std::size_t i, bool s = false) { return CrossedElement::generator(b, s, i); }
CrossedElement c(const BasisPtr& b, CentralFraction f, bool s = false) { return CrossedElement::scalar(b, s, std::move(f)); }
CentralFraction t(std::size_t v) { return CentralFraction::variable(v); }
}  // namespace

TEST_CASE("commutation relations") {
  CHECK(r(b2, 1) * r(b2, 1) == c(b2, 2));
  CHECK(r(b2, 2) * r(b2, 2) == c(b2, 3));
  CHECK(x(b2, 1) * x(b2, 1) == c(b2, t(0)));
  CHECK(x(b2, 1) * r(b2, 1) == -(r(b2, 1) * x(b2, 1)));
  CHECK(x(b2, 2) * r(b2, 1) == r(b2, 1) * x(b2, 2));
  CHECK(x(b2, 1) * x(b2, 2) == x(b2, 2) * x(b2, 1));
  CHECK(commutator(r(b2, 1), x(b2, 1)) == c(b2, -1));
  CHECK(commutator(r(b2, 2), x(b2, 1)) == c(b2, 1));

  const MonomialProduct p = monomial_mul(*b2, {0b00, 0b01}, {0b01, 0b01});  // x1 · r1 x1
  CHECK(p.sign == -1);
  CHECK(p.eps == 0b01);
  CHECK(p.mu == 0);
  CHECK(p.t_mask == 0b01);
  CHECK(p.correction() == LaurentPoly::variable(0).scaled(-1));
}

TEST_CASE("ring axioms") {
  Sampler rng(8);
  for (int k = 0; k < 40; ++k) {
    const auto a = rng.crossed(b2, false, {}), bb = rng.crossed(b2, false, {}), d = rng.crossed(b2, false, {});
    CHECK((a * bb) * d == a * (bb * d));
    CHECK(a * (bb + d) == a * bb + a * d);
    CHECK(crossed_mul(a, bb) == a * bb);
  }
}

TEST_CASE("level one is the quaternion algebra (2, t1)") {
  // Nrd(a + b r + c x + d rx) = a² − 2b² − t c² + 2t d², and the left regular
  // norm of a quaternion algebra is Nrd².
  Sampler rng(9);
  for (int k = 0; k < 30; ++k) {
    CentralFraction q[4];
    for (auto& f : q) f = CentralFraction(rng.rational()) + (rng.coin() ? t(0) * CentralFraction(rng.rational()) : CentralFraction());
    const CrossedElement a = c(b1, q[0]) + r(b1, 1).scaled(q[1]) + x(b1, 1).scaled(q[2]) + (r(b1, 1) * x(b1, 1)).scaled(q[3]);
    const CentralFraction nrd = q[0] * q[0] - CentralFraction(2) * q[1] * q[1] - t(0) * q[2] * q[2] +
                                CentralFraction(2) * t(0) * q[3] * q[3];
    CHECK(regular_norm(a) == nrd * nrd);
    if (!nrd.is_zero()) {
      // conjugate / Nrd
      const CrossedElement conj = c(b1, q[0]) - r(b1, 1).scaled(q[1]) - x(b1, 1).scaled(q[2]) - (r(b1, 1) * x(b1, 1)).scaled(q[3]);
      CHECK(crossed_inv(a) == conj.scaled(inverse(nrd)));
    }
  }
}

TEST_CASE("norm routes agree") {
  Sampler rng(10);
  for (const BasisPtr& b : {b1, b2}) {
    for (int k = 0; k < 15; ++k) {
      const auto a = rng.crossed(b, k % 2 == 1, {1, 3, 1, true});
      CHECK(regular_norm(a) == regular_norm_direct(a));
    }
  }
  CHECK(regular_norm(CrossedElement(b2, false)).is_zero());
  // (2t1 + 1)^8: Nrd of 1 + r1 x1 in the first quaternion factor, to the 8th power.
  const CentralFraction n = t(0) * CentralFraction(2) + CentralFraction(1);
  CHECK(regular_norm(c(b2, 1) + r(b2, 1) * x(b2, 1)) == pow(n, 8));
}

TEST_CASE("inversion routes agree") {
  Sampler rng(11);
  for (const BasisPtr& b : {b1, b2}) {
    for (int k = 0; k < 10; ++k) {
      const auto a = rng.nonzero_crossed(b, false, {1, 3, 1, true});
      const auto inv = crossed_inv(a);
      CHECK((a * inv).is_one());
      CHECK((inv * a).is_one());
      CHECK(inv == crossed_inv_regular(a));
    }
  }
  CHECK_THROWS_AS(crossed_inv(CrossedElement(b2, false)), DivisionByZero);
}

TEST_CASE("commutators have norm one") {
  Sampler rng(12);
  for (int k = 0; k < 10; ++k) {
    const auto a = rng.nonzero_crossed(b2, false, {1, 2, 1, true});
    const auto bb = rng.nonzero_crossed(b2, false, {1, 2, 1, true});
    CHECK(regular_norm(commutator(a, bb)) == CentralFraction(1));
  }
}

TEST_CASE("center and dimensions") {
  for (bool with_s : {false, true}) {
    for (const BasisPtr& b : {b1, b2}) {
      const auto basis = center_basis(b, with_s);
      REQUIRE(basis.size() == 1);
      CHECK(basis.front().is_one());
    }
    CHECK(dim_over_center(b1, with_s) == 4);
    CHECK(dim_over_center(b2, with_s) == 16);
  }
  CHECK(is_central(c(b2, t(0) + CentralFraction(3))));
  CHECK_FALSE(is_central(x(b2, 1)));
  CHECK_FALSE(is_central(r(b2, 2)));
  CHECK(is_central(CrossedElement::s(b2)));
}

TEST_CASE("torsion among central elements") {
  CHECK(is_torsion_central(c(b2, -1)));
  CHECK(is_torsion_central(c(b2, 1)));
  CHECK_FALSE(is_torsion_central(c(b2, t(0))));
  CHECK_FALSE(is_torsion_central(c(b2, 2)));
  CHECK_THROWS_AS(is_torsion_central(x(b2, 1)), DomainError);
}

TEST_CASE("noncommuting witnesses follow the x-support") {
  CHECK(noncommuting_witnesses(c(b3, 5)).empty());
  CHECK(noncommuting_witnesses(r(b3, 1) * x(b3, 1) + r(b3, 1) * r(b3, 2) * x(b3, 1) * x(b3, 3)) ==
        std::set<std::size_t>{1, 3});
  CHECK(noncommuting_witnesses(r(b3, 2) + c(b3, t(1))).empty());
}

TEST_CASE("series round trip") {
  Sampler rng(13);
  for (const BasisPtr& b : {b1, b2, b3}) {
    for (int k = 0; k < 20; ++k) {
      const auto a = rng.crossed(b, false, {1, 3, 2, false});
      CHECK(from_series(to_series(a)) == a);
      const auto bb = rng.crossed(b, false, {1, 3, 2, false});
      CHECK(to_series(a * bb) == to_series(a) * to_series(bb));
    }
  }
}

TEST_CASE("R-mode") {
  const auto alpha = CrossedElement::alpha(b2);
  CHECK(alpha - (crossed_inv(x(b2, 1, true)) + crossed_inv(x(b2, 2, true))) == CrossedElement::s(b2));
  CHECK_THROWS_AS(x(b2, 1) + x(b2, 1, true), StructuralError);
  CHECK_THROWS_AS(x(b2, 1) * x(b3, 1), StructuralError);
}

TEST_CASE("printing") {
  CHECK(to_string(c(b2, 1) + r(b2, 1) * x(b2, 1)) == "1 + r1*x1");
  CHECK(to_string(crossed_inv(c(b2, 1) + r(b2, 1) * x(b2, 1))) == "1/(2*t1 + 1) - (1/(2*t1 + 1))*r1*x1");
  CHECK(to_string(CrossedElement(b2, false)) == "0");
  CHECK(monomial_word({0b01, 0b10}) == "r1*x2");
  CHECK_THROWS(CrossedElement(PrimeBasis::first(kMaxCrossedLevel + 1), false));
}
