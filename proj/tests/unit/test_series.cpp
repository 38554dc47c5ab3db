#include "doctest.h"
#include "mnring/random.hpp"
#include "mnring/series.hpp"

using namespace mnr;

namespace {
const BasisPtr b2 = PrimeBasis::first(2);
SeriesElement x(GenIndex i, Exponent e = 1) { return SeriesElement::group(b2, GroupElement::generator(i, e)); }
SeriesElement r(std::size_t i) { return SeriesElement::constant(FieldElement::radical(b2, i)); }
SeriesElement q(long n, long d = 1) { return SeriesElement::constant(FieldElement::scalar(b2, Rational(n, d))); }
}  // namespace

TEST_CASE("twisted product of monomials") {
  CHECK(x(1) * r(1) == -(r(1) * x(1)));
  CHECK(x(1) * r(2) == r(2) * x(1));
  CHECK(x(2) * r(1) * r(2) == -(r(1) * r(2) * x(2)));
  CHECK(x(1) * x(1) * r(1) == r(1) * x(1, 2));  // H acts trivially
  CHECK(x(3) * r(1) == r(1) * x(3));
  CHECK(x(1) * x(2) == x(2) * x(1));
  CHECK(to_string(q(1) - q(2) * x(2) + (q(1) + r(1)) * x(1, -1)) == "(1 + r1)*x1^-1 + 1 - 2*x2");
}

TEST_CASE("ring axioms on random sums") {
  Sampler rng(6);
  for (int k = 0; k < 100; ++k) {
    const SeriesElement a = rng.series(b2, 4, 3), c = rng.series(b2, 4, 3), d = rng.series(b2, 4, 3);
    CHECK((a * c) * d == a * (c * d));
    CHECK(a * (c + d) == a * c + a * d);
    CHECK((a + c) * d == a * d + c * d);
    CHECK(a * SeriesElement::one(b2) == a);
    CHECK(series_add(a, c) == a + c);
  }
}

TEST_CASE("monomial inverses and commutators") {
  const SeriesElement a = r(1) * x(1);
  // (r1 x1)^{-1} = Φ_{x1^{-1}}(1/r1) x1^{-1} = -1/2 r1 x1^{-1}
  CHECK(monomial_inverse(a) == -(q(1, 2) * r(1) * x(1, -1)));
  CHECK((a * monomial_inverse(a)).is_one());
  CHECK((monomial_inverse(a) * a).is_one());
  CHECK(commutator(r(1), x(1)) == q(-1));
  CHECK(commutator(r(1), x(2)) == q(1));
  CHECK(commutator(r(1) * r(2), x(1) * x(2)) == q(1));
  CHECK_THROWS_AS(monomial_inverse(q(1) + x(1)), DomainError);
  CHECK_THROWS_AS(monomial_inverse(SeriesElement(b2)), DivisionByZero);
}

TEST_CASE("geometric inversion and its residual") {
  const SeriesElement a = q(1) - x(1);
  const TruncatedSeries inv = series_inv(a, {8, std::nullopt});
  SeriesElement geometric(b2);
  for (Exponent k = 0; k <= 8; ++k) geometric += x(1, k);
  CHECK(inv.body == geometric);
  CHECK(residual(a, inv.body) == -x(1, 9));
  REQUIRE(inv.exact_below.has_value());
  CHECK(*inv.exact_below == GroupElement::generator(1, 9));

  // 1/(2 - x1) = Σ x1^k / 2^{k+1}
  const TruncatedSeries half = series_inv(q(2) - x(1), {3, std::nullopt});
  CHECK(to_string(half.body) == "1/2 + 1/4*x1 + 1/8*x1^2 + 1/16*x1^3");
}

TEST_CASE("inverse with a nontrivial leading monomial") {
  // a = r1 x1^-1 (1 + x2): the leading term is twisted before the tail is expanded.
  const SeriesElement a = r(1) * x(1, -1) * (q(1) + x(2));
  const TruncatedSeries inv = series_inv(a, {5, std::nullopt});
  const SeriesElement res = residual(a, inv.body);
  REQUIRE(!res.is_zero());
  REQUIRE(inv.exact_below.has_value());
  // The first missing term of a⁻¹ is x1 x2^6; multiplying by a shifts it by u = x1^-1.
  CHECK(*inv.exact_below == GroupElement{{1, 1}, {2, 6}});
  CHECK(res == -(x(2, 6)));
}

TEST_CASE("residual frontier rises with the budget") {
  Sampler rng(7);
  for (int k = 0; k < 20; ++k) {
    const SeriesElement a = rng.series(b2, 3, 3) + q(1);
    if (a.is_zero() || a.is_monomial()) continue;
    std::optional<GroupElement> last;
    for (std::uint64_t budget = 1; budget <= 4; ++budget) {
      const SeriesElement res = residual(a, series_inv(a, {budget, std::nullopt}).body);
      REQUIRE(!res.is_zero());
      if (last) CHECK(*last < res.leading());
      last = res.leading();
    }
  }
}

TEST_CASE("alpha prefix and windows") {
  const TruncatedSeries t = alpha_prefix(b2, 2, 2);
  CHECK(t.body == x(1, -1) + x(2, -1));
  REQUIRE(t.exact_below.has_value());
  CHECK(*t.exact_below == GroupElement::generator(3, -1));
  CHECK(to_string(t) == "x1^-1 + x2^-1 + O(x3^-1)");
  CHECK_NOTHROW(check_window(x(2), 2));
  CHECK_THROWS_AS(check_window(x(3), 2), StructuralError);
}

TEST_CASE("height budget lowers the frontier") {
  const SeriesElement a = q(1) - x(1) - x(2);
  const TruncatedSeries inv = series_inv(a, {6, 3});
  const TruncatedSeries reference = series_inv(a, {12, std::nullopt});
  REQUIRE(inv.exact_below.has_value());
  REQUIRE(reference.exact_below.has_value());
  CHECK(*inv.exact_below < *reference.exact_below);
  for (const auto& [g, c] : inv.body.terms()) CHECK(g.height() <= 3);
  // Below the frontier the truncated inverse is exact.
  for (const auto& [g, c] : reference.body.terms())
    if (g < *inv.exact_below) CHECK(inv.body.coefficient(g) == c);
}
