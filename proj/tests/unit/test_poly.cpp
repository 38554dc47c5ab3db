#include "doctest.h"
#include "mnring/central.hpp"
#include "mnring/linalg.hpp"
#include "mnring/poly.hpp"

using namespace mnr;

namespace {
const VarNames names{"t1", "t2", "t3"};
LaurentPoly t(std::size_t v, int e = 1) { return LaurentPoly::variable(v, e); }
}  // namespace

TEST_CASE("Laurent arithmetic and printing") {
  const LaurentPoly p = t(0) + LaurentPoly(1);
  CHECK(to_string(p.pow(3), names) == "t1^3 + 3*t1^2 + 3*t1 + 1");
  CHECK(to_string(t(0, -1) * t(1) - LaurentPoly(Rational(1, 2)), names) == "-1/2 + t1^-1*t2");
  CHECK((t(0) * t(0, -1)).is_constant());
  CHECK((p - p).is_zero());
  CHECK(p.scaled(Rational(2, 3)) == LaurentPoly(Rational(2, 3)) * p);
  CHECK_FALSE(t(1, -2).is_polynomial());
  CHECK(p.content() == 1);
  CHECK((p.scaled(6) + t(1).scaled(4)).content() == 2);
}

TEST_CASE("exact division") {
  const LaurentPoly a = t(0) + t(1), b = t(0) - LaurentPoly(2);
  CHECK(divide_exact(a * b, b) == a);
  CHECK(divide_exact(a * t(0, -3), t(0, 2)) == a * t(0, -5));  // monomials are units
  CHECK_FALSE(divide_exact(a, b).has_value());
  CHECK_FALSE(divide_exact(LaurentPoly(1), t(0) + LaurentPoly(1)).has_value());
}

TEST_CASE("gcd up to units") {
  const LaurentPoly a = t(0) + t(1), b = t(0) - LaurentPoly(2), c = t(2).pow(2) + LaurentPoly(3);
  CHECK(gcd(a * b, b * c) == b);
  CHECK(gcd((a * c).scaled(6), (b * c).scaled(Rational(4, 5)) * t(1, -2)) == c);
  CHECK(gcd(a, b) == LaurentPoly(1));
  CHECK(gcd(LaurentPoly(), LaurentPoly()).is_zero());
  CHECK(gcd(a.scaled(-3), LaurentPoly()) == a);
  CHECK(gcd(t(0, 3), t(1)) == LaurentPoly(1));
}

TEST_CASE("central fractions are canonical") {
  const LaurentPoly a = t(0) + LaurentPoly(1), b = t(1) - LaurentPoly(3);
  const CentralFraction x(a * b, b * t(0, 2));
  CHECK(x.den() == LaurentPoly(1));
  CHECK(x.num() == a * t(0, -2));
  CHECK(to_string(CentralFraction(a, b), names) == "(t1 + 1)/(t2 - 3)");
  CHECK(to_string(CentralFraction(LaurentPoly(1), b.scaled(-2)), names) == "-1/2/(t2 - 3)");
  CHECK(CentralFraction(a, b) + CentralFraction(LaurentPoly(-1), b) == CentralFraction(t(0), b));
  CHECK(CentralFraction(a, b) * inverse(CentralFraction(a, b)) == CentralFraction(1));
  CHECK(pow(CentralFraction(a, b), -2) * pow(CentralFraction(a, b), 2) == CentralFraction(1));
  CHECK_THROWS_AS(CentralFraction(a, LaurentPoly()), DivisionByZero);
  CHECK_THROWS_AS(inverse(CentralFraction()), DivisionByZero);
  CHECK(central_names(2, true) == VarNames{"t1", "t2", "s"});
}

TEST_CASE("equality does not depend on gcd reduction") {
  const LaurentPoly a = t(0) + LaurentPoly(1), b = t(1) - LaurentPoly(3);
  CentralFraction::set_gcd_reduction(false);
  const CentralFraction x = CentralFraction(a * b, b) + CentralFraction(1);
  CentralFraction::set_gcd_reduction(true);
  CHECK(x == CentralFraction(a + LaurentPoly(1)));
}

TEST_CASE("determinant routes agree") {
  // Integer oracle: det [[2,1,0],[1,3,1],[0,1,4]] = 2(12-1) - 1(4) = 18
  Matrix<Rational> m(3, 3, Rational(0));
  const int v[3][3] = {{2, 1, 0}, {1, 3, 1}, {0, 1, 4}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = v[i][j];
  CHECK(determinant(m, Rational(0), Rational(1)) == 18);
  CHECK(expansion_determinant(m, Rational(0), Rational(1)) == 18);

  // Polynomial entries with a forced row swap: [[0, t1], [t2, 1]] has det −t1 t2.
  Matrix<LaurentPoly> p(2, 2);
  p(0, 1) = t(0);
  p(1, 0) = t(1);
  p(1, 1) = LaurentPoly(1);
  CHECK(bareiss_determinant(p) == -(t(0) * t(1)));
  CHECK(expansion_determinant(p, LaurentPoly(), LaurentPoly(1)) == -(t(0) * t(1)));

  // Vandermonde in t1, t2, t3: Π_{i<j} (t_j − t_i)
  Matrix<LaurentPoly> van(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) van(i, j) = t(i).pow(static_cast<unsigned>(j));
  const LaurentPoly expected = (t(1) - t(0)) * (t(2) - t(0)) * (t(2) - t(1));
  CHECK(bareiss_determinant(van) == expected);
  CHECK(expansion_determinant(van, LaurentPoly(), LaurentPoly(1)) == expected);
}
