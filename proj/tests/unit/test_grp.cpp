#include "doctest.h"
#include "mnring/grp.hpp"
#include "mnring/random.hpp"

using namespace mnr;

TEST_CASE("canonical form sums and drops zero exponents") {
  GroupElement g{{3, 1}, {1, 2}, {3, -1}, {2, 0}};
  CHECK(g.entries() == std::vector<GroupElement::Entry>{{1, 2}});
  CHECK(GroupElement{{1, 1}, {1, -1}}.is_identity());
  CHECK(to_string(GroupElement{}) == "1");
  CHECK(to_string(GroupElement{{3, -1}, {1, 2}}) == "x1^2*x3^-1");
}

TEST_CASE("lexicographic order is decided by the first differing index") {
  const auto x = [](GenIndex i, Exponent e = 1) { return GroupElement::generator(i, e); };
  CHECK(x(1, -1) < GroupElement{});
  CHECK(GroupElement{} < x(1));
  // x1 dominates: x1^-1 is below every element free of x1
  CHECK(x(1, -1) < x(2, -100));
  CHECK(x(2, -1) < x(3, -1));  // x_{i+1}^{-1} lies above x_i^{-1}
  CHECK(x(2) < x(1));
  CHECK(x(1) * x(2, -5) < x(1) * x(2));
  CHECK(lex_compare(x(1) * x(2), x(2) * x(1)) == std::strong_ordering::equal);
}

TEST_CASE("group laws") {
  Sampler rng(1);
  for (int k = 0; k < 200; ++k) {
    const GroupElement g = rng.group_element(4, 3), h = rng.group_element(4, 3), j = rng.group_element(4, 3);
    CHECK(g * h == h * g);
    CHECK((g * h) * j == g * (h * j));
    CHECK((g * invert(g)).is_identity());
    CHECK(power(g, 3) == g * g * g);
    CHECK(power(g, -2) == invert(g * g));
    CHECK(translation_invariance_check(g, h, j));
    CHECK(((g < h) == (g * j < h * j)));
  }
}

TEST_CASE("H is the subgroup of squares") {
  Sampler rng(2);
  CHECK(in_H(GroupElement{}));
  CHECK_FALSE(in_H(GroupElement::generator(2)));
  CHECK(in_H(GroupElement{{1, 2}, {4, -6}}));
  for (int k = 0; k < 100; ++k) {
    const GroupElement g = rng.group_element(5, 4);
    CHECK(in_H(g * g));
    CHECK(in_H(rng.even_group_element(5, 4)));
  }
}

TEST_CASE("height and exponent lookup") {
  GroupElement g{{2, -3}, {5, 1}};
  CHECK(g.height() == 4);
  CHECK(g.exponent(2) == -3);
  CHECK(g.exponent(3) == 0);
  CHECK(g.max_index() == 5);
}
