#include "mnring/random.hpp"

#include <stdexcept>

namespace mnr {

std::int64_t Sampler::between(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw std::invalid_argument("Sampler::between: empty range");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(engine_() % span);
}

Rational Sampler::rational(bool nonzero) {
  std::int64_t p = between(-9, 9);
  if (nonzero && p == 0) p = coin() ? 1 : -1;
  Rational q(static_cast<long>(p), static_cast<unsigned long>(between(1, 5)));
  q.canonicalize();
  return q;
}

FieldElement Sampler::field_element(const BasisPtr& basis, std::size_t max_terms) {
  FieldElement out(basis);
  const auto masks = std::int64_t{1} << basis->level();
  const auto terms = between(1, static_cast<std::int64_t>(max_terms));
  for (std::int64_t k = 0; k < terms; ++k)
    out.accumulate(static_cast<FieldElement::Mask>(between(0, masks - 1)), rational(true));
  return out;
}

GroupElement Sampler::group_element(GenIndex max_index, Exponent max_exp) {
  std::vector<GroupElement::Entry> e;
  for (GenIndex i = 1; i <= max_index; ++i)
    if (coin()) e.emplace_back(i, between(-max_exp, max_exp));
  return GroupElement(std::move(e));
}

GroupElement Sampler::even_group_element(GenIndex max_index, Exponent max_exp) {
  std::vector<GroupElement::Entry> e;
  for (GenIndex i = 1; i <= max_index; ++i)
    if (coin()) e.emplace_back(i, 2 * between(-max_exp, max_exp));
  return GroupElement(std::move(e));
}

SeriesElement Sampler::series(const BasisPtr& basis, std::size_t max_terms, GenIndex window,
                              Exponent max_exp) {
  SeriesElement out(basis);
  const auto terms = between(1, static_cast<std::int64_t>(max_terms));
  for (std::int64_t k = 0; k < terms; ++k)
    out.accumulate(group_element(window, max_exp), field_element(basis, 2));
  return out;
}

CrossedElement Sampler::crossed(const BasisPtr& basis, bool with_s, const CrossedShape& shape) {
  CrossedElement out(basis, with_s);
  const std::size_t m = basis->level();
  const std::size_t vars = out.num_vars();
  const auto masks = std::int64_t{1} << m;
  const auto terms = between(static_cast<std::int64_t>(shape.min_terms), static_cast<std::int64_t>(shape.max_terms));
  for (std::int64_t k = 0; k < terms; ++k) {
    Exponents e{};
    for (std::size_t i = 0; i < vars; ++i) e[i] = static_cast<std::int32_t>(between(-shape.max_exp, shape.max_exp));
    LaurentPoly c = LaurentPoly::monomial(e, rational(true));
    if (shape.binomial_coefficients && between(0, 3) == 0) c += LaurentPoly(rational(true));
    BasisMonomial b{static_cast<SignMask>(between(0, masks - 1)), static_cast<SignMask>(between(0, masks - 1))};
    out.accumulate(b, CentralFraction(std::move(c)));
  }
  return out;
}

CrossedElement Sampler::nonzero_crossed(const BasisPtr& basis, bool with_s, const CrossedShape& shape) {
  for (;;) {
    CrossedElement a = crossed(basis, with_s, shape);
    if (!a.is_zero()) return a;
  }
}

}  // namespace mnr
