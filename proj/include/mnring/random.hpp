#pragma once

// Seeded samplers for property checks. Draws use plain modulo reduction of
// mt19937_64 output, so a seed gives the same elements on every platform
// (the std distributions are implementation-defined).

#include <cstdint>
#include <random>

#include "mnring/crossed.hpp"
#include "mnring/series.hpp"

namespace mnr {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t bits() { return engine_(); }
  // Uniform-ish integer in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi);
  bool coin() { return (engine_() & 1) != 0; }

  // p/q with |p| ≤ 9, 1 ≤ q ≤ 5; never zero when nonzero is set.
  Rational rational(bool nonzero = false);
  // Σ over up to max_terms radical monomials of K_m.
  FieldElement field_element(const BasisPtr& basis, std::size_t max_terms);
  // Exponents in [-max_exp, max_exp] on generators 1..max_index.
  GroupElement group_element(GenIndex max_index, Exponent max_exp);
  // Element of H: every exponent even.
  GroupElement even_group_element(GenIndex max_index, Exponent max_exp);
  // 1..max_terms terms, group support inside the window.
  SeriesElement series(const BasisPtr& basis, std::size_t max_terms, GenIndex window, Exponent max_exp = 2);

  struct CrossedShape {
    std::size_t min_terms = 1;
    std::size_t max_terms = 3;
    std::int32_t max_exp = 1;       // Laurent exponents of the t_i lie in [-max_exp, max_exp]
    bool binomial_coefficients = true;  // sometimes add a rational constant to a monomial coefficient
  };
  CrossedElement crossed(const BasisPtr& basis, bool with_s, const CrossedShape& shape);
  CrossedElement nonzero_crossed(const BasisPtr& basis, bool with_s, const CrossedShape& shape);

 private:
  std::mt19937_64 engine_;
};

}  // namespace mnr
