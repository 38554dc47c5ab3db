#pragma once

// Executable checks of the structural facts the library is built on. Each
// check draws from its own seeded sampler and returns a report; a failing
// report always carries a printed counterexample.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace mnr::verify {

enum class Status { pass, fail };

struct CheckReport {
  std::string id;
  std::string statement;
  std::uint64_t samples = 0;
  Status status = Status::pass;
  std::optional<std::string> witness;
  bool passed() const { return status == Status::pass; }
  friend bool operator==(const CheckReport&, const CheckReport&) = default;
};

struct CheckOptions {
  std::uint64_t seed = 0;
  std::size_t level = 2;
  std::uint64_t trials = 100;
};

// fixed_by_all(a) iff a is rational, on random elements of both kinds.
CheckReport check_fixed_field(const CheckOptions& opts);
// Φ_{x_i} = f_i, Φ_g(√p_i) = (−1)^{n_i}√p_i, and Φ_h = id for h in H.
CheckReport check_twist_character(const CheckOptions& opts);
// √p_i x_j = ±x_j √p_i, x_i² = t_i, (√p_i)² = p_i in both models, i, j ≤ level.
CheckReport check_commutation_table(const CheckOptions& opts);
// Associativity, both distributive laws and unit laws of the twisted product
// on random triples of series with at most 5 terms.
CheckReport check_ring_axioms(const CheckOptions& opts);
// crossed_mul agrees with series_mul under t_i ↦ x_i²; from_series inverts to_series.
CheckReport check_series_oracle(const CheckOptions& opts);
// crossed_inv multiplies back to 1; the series inverse of 1 − x1 leaves
// residual −x1^{K+1}; the residual frontier rises strictly with the budget.
CheckReport check_inversion(const CheckOptions& opts);
// The center of the level-m model is F·1 in L- and R-mode; dimension 4^m over it.
CheckReport check_center(const CheckOptions& opts);
// √p_i α − α √p_i = 2β√p_i x_i ≠ 0 for α = βx_i + γ with γ free of x_i.
CheckReport check_centralizer(const CheckOptions& opts);
// x1..xm are independent over the center, and √p_m commutes with x_i (i < m)
// but not with x_m.
CheckReport check_generator_independence(const CheckOptions& opts);
// R-mode: dimension 4^m over the center, s central, α − (x1⁻¹ + ... + xm⁻¹) = s.
CheckReport check_r_structure(const CheckOptions& opts);
// Every commutator has regular norm 1; every central commutator is ±1; t1 is
// central but not torsion.
CheckReport check_torsion_mechanism(const CheckOptions& opts);
// noncommuting_witnesses(a) = {i : some term of a has μ_i = 1}.
CheckReport check_witnesses(const CheckOptions& opts);

struct CheckInfo {
  std::string id;
  CheckReport (*run)(const CheckOptions&);
  std::uint64_t default_trials;
};
// Every check, in report order.
const std::vector<CheckInfo>& registry();

struct SuiteConfig {
  std::uint64_t seed = 0;
  std::size_t level = 2;
  std::optional<std::uint64_t> trials;  // overrides every default
  std::vector<std::string> only;        // empty: all checks
  bool parallel = true;
};

// Reports in registry order regardless of scheduling. Throws DomainError for
// level 0 and for unknown check ids.
std::vector<CheckReport> run_all(const SuiteConfig& config = {});

std::string to_json(const std::vector<CheckReport>& reports, int indent = 2);
std::vector<CheckReport> reports_from_json(const std::string& text);

}  // namespace mnr::verify
