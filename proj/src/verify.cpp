#include "mnring/verify.hpp"

#include <algorithm>
#include <exception>
#include <future>
#include <map>

#include <json.hpp>

#include "mnring/crossed.hpp"
#include "mnring/random.hpp"
#include "mnring/series.hpp"

namespace mnr::verify {

namespace {

// Accumulates samples and keeps the first counterexample.
class Recorder {
 public:
  Recorder(std::string id, std::string statement) {
    report_.id = std::move(id);
    report_.statement = std::move(statement);
  }
  void sample() { ++report_.samples; }
  bool failed() const { return report_.status == Status::fail; }
  void expect(bool ok, const std::string& witness) {
    sample();
    if (ok || failed()) return;
    report_.status = Status::fail;
    report_.witness = witness;
  }
  CheckReport finish() { return std::move(report_); }

 private:
  CheckReport report_;
};

// One generator per check, decorrelated by a per-check salt.
Sampler sampler_for(const CheckOptions& opts, std::uint64_t salt) {
  return Sampler(opts.seed * 0x9E3779B97F4A7C15ULL + salt);
}

BasisPtr basis_of(const CheckOptions& opts) {
  if (opts.level == 0) throw DomainError("checks need level at least 1");
  return PrimeBasis::first(opts.level);
}

SeriesElement series_radical(const BasisPtr& basis, std::size_t i) {
  return SeriesElement::constant(FieldElement::radical(basis, i));
}

SeriesElement series_x(const BasisPtr& basis, GenIndex i, Exponent e = 1) {
  return SeriesElement::group(basis, GroupElement::generator(i, e));
}

SeriesElement series_scalar(const BasisPtr& basis, const Rational& q) {
  return SeriesElement::constant(FieldElement::scalar(basis, q));
}

// The same series with generator i removed from every support element.
SeriesElement without_generator(const SeriesElement& a, GenIndex i) {
  SeriesElement out(a.basis());
  for (const auto& [g, c] : a.terms()) {
    std::vector<GroupElement::Entry> e;
    for (const auto& entry : g.entries())
      if (entry.first != i) e.push_back(entry);
    out.accumulate(GroupElement(std::move(e)), c);
  }
  return out;
}

std::string pair_witness(const std::string& what, const std::string& a, const std::string& b) {
  return what + ": a = " + a + "; b = " + b;
}

}  // namespace

CheckReport check_fixed_field(const CheckOptions& opts) {
  Recorder rec("fixed-field", "an element of K_m is fixed by every f_i iff it is rational");
  const BasisPtr basis = basis_of(opts);
  Sampler rng = sampler_for(opts, 1);
  rec.expect(fixed_by_all(FieldElement::scalar(basis, Rational(7))), "7");
  rec.expect(!fixed_by_all(FieldElement::radical(basis, 1)), "r1");
  for (std::uint64_t k = 0; k < opts.trials; ++k) {
    FieldElement a(basis);
    if (k % 2 == 0) {
      a = FieldElement::scalar(basis, rng.rational());
    } else {
      a = rng.field_element(basis, 4);
      if (a.is_scalar()) {
        const auto masks = std::int64_t{1} << basis->level();
        a.accumulate(static_cast<FieldElement::Mask>(rng.between(1, masks - 1)), rng.rational(true));
      }
    }
    rec.expect(fixed_by_all(a) == a.is_scalar(), to_string(a));
  }
  return rec.finish();
}

CheckReport check_twist_character(const CheckOptions& opts) {
  Recorder rec("twist-character",
               "Phi_{x_i} = f_i, Phi_g(r_i) = (-1)^{n_i} r_i, and Phi_h = id for h in H");
  const BasisPtr basis = basis_of(opts);
  const std::size_t m = basis->level();
  Sampler rng = sampler_for(opts, 2);
  for (std::uint64_t k = 0; k < opts.trials; ++k) {
    const auto i = static_cast<std::size_t>(rng.between(1, static_cast<std::int64_t>(m)));
    const FieldElement a = rng.field_element(basis, 4);
    const GroupElement xi = GroupElement::generator(static_cast<GenIndex>(i));
    rec.expect(apply_phi(xi, a) == apply_auto(i, a), "x" + std::to_string(i) + " on " + to_string(a));

    const GroupElement g = rng.group_element(static_cast<GenIndex>(m + 1), 3);
    const FieldElement r = FieldElement::radical(basis, i);
    const FieldElement expected = g.exponent(static_cast<GenIndex>(i)) % 2 == 0 ? r : -r;
    rec.expect(apply_phi(g, r) == expected, to_string(g) + " on r" + std::to_string(i));

    // Φ_g as the composite Π f_j^{n_j}.
    FieldElement composite = a;
    for (std::size_t j = 1; j <= m; ++j)
      if (g.exponent(static_cast<GenIndex>(j)) % 2 != 0) composite = apply_auto(j, composite);
    rec.expect(apply_phi(g, a) == composite, to_string(g) + " on " + to_string(a));

    const GroupElement h = rng.even_group_element(static_cast<GenIndex>(m + 1), 3);
    rec.expect(apply_phi(h, a) == a, to_string(h) + " on " + to_string(a));
  }
  return rec.finish();
}

CheckReport check_commutation_table(const CheckOptions& opts) {
  Recorder rec("commutation-table",
               "r_i x_j = x_j r_i (i != j), r_i x_i = -x_i r_i, x_i^2 = t_i, r_i^2 = p_i");
  const BasisPtr basis = basis_of(opts);
  const std::size_t m = basis->level();
  for (std::size_t i = 1; i <= m; ++i) {
    const auto gi = static_cast<GenIndex>(i);
    const std::string ri = "r" + std::to_string(i);
    const Rational p(static_cast<unsigned long>(basis->prime(i)));

    const SeriesElement sr = series_radical(basis, i);
    rec.expect(sr * sr == series_scalar(basis, p), "series " + ri + "^2");
    rec.expect(series_x(basis, gi) * series_x(basis, gi) == series_x(basis, gi, 2), "series x" + std::to_string(i) + "^2");

    const CrossedElement cr = CrossedElement::radical(basis, false, i);
    const CrossedElement cx = CrossedElement::generator(basis, false, i);
    rec.expect(cr * cr == CrossedElement::scalar(basis, false, CentralFraction(p)), "crossed " + ri + "^2");
    rec.expect(cx * cx == CrossedElement::t(basis, false, i), "crossed x" + std::to_string(i) + "^2");

    for (std::size_t j = 1; j <= m; ++j) {
      const auto gj = static_cast<GenIndex>(j);
      const std::string word = ri + "*x" + std::to_string(j);
      const SeriesElement sx = series_x(basis, gj);
      const SeriesElement s_lhs = sr * sx, s_rhs = sx * sr;
      rec.expect(i == j ? s_lhs == -s_rhs : s_lhs == s_rhs, "series " + word);

      const CrossedElement xj = CrossedElement::generator(basis, false, j);
      const CrossedElement c_lhs = cr * xj, c_rhs = xj * cr;
      rec.expect(i == j ? c_lhs == -c_rhs : c_lhs == c_rhs, "crossed " + word);
      rec.expect(to_series(c_lhs) == s_lhs, "models disagree on " + word);
    }
  }
  return rec.finish();
}

CheckReport check_ring_axioms(const CheckOptions& opts) {
  Recorder rec("ring-axioms", "associativity, distributivity and unit laws of the twisted product");
  const BasisPtr basis = basis_of(opts);
  const auto window = static_cast<GenIndex>(basis->level() + 1);
  Sampler rng = sampler_for(opts, 4);
  const SeriesElement one = SeriesElement::one(basis);
  for (std::uint64_t k = 0; k < opts.trials; ++k) {
    const SeriesElement a = rng.series(basis, 5, window), b = rng.series(basis, 5, window),
                        c = rng.series(basis, 5, window);
    const std::string w = "a = " + to_string(a) + "; b = " + to_string(b) + "; c = " + to_string(c);
    rec.expect((a * b) * c == a * (b * c), "associativity: " + w);
    rec.expect(a * (b + c) == a * b + a * c, "left distributivity: " + w);
    rec.expect((a + b) * c == a * c + b * c, "right distributivity: " + w);
    rec.expect(one * a == a && a * one == a, "unit: " + w);
  }
  return rec.finish();
}

CheckReport check_series_oracle(const CheckOptions& opts) {
  Recorder rec("series-oracle", "crossed_mul agrees with series_mul under t_i -> x_i^2");
  const BasisPtr basis = basis_of(opts);
  Sampler rng = sampler_for(opts, 5);
  const Sampler::CrossedShape shape{1, 4, 1, true};
  for (std::uint64_t k = 0; k < opts.trials; ++k) {
    const CrossedElement a = rng.crossed(basis, false, shape), b = rng.crossed(basis, false, shape);
    const SeriesElement sa = to_series(a), sb = to_series(b);
    rec.expect(to_series(a * b) == sa * sb, pair_witness("product", to_string(a), to_string(b)));
    rec.expect(from_series(sa) == a, "round trip: " + to_string(a));
  }
  return rec.finish();
}

CheckReport check_inversion(const CheckOptions& opts) {
  Recorder rec("inversion",
               "crossed_inv multiplies back to 1; series inverse residuals shrink with the budget");
  const BasisPtr basis = basis_of(opts);
  Sampler rng = sampler_for(opts, 6);
  const Sampler::CrossedShape shape{1, 4, 1, true};
  for (std::uint64_t k = 0; k < opts.trials; ++k) {
    const CrossedElement a = rng.nonzero_crossed(basis, false, shape);
    bool ok = false;
    try {
      const CrossedElement inv = crossed_inv(a);
      ok = (a * inv).is_one() && (inv * a).is_one();
    } catch (const std::exception&) {
      ok = false;
    }
    rec.expect(ok, "a = " + to_string(a));
  }

  // (1 − x1)⁻¹ ≈ 1 + x1 + ... + x1^8 leaves exactly −x1^9.
  const SeriesElement one_minus_x = SeriesElement::one(basis) - series_x(basis, 1);
  const TruncatedSeries geo = series_inv(one_minus_x, {8, std::nullopt});
  rec.expect(residual(one_minus_x, geo.body) == -series_x(basis, 1, 9), "residual of 1 - x1 at budget 8");

  const auto window = static_cast<GenIndex>(basis->level() + 1);
  for (int k = 0; k < 5; ++k) {
    SeriesElement a = rng.series(basis, 4, window);
    while (a.terms().size() < 2) a += rng.series(basis, 2, window);
    std::optional<GroupElement> last;
    for (std::uint64_t budget = 1; budget <= 5; ++budget) {
      const SeriesElement r = residual(a, series_inv(a, {budget, std::nullopt}).body);
      const bool rises = !r.is_zero() && (!last || *last < r.leading());
      rec.expect(rises, "frontier at budget " + std::to_string(budget) + " for " + to_string(a));
      if (!r.is_zero()) last = r.leading();
    }
  }
  return rec.finish();
}

CheckReport check_center(const CheckOptions& opts) {
  Recorder rec("center", "the center of the level-m model is F*1, of codimension 4^m");
  const BasisPtr basis = basis_of(opts);
  const std::size_t expected_dim = std::size_t{1} << (2 * basis->level());
  for (bool with_s : {false, true}) {
    const std::string mode = with_s ? "R-mode" : "L-mode";
    const auto center = center_basis(basis, with_s);
    rec.expect(center.size() == 1 && center.front().is_scalar() && !center.front().is_zero(),
               mode + " center basis has " + std::to_string(center.size()) + " elements");
    const std::size_t dim = dim_over_center(basis, with_s);
    rec.expect(dim == expected_dim, mode + " dimension " + std::to_string(dim));
  }
  return rec.finish();
}

CheckReport check_centralizer(const CheckOptions& opts) {
  Recorder rec("centralizer",
               "r_i a - a r_i = 2 b r_i x_i != 0 for a = b x_i + c with b, c free of x_i");
  const BasisPtr basis = basis_of(opts);
  const std::size_t m = basis->level();
  const auto window = static_cast<GenIndex>(m + 1);
  Sampler rng = sampler_for(opts, 8);
  for (std::uint64_t k = 0; k < opts.trials; ++k) {
    const auto i = static_cast<GenIndex>(rng.between(1, static_cast<std::int64_t>(m)));
    const SeriesElement beta = without_generator(rng.series(basis, 3, window), i);
    const SeriesElement gamma = without_generator(rng.series(basis, 3, window), i);
    if (beta.is_zero()) continue;
    const SeriesElement xi = series_x(basis, i), r = series_radical(basis, i);
    const SeriesElement alpha = beta * xi + gamma;
    const SeriesElement lhs = r * alpha - alpha * r;
    const SeriesElement rhs = series_scalar(basis, Rational(2)) * beta * r * xi;
    rec.expect(lhs == rhs && !lhs.is_zero(),
               "i = " + std::to_string(i) + ", b = " + to_string(beta) + ", c = " + to_string(gamma));
  }
  return rec.finish();
}

CheckReport check_generator_independence(const CheckOptions& opts) {
  Recorder rec("generator-independence",
               "x_1..x_m are independent over the center; r_m commutes with x_i (i < m) but not x_m");
  const BasisPtr basis = basis_of(opts);
  const std::size_t m = basis->level();
  // Columns: coordinates of z·x_i for z in the center basis. Independence of
  // the x_i over Z means full column rank.
  const auto center = center_basis(basis, false);
  const CrossedElement zero(basis, false);
  Matrix<CentralFraction> cols(zero.dimension(), center.size() * m);
  for (std::size_t i = 1; i <= m; ++i) {
    const CrossedElement x = CrossedElement::generator(basis, false, i);
    for (std::size_t z = 0; z < center.size(); ++z) {
      const CrossedElement v = center[z] * x;
      for (std::uint32_t r = 0; r < zero.dimension(); ++r) cols(r, (i - 1) * center.size() + z) = v.coefficient_at(r);
    }
  }
  rec.expect(rank(cols) == cols.cols(), "nontrivial relation among x_i over the center");

  const CrossedElement rm = CrossedElement::radical(basis, false, m);
  const SeriesElement srm = series_radical(basis, m);
  for (std::size_t i = 1; i <= m; ++i) {
    const CrossedElement x = CrossedElement::generator(basis, false, i);
    const SeriesElement sx = series_x(basis, static_cast<GenIndex>(i));
    const bool should_commute = i < m;
    const std::string w = "r" + std::to_string(m) + " with x" + std::to_string(i);
    rec.expect((rm * x == x * rm) == should_commute, "crossed " + w);
    rec.expect((srm * sx == sx * srm) == should_commute, "series " + w);
  }
  return rec.finish();
}

CheckReport check_r_structure(const CheckOptions& opts) {
  Recorder rec("r-structure",
               "R-mode: dimension 4^m over the center, s central, a - (x1^-1 + ... + xm^-1) = s");
  const BasisPtr basis = basis_of(opts);
  const std::size_t m = basis->level();
  const std::size_t dim = dim_over_center(basis, true);
  rec.expect(dim == (std::size_t{1} << (2 * m)), "dimension " + std::to_string(dim));
  const CrossedElement s = CrossedElement::s(basis);
  rec.expect(is_central(s), "s is not central");
  CrossedElement prefix(basis, true);
  for (std::size_t i = 1; i <= m; ++i) prefix += crossed_inv(CrossedElement::generator(basis, true, i));
  const CrossedElement rest = CrossedElement::alpha(basis) - prefix;
  rec.expect(rest == s, "a - prefix = " + to_string(rest));

  // Series side: the first m terms of a = Σ x_i⁻¹, exact below x_{m+1}⁻¹.
  const auto n = static_cast<GenIndex>(m);
  const TruncatedSeries t = alpha_prefix(basis, n, n + 1);
  SeriesElement expected(basis);
  for (GenIndex i = 1; i <= n; ++i) expected += series_x(basis, i, -1);
  rec.expect(t.body == expected && t.exact_below == GroupElement::generator(n + 1, -1), to_string(t));
  return rec.finish();
}

CheckReport check_torsion_mechanism(const CheckOptions& opts) {
  Recorder rec("torsion-mechanism",
               "commutators have regular norm 1; central commutators are +-1; t1 is not torsion");
  const BasisPtr basis = basis_of(opts);
  Sampler rng = sampler_for(opts, 11);
  const CrossedElement r1 = CrossedElement::radical(basis, false, 1);
  const CrossedElement x1 = CrossedElement::generator(basis, false, 1);
  const CrossedElement c0 = commutator(r1, x1);
  rec.expect(c0 == CrossedElement::scalar(basis, false, CentralFraction(-1)) && is_torsion_central(c0),
             "commutator(r1, x1) = " + to_string(c0));
  const CrossedElement t1 = CrossedElement::t(basis, false, 1);
  rec.expect(is_central(t1) && !is_torsion_central(t1), "t1 accepted as torsion");

  // Norms of dense commutators grow quickly with the level; above level 2 the
  // factors are kept to two terms so the check stays at desk scale.
  const Sampler::CrossedShape shape{1, basis->level() <= 2 ? std::size_t{3} : std::size_t{2}, 1, true};
  for (std::uint64_t k = 0; k < opts.trials; ++k) {
    const CrossedElement a = rng.nonzero_crossed(basis, false, shape);
    const CrossedElement b = rng.nonzero_crossed(basis, false, shape);
    bool ok = false;
    try {
      const CrossedElement c = commutator(a, b);
      ok = regular_norm(c) == CentralFraction(1) && (!is_central(c) || is_torsion_central(c));
    } catch (const std::exception&) {
      ok = false;
    }
    rec.expect(ok, pair_witness("commutator", to_string(a), to_string(b)));
  }
  return rec.finish();
}

CheckReport check_witnesses(const CheckOptions& opts) {
  Recorder rec("witnesses", "r_i fails to commute with a iff some term of a has mu_i = 1");
  const BasisPtr basis = basis_of(opts);
  Sampler rng = sampler_for(opts, 12);
  const Sampler::CrossedShape shape{1, 4, 1, true};
  for (std::uint64_t k = 0; k < opts.trials; ++k) {
    const CrossedElement a = rng.crossed(basis, false, shape);
    std::set<std::size_t> expected;
    for (const auto& term : a.terms())
      for (std::size_t i = 1; i <= a.level(); ++i)
        if ((term.monomial.mu >> (i - 1)) & 1) expected.insert(i);
    rec.expect(noncommuting_witnesses(a) == expected, to_string(a));
  }
  return rec.finish();
}

const std::vector<CheckInfo>& registry() {
  static const std::vector<CheckInfo> checks = {
      {"fixed-field", check_fixed_field, 500},
      {"twist-character", check_twist_character, 100},
      {"commutation-table", check_commutation_table, 1},
      {"ring-axioms", check_ring_axioms, 500},
      {"series-oracle", check_series_oracle, 100},
      {"inversion", check_inversion, 100},
      {"center", check_center, 1},
      {"centralizer", check_centralizer, 100},
      {"generator-independence", check_generator_independence, 1},
      {"r-structure", check_r_structure, 1},
      {"torsion-mechanism", check_torsion_mechanism, 200},
      {"witnesses", check_witnesses, 200},
  };
  return checks;
}

namespace {

CheckReport run_guarded(const CheckInfo& info, const CheckOptions& opts) {
  try {
    return info.run(opts);
  } catch (const std::exception& e) {
    CheckReport r;
    r.id = info.id;
    r.statement = "check aborted";
    r.status = Status::fail;
    r.witness = std::string("exception: ") + e.what();
    return r;
  }
}

}  // namespace

std::vector<CheckReport> run_all(const SuiteConfig& config) {
  if (config.level == 0) throw DomainError("checks need level at least 1");
  std::vector<const CheckInfo*> selected;
  for (const auto& id : config.only) {
    const auto& all = registry();
    if (std::none_of(all.begin(), all.end(), [&](const CheckInfo& c) { return c.id == id; }))
      throw DomainError("unknown check '" + id + "'");
  }
  for (const auto& info : registry())
    if (config.only.empty() || std::find(config.only.begin(), config.only.end(), info.id) != config.only.end())
      selected.push_back(&info);

  auto options_for = [&](const CheckInfo& info) {
    return CheckOptions{config.seed, config.level, config.trials.value_or(info.default_trials)};
  };
  std::vector<CheckReport> reports;
  if (config.parallel) {
    std::vector<std::future<CheckReport>> jobs;
    for (const auto* info : selected)
      jobs.push_back(std::async(std::launch::async, [info, opts = options_for(*info)] { return run_guarded(*info, opts); }));
    for (auto& j : jobs) reports.push_back(j.get());
  } else {
    for (const auto* info : selected) reports.push_back(run_guarded(*info, options_for(*info)));
  }
  return reports;
}

std::string to_json(const std::vector<CheckReport>& reports, int indent) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json j;
    j["id"] = r.id;
    j["statement"] = r.statement;
    j["samples"] = r.samples;
    j["status"] = r.passed() ? "pass" : "fail";
    j["witness"] = r.witness ? nlohmann::ordered_json(*r.witness) : nlohmann::ordered_json(nullptr);
    out.push_back(std::move(j));
  }
  return out.dump(indent);
}

std::vector<CheckReport> reports_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  std::vector<CheckReport> out;
  for (const auto& e : j) {
    CheckReport r;
    r.id = e.at("id").get<std::string>();
    r.statement = e.at("statement").get<std::string>();
    r.samples = e.at("samples").get<std::uint64_t>();
    const auto status = e.at("status").get<std::string>();
    if (status != "pass" && status != "fail") throw DomainError("bad status '" + status + "'");
    r.status = status == "pass" ? Status::pass : Status::fail;
    if (!e.at("witness").is_null()) r.witness = e.at("witness").get<std::string>();
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace mnr::verify
