#include "mnring/cli/app.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mnring/cli/eval.hpp"
#include "mnring/crossed.hpp"
#include "mnring/verify.hpp"

namespace mnr::cli {

namespace {

using Json = nlohmann::ordered_json;

// Carries an exit code out of a command.
struct Failure {
  int code;
  std::string kind;
  std::string message;
  std::optional<std::size_t> offset;
  std::string input;
};

// ---- structured output ----

Json rational_json(const Rational& q) {
  return Json{{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

Json poly_json(const LaurentPoly& p, std::size_t vars) {
  Json out = Json::array();
  for (const auto& t : p.terms()) {
    Json e = Json::array();
    for (std::size_t i = 0; i < vars; ++i) e.push_back(t.exps[i]);
    Json term{{"exponents", e}};
    term.update(rational_json(t.coeff));
    out.push_back(std::move(term));
  }
  return out;
}

Json central_json(const CentralFraction& c, std::size_t vars) {
  return Json{{"numerator", poly_json(c.num(), vars)}, {"denominator", poly_json(c.den(), vars)}};
}

Json bits_json(std::uint32_t mask, std::size_t level) {
  Json out = Json::array();
  for (std::size_t i = 0; i < level; ++i) out.push_back((mask >> i) & 1);
  return out;
}

Json group_json(const GroupElement& g) {
  Json out = Json::array();
  for (const auto& [i, e] : g.entries()) out.push_back(Json::array({i, e}));
  return out;
}

Json value_json(const Value& v) {
  if (const auto* c = std::get_if<CrossedElement>(&v)) {
    Json terms = Json::array();
    for (const auto& [b, coeff] : c->terms())
      terms.push_back(Json{{"epsilon", bits_json(b.eps, c->level())},
                           {"mu", bits_json(b.mu, c->level())},
                           {"coefficient", central_json(coeff, c->num_vars())}});
    return Json{{"kind", "crossed"}, {"text", to_string(v)}, {"terms", terms}};
  }
  const auto& s = std::get<SeriesValue>(v);
  Json terms = Json::array();
  for (const auto& [g, fe] : s.body.terms()) {
    Json coeff = Json::array();
    for (const auto& [eps, q] : fe.terms()) {
      Json t{{"epsilon", bits_json(eps, fe.level())}};
      t.update(rational_json(q));
      coeff.push_back(std::move(t));
    }
    terms.push_back(Json{{"group", group_json(g)}, {"coefficient", coeff}});
  }
  return Json{{"kind", "series"},
              {"text", to_string(v)},
              {"terms", terms},
              {"frontier", s.frontier ? group_json(*s.frontier) : Json(nullptr)}};
}

// ---- session setup ----

struct Flags {
  std::string mode = "crossed-L";
  std::optional<std::size_t> level;
  std::string primes;
  std::uint64_t budget = 8;
  std::uint64_t seed = 0;
  std::string format = "text";
};

std::vector<std::uint64_t> parse_primes(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos || item.size() > 18)
      throw Failure{kExitUsage, "usage", "bad prime list '" + text + "'", std::nullopt, ""};
    out.push_back(std::stoull(item));
  }
  return out;
}

Session make_session(const Flags& f, bool crossed_only) {
  Session s;
  const auto mode = mode_from_name(f.mode);
  if (!mode) throw Failure{kExitUsage, "usage", "unknown mode '" + f.mode + "'", std::nullopt, ""};
  s.mode = *mode;
  if (crossed_only && s.mode == Mode::series)
    throw Failure{kExitUsage, "usage", "this command needs crossed-L or crossed-R mode", std::nullopt, ""};
  if (f.budget < 1) throw Failure{kExitUsage, "usage", "budget must be at least 1", std::nullopt, ""};
  s.budget = f.budget;
  s.seed = f.seed;
  try {
    if (!f.primes.empty()) {
      auto primes = parse_primes(f.primes);
      if (f.level && *f.level != primes.size())
        throw Failure{kExitUsage, "usage", "--level disagrees with the number of --primes", std::nullopt, ""};
      s.basis = std::make_shared<const PrimeBasis>(std::move(primes));
    } else {
      const std::size_t level = f.level.value_or(2);
      if (level > kMaxFieldLevel)
        throw Failure{kExitUsage, "usage", "level above " + std::to_string(kMaxFieldLevel), std::nullopt, ""};
      s.basis = PrimeBasis::first(level);
    }
  } catch (const std::invalid_argument& e) {
    throw Failure{kExitUsage, "usage", e.what(), std::nullopt, ""};
  }
  if (s.mode != Mode::series && s.level() > kMaxCrossedLevel)
    throw Failure{kExitUsage, "usage",
                  "crossed modes support levels up to " + std::to_string(kMaxCrossedLevel), std::nullopt, ""};
  return s;
}

Value evaluate(const std::string& text, const Session& s) {
  try {
    return eval(*parse(text, s.level()), s);
  } catch (const ParseError& e) {
    throw Failure{kExitUsage, "syntax", e.what(), e.offset(), text};
  }
}

const CrossedElement& crossed_of(const Value& v) { return std::get<CrossedElement>(v); }

// ---- command output ----

class Output {
 public:
  Output(const Flags& f, const std::string& command, std::ostream& out)
      : structured_(f.format == "structured"), out_(out) {
    header_["command"] = command;
    header_["mode"] = f.mode;
  }
  bool structured() const { return structured_; }
  void describe(const Session& s) {
    header_["mode"] = mode_name(s.mode);
    header_["level"] = s.level();
    header_["primes"] = s.basis->primes();
  }
  void emit(const std::string& text, Json result) {
    if (structured_) {
      Json j = header_;
      j["result"] = std::move(result);
      out_ << j.dump(2) << "\n";
    } else {
      out_ << text << "\n";
    }
  }
  void error(const Failure& f, std::ostream& err) {
    if (structured_) {
      Json j = header_;
      Json e{{"kind", f.kind}, {"message", f.message}};
      if (f.offset) e["offset"] = *f.offset;
      j["error"] = std::move(e);
      out_ << j.dump(2) << "\n";
      return;
    }
    if (f.offset) {
      err << render_diagnostic(f.input, ParseError(*f.offset, f.message)) << "\n";
    } else {
      err << "error: " << f.message << "\n";
    }
  }

 private:
  bool structured_;
  std::ostream& out_;
  Json header_;
};

std::string central_text(const CentralFraction& c, const Session& s) {
  return to_string(c, central_names(s.level(), s.with_s()));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact arithmetic in twisted Malcev-Neumann series and their crossed-product models", "mnring"};
  app.require_subcommand(1);
  app.fallthrough();
  Flags flags;
  std::size_t level = 0;
  app.add_option("--mode", flags.mode, "crossed-L (default), crossed-R or series")
      ->check(CLI::IsMember({"crossed-L", "crossed-R", "series", "L", "R"}));
  auto* level_opt = app.add_option("--level", level, "number of primes m (default 2)")->envname("MNRING_LEVEL");
  app.add_option("--primes", flags.primes, "comma-separated strictly increasing primes")->envname("MNRING_PRIMES");
  app.add_option("--budget", flags.budget, "series inversion budget K (default 8)");
  app.add_option("--seed", flags.seed, "random seed for check");
  app.add_option("--format", flags.format, "text or structured")->check(CLI::IsMember({"text", "structured"}));

  std::string expr, expr2;
  std::vector<std::string> only;
  std::optional<std::uint64_t> trials;
  bool serial = false;
  auto* eval_cmd = app.add_subcommand("eval", "evaluate an expression");
  eval_cmd->add_option("expr", expr, "expression")->required();
  auto* inv_cmd = app.add_subcommand("inv", "inverse of an expression");
  inv_cmd->add_option("expr", expr, "expression")->required();
  auto* comm_cmd = app.add_subcommand("comm", "commutator A B A^-1 B^-1");
  comm_cmd->add_option("a", expr, "first expression")->required();
  comm_cmd->add_option("b", expr2, "second expression")->required();
  auto* central_cmd = app.add_subcommand("central", "whether an element is central");
  central_cmd->add_option("expr", expr, "expression")->required();
  auto* norm_cmd = app.add_subcommand("norm", "determinant of left multiplication");
  norm_cmd->add_option("expr", expr, "expression")->required();
  auto* matrix_cmd = app.add_subcommand("matrix", "left multiplication matrix on the monomial basis");
  matrix_cmd->add_option("expr", expr, "expression")->required();
  auto* dim_cmd = app.add_subcommand("dim", "dimension over the center");
  auto* basis_cmd = app.add_subcommand("center-basis", "basis of the center over F");
  auto* witness_cmd = app.add_subcommand("witness", "radicals that do not commute with an element");
  witness_cmd->add_option("expr", expr, "expression")->required();
  auto* check_cmd = app.add_subcommand("check", "run the verification suite");
  check_cmd->add_option("--only", only, "run only these checks (repeatable)");
  check_cmd->add_option("--trials", trials, "override every trial count");
  check_cmd->add_flag("--serial", serial, "run checks one after another");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  if (level_opt->count() > 0) flags.level = level;
  // --mode L and R are accepted as short forms.
  if (auto m = mode_from_name(flags.mode)) flags.mode = mode_name(*m);

  const CLI::App* cmd = app.get_subcommands().front();
  Output output(flags, cmd->get_name(), out);
  try {
    const bool crossed_only = cmd == central_cmd || cmd == norm_cmd || cmd == matrix_cmd || cmd == dim_cmd || cmd == basis_cmd ||
                              cmd == witness_cmd;
    Session s = make_session(flags, crossed_only);
    output.describe(s);

    if (cmd == eval_cmd || cmd == inv_cmd) {
      Value v = evaluate(expr, s);
      if (cmd == inv_cmd) v = inverse(v, s);
      output.emit(to_string(v), value_json(v));
    } else if (cmd == comm_cmd) {
      Value a = evaluate(expr, s), b = evaluate(expr2, s);
      Value c = commutator(a, b, s);
      output.emit(to_string(c), value_json(c));
    } else if (cmd == central_cmd) {
      const bool central = is_central(crossed_of(evaluate(expr, s)));
      output.emit(central ? "true" : "false", Json{{"kind", "boolean"}, {"value", central}});
    } else if (cmd == norm_cmd) {
      const Value v = evaluate(expr, s);
      const CrossedElement& a = crossed_of(v);
      const CentralFraction n = regular_norm(a);
      output.emit(central_text(n, s), Json{{"kind", "central"},
                                          {"text", central_text(n, s)},
                                          {"value", central_json(n, a.num_vars())}});
    } else if (cmd == matrix_cmd) {
      // Column j holds the coordinates of a·b_j.
      const Value v = evaluate(expr, s);
      const CrossedElement& a = crossed_of(v);
      const Matrix<CentralFraction> m = left_regular_matrix(a);
      Json basis = Json::array(), rows = Json::array();
      std::string text;
      for (std::uint32_t j = 0; j < m.cols(); ++j) {
        const std::string word = monomial_word(a.monomial_at(j));
        basis.push_back(word.empty() ? "1" : word);
        text += (j ? " " : "basis: ") + basis.back().get<std::string>();
      }
      for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        text += "\n[";
        for (std::size_t j = 0; j < m.cols(); ++j) {
          row.push_back(central_json(m(i, j), a.num_vars()));
          text += (j ? ", " : "") + central_text(m(i, j), s);
        }
        text += "]";
        rows.push_back(std::move(row));
      }
      output.emit(text, Json{{"kind", "matrix"}, {"basis", basis}, {"rows", rows}});
    } else if (cmd == dim_cmd) {
      const std::size_t d = dim_over_center(s.basis, s.with_s());
      output.emit(std::to_string(d), Json{{"kind", "integer"}, {"value", d}});
    } else if (cmd == basis_cmd) {
      const auto basis = center_basis(s.basis, s.with_s());
      std::string text;
      Json elements = Json::array();
      for (const auto& e : basis) {
        text += (text.empty() ? "" : "\n") + to_string(e);
        elements.push_back(value_json(e));
      }
      output.emit(text, Json{{"kind", "elements"}, {"elements", elements}});
    } else if (cmd == witness_cmd) {
      const auto w = noncommuting_witnesses(crossed_of(evaluate(expr, s)));
      std::string text = "{";
      for (auto i : w) text += (text.size() > 1 ? ", " : "") + std::to_string(i);
      text += "}";
      output.emit(text, Json{{"kind", "indices"}, {"value", w}});
    } else if (cmd == check_cmd) {
      verify::SuiteConfig config;
      config.seed = s.seed;
      config.level = s.level();
      config.trials = trials;
      config.only = only;
      config.parallel = !serial;
      if (config.level == 0) throw Failure{kExitUsage, "usage", "checks need level at least 1", std::nullopt, ""};
      std::vector<verify::CheckReport> reports;
      try {
        reports = verify::run_all(config);
      } catch (const DomainError& e) {
        throw Failure{kExitUsage, "usage", e.what(), std::nullopt, ""};
      }
      std::size_t failed = 0;
      std::string text;
      for (const auto& r : reports) {
        text += std::string(r.passed() ? "pass" : "FAIL") + "  " + r.id + "  (" + std::to_string(r.samples) +
                " samples)\n";
        if (!r.passed()) {
          ++failed;
          text += "      witness: " + r.witness.value_or("") + "\n";
        }
      }
      text += failed == 0 ? "all " + std::to_string(reports.size()) + " checks passed"
                          : std::to_string(failed) + " of " + std::to_string(reports.size()) + " checks failed";
      Json result{{"kind", "reports"}, {"seed", s.seed}, {"reports", Json::parse(verify::to_json(reports))}};
      output.emit(text, std::move(result));
      return failed == 0 ? kExitOk : kExitMath;
    }
    return kExitOk;
  } catch (const Failure& f) {
    output.error(f, err);
    return f.code;
  } catch (const ParseError& e) {
    output.error(Failure{kExitUsage, "syntax", e.what(), e.offset(), expr}, err);
    return kExitUsage;
  } catch (const IndexError& e) {
    output.error(Failure{kExitUsage, "usage", e.what(), std::nullopt, ""}, err);
    return kExitUsage;
  } catch (const DivisionByZero& e) {
    output.error(Failure{kExitMath, "math", e.what(), std::nullopt, ""}, err);
    return kExitMath;
  } catch (const DomainError& e) {
    output.error(Failure{kExitMath, "math", e.what(), std::nullopt, ""}, err);
    return kExitMath;
  } catch (const StructuralError& e) {
    output.error(Failure{kExitMath, "math", e.what(), std::nullopt, ""}, err);
    return kExitMath;
  } catch (const std::exception& e) {
    output.error(Failure{kExitMath, "internal", e.what(), std::nullopt, ""}, err);
    return kExitMath;
  }
}

}  // namespace mnr::cli
