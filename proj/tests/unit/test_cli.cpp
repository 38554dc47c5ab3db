#include <cstdlib>
#include <sstream>

#include "doctest.h"
#include "mnring/cli/app.hpp"
#include "mnring/cli/eval.hpp"
#include "mnring/cli/parse.hpp"
#include "json.hpp"

using namespace mnr;
using namespace mnr::cli;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string rendered(const std::string& text, std::size_t level = 3) { return to_string(*parse(text, level)); }

Session session(Mode mode, std::size_t level = 2) {
  Session s;
  s.mode = mode;
  s.basis = PrimeBasis::first(level);
  return s;
}

std::string eval_text(const std::string& text, Mode mode = Mode::crossed_l, std::size_t level = 2) {
  return to_string(eval(text, session(mode, level)));
}

}  // namespace

TEST_CASE("precedence and implicit multiplication") {
  CHECK(rendered("1 + 2*3") == "(1 + (2 * 3))");
  CHECK(rendered("r1 x1^-1") == "(r1 * (x1^-1))");
  CHECK(rendered("-x1^2") == "(-(x1^2))");
  CHECK(rendered("(1 - x1)^(-3)") == "((1 - x1)^-3)");
  CHECK(rendered("2(r1 + r2)x3") == "((2 * (r1 + r2)) * x3)");
  CHECK(rendered("a - s / t2") == "(a - (s / t2))");
  CHECK(rendered("1 - 2 - 3") == "((1 - 2) - 3)");
}

TEST_CASE("parse errors carry offsets") {
  auto offset_of = [](const std::string& text) -> std::optional<std::size_t> {
    try {
      parse(text, 3);
    } catch (const ParseError& e) {
      return e.offset();
    }
    return std::nullopt;
  };
  CHECK(offset_of("r1 + r9") == 5);
  CHECK(offset_of("x0") == 0);
  CHECK(offset_of("1 + * 2") == 4);
  CHECK(offset_of("(x1 + 1") == 7);
  CHECK(offset_of("x1)") == 2);
  CHECK(offset_of("") == 0);
  CHECK(offset_of("q1") == 0);
  CHECK(offset_of("x1^") == 3);
  CHECK_FALSE(offset_of("x1 x2 x3").has_value());

  try {
    parse("r1 + r9", 3);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(render_diagnostic("r1 + r9", e) == "error at offset 5: index out of range: r9 at level 3\n  r1 + r9\n       ^");
  }
}

TEST_CASE("evaluation in the crossed models") {
  CHECK(eval_text("r1 x1 r1^-1 x1^-1") == "-1");
  CHECK(eval_text("x1^2 - t1") == "0");
  CHECK(eval_text("(r1 + r2)^2") == "5 + 2*r1*r2");
  CHECK(eval_text("x2 r2 x2^-1") == "-r2");
  CHECK(eval_text("1/(1 + r1 x1)") == "1/(2*t1 + 1) - (1/(2*t1 + 1))*r1*x1");
  CHECK(eval_text("a - (x1^-1 + x2^-1)", Mode::crossed_r) == "s");
  CHECK(eval_text("s x1 - x1 s", Mode::crossed_r) == "0");
  CHECK_THROWS_AS(eval_text("a"), ParseError);
  CHECK_THROWS_AS(eval_text("s"), ParseError);
  CHECK_THROWS_AS(eval_text("1/(x1 - x1)"), DivisionByZero);
}

TEST_CASE("series precision tracking") {
  CHECK(eval_text("(1 - x1)^-1 (1 - x1)", Mode::series) == "1 + O(x1^9)");
  CHECK(eval_text("x1^2", Mode::series) == "x1^2");
  CHECK(eval_text("t1 - x1^2", Mode::series) == "0");
  CHECK(eval_text("a", Mode::series) == "x1^-1 + x2^-1 + O(x3^-1)");
  // The unknown tail of a is shifted by the multiplier.
  CHECK(eval_text("x1 a", Mode::series) == "1 + x1*x2^-1 + O(x1*x3^-1)");
  CHECK(eval_text("a - a", Mode::series) == "O(x3^-1)");
  CHECK(eval_text("x1 r1 - r1 x1", Mode::series) == "-2*r1*x1");
  CHECK_THROWS_AS(eval_text("(a - a)^-1", Mode::series), DomainError);
  CHECK_THROWS_AS(eval_text("s", Mode::series), ParseError);

  Session s = session(Mode::series);
  s.budget = 2;
  CHECK(to_string(eval("(1 + x2)^-1", s)) == "1 - x2 + x2^2 + O(x2^3)");
}

TEST_CASE("exit codes") {
  CHECK(run({"comm", "r1", "x1"}).out == "-1\n");
  CHECK(run({"dim", "--level", "2"}).out == "16\n");
  CHECK(run({"eval", "1/0"}).code == kExitMath);
  CHECK(run({"eval", "r1 +"}).code == kExitUsage);
  CHECK(run({"eval"}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"--level", "0", "dim"}).out == "1\n");  // the level-0 model is F itself
  CHECK(run({"--primes", "2,4", "dim"}).code == kExitUsage);
  CHECK(run({"--mode", "crossed-R", "center-basis"}).out == "1\n");
  CHECK(run({"--primes", "3,7", "eval", "r2^2"}).out == "7\n");
}

TEST_CASE("environment defaults") {
  setenv("MNRING_LEVEL", "1", 1);
  CHECK(run({"dim"}).out == "4\n");
  CHECK(run({"--level", "3", "dim"}).out == "64\n");
  unsetenv("MNRING_LEVEL");
  setenv("MNRING_PRIMES", "5", 1);
  CHECK(run({"eval", "r1^2"}).out == "5\n");
  unsetenv("MNRING_PRIMES");
}

TEST_CASE("structured output") {
  const Run ok = run({"--format", "structured", "witness", "r1 x1 + x2"});
  REQUIRE(ok.code == 0);
  const auto j = nlohmann::json::parse(ok.out);
  CHECK(j["command"] == "witness");
  CHECK(j["level"] == 2);
  CHECK(j["result"]["value"] == nlohmann::json::array({1, 2}));

  const Run bad = run({"--format", "structured", "eval", "r1 + r9"});
  CHECK(bad.code == kExitUsage);
  const auto e = nlohmann::json::parse(bad.out);
  CHECK(e["error"]["kind"] == "syntax");
  CHECK(e["error"]["offset"] == 5);

  const std::vector<std::string> check = {"--format", "structured", "--seed", "3", "--level", "1", "check", "--trials", "4"};
  CHECK(run(check).out == run(check).out);
}
