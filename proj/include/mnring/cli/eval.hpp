#pragma once

// Evaluation of parsed expressions in one of three models: the level-m
// crossed product (L-mode), its R-mode extension with the central s, or
// finite twisted series with precision tracking.

#include <optional>
#include <string>
#include <variant>

#include "mnring/cli/parse.hpp"
#include "mnring/crossed.hpp"
#include "mnring/series.hpp"

namespace mnr::cli {

enum class Mode { crossed_l, crossed_r, series };

std::string mode_name(Mode m);  // "crossed-L", "crossed-R", "series"
std::optional<Mode> mode_from_name(const std::string& name);

struct Session {
  Mode mode = Mode::crossed_l;
  BasisPtr basis;
  std::uint64_t budget = 8;
  std::uint64_t seed = 0;

  std::size_t level() const { return basis->level(); }
  bool with_s() const { return mode == Mode::crossed_r; }
};

// A series known exactly below `frontier` (everywhere when absent). Terms at
// or above the frontier are dropped.
struct SeriesValue {
  SeriesElement body;
  std::optional<GroupElement> frontier;
};

using Value = std::variant<CrossedElement, SeriesValue>;

// Throws ParseError for atoms the mode does not have, DivisionByZero and
// DomainError for mathematical failures.
Value eval(const Expr& e, const Session& session);
Value eval(const std::string& text, const Session& session);

Value inverse(const Value& v, const Session& session);
Value multiply(const Value& a, const Value& b);
Value commutator(const Value& a, const Value& b, const Session& session);

std::string to_string(const Value& v);

}  // namespace mnr::cli
