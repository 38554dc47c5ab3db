#pragma once

// Expression front-end.
//
//   sum     := product (('+' | '-') product)*
//   product := unary (('*' | '/')? unary)*        adjacency multiplies
//   unary   := '-' unary | power
//   power   := primary ('^' exponent)?            exponent: ['-'] digits, optionally parenthesized
//   primary := integer | atom | '(' sum ')'
//   atom    := r<i> | x<i> | t<i> | a | s
//
// `^` binds tighter than unary minus, so -x1^2 = -(x1^2).

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "mnring/numfield.hpp"

namespace mnr::cli {

// A diagnostic tied to a character offset of the input.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, const std::string& message)
      : std::runtime_error(message), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

struct Expr {
  enum class Kind { integer, radical, generator, central, alpha, alpha_tail, add, sub, mul, div, neg, pow };
  Kind kind;
  std::size_t offset = 0;
  Integer value;              // integer
  std::size_t index = 0;      // radical, generator, central
  std::int64_t exponent = 0;  // pow
  std::vector<std::shared_ptr<const Expr>> args;
};
using ExprPtr = std::shared_ptr<const Expr>;

// Indices of r, x and t must lie in 1..level.
ExprPtr parse(const std::string& text, std::size_t level);

// Fully parenthesized rendering, for diagnostics and tests.
std::string to_string(const Expr& e);

// "error at offset 4: ..." followed by the input and a caret line.
std::string render_diagnostic(const std::string& text, const ParseError& e);

}  // namespace mnr::cli
