#pragma once

#include <stdexcept>
#include <string>

namespace mnr {

// Operands that do not live in the same model (basis, level or mode mismatch),
// or a twist that would act on a radical outside the configured window.
class StructuralError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero") {}
  explicit DivisionByZero(const std::string& what) : std::domain_error(what) {}
};

// Generator or prime index outside 1..level.
class IndexError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Raised when an operation's input is outside its domain but no arithmetic
// fault occurred (e.g. commutator of a non-invertible series element).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace mnr
