#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace s02e {

// Input text could not be read as a term / formula / sequent / proof.
// `pos` is a byte offset into the input.
struct ParseError : std::runtime_error {
  std::size_t pos;
  ParseError(std::size_t pos_, const std::string& msg)
      : std::runtime_error(msg + " (at offset " + std::to_string(pos_) + ")"), pos(pos_) {}
};

// A variable was evaluated under an environment that does not cover it.
struct UnboundVariable : std::runtime_error {
  unsigned index;
  explicit UnboundVariable(unsigned index_)
      : std::runtime_error("unbound variable x" + std::to_string(index_)), index(index_) {}
};

// A guard refused to materialize an unreasonably large value or search
// space. Guards fail loudly; they never silently change a result.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The rewrite engine exceeded its step budget. The defining equations
// terminate on all closed terms, so this signals a rule-coverage bug.
struct RewriteDiverged : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An operation was applied outside its documented domain.
struct ContractViolation : std::logic_error {
  using std::logic_error::logic_error;
};

// A Goedel code did not decode to an object of the expected shape.
struct DecodeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace s02e
