#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "s02e/nat.hpp"

namespace s02e {

// Variable assignment: slot i-1 holds the value of x<i>. Slots can be set
// sparsely (quantifier evaluation binds a variable at its own index);
// reading an unset slot raises UnboundVariable.
class Env {
 public:
  Env() = default;

  static Env from_values(std::vector<Nat> values);  // x1..xk in order
  static Env from_assignments(const std::vector<std::pair<unsigned, Nat>>& assignments);

  bool has(unsigned var) const;
  const Nat& get(unsigned var) const;  // throws UnboundVariable
  Env with(unsigned var, Nat value) const;

  std::size_t size() const { return slots_.size(); }
  std::string to_string() const;

 private:
  std::vector<std::optional<Nat>> slots_;
};

}  // namespace s02e
