#include "s02e/env.hpp"

#include <sstream>

#include "s02e/errors.hpp"

namespace s02e {

Env Env::from_values(std::vector<Nat> values) {
  Env e;
  e.slots_.reserve(values.size());
  for (auto& v : values) e.slots_.emplace_back(std::move(v));
  return e;
}

Env Env::from_assignments(const std::vector<std::pair<unsigned, Nat>>& assignments) {
  Env e;
  for (const auto& [var, value] : assignments) e = e.with(var, value);
  return e;
}

bool Env::has(unsigned var) const {
  return var >= 1 && var <= slots_.size() && slots_[var - 1].has_value();
}

const Nat& Env::get(unsigned var) const {
  if (!has(var)) throw UnboundVariable(var);
  return *slots_[var - 1];
}

Env Env::with(unsigned var, Nat value) const {
  Env e = *this;
  if (var == 0) throw UnboundVariable(0);
  if (e.slots_.size() < var) e.slots_.resize(var);
  e.slots_[var - 1] = std::move(value);
  return e;
}

std::string Env::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < slots_.size(); ++i) {
    if (i) os << ",";
    if (slots_[i]) {
      os << slots_[i]->get_str();
    } else {
      os << "_";
    }
  }
  os << "]";
  return os.str();
}

}  // namespace s02e
