#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace s02e {

// Minimal s-expression reader: atoms are maximal runs of non-whitespace,
// non-parenthesis bytes; `pos` is the byte offset for diagnostics.
struct SExpr {
  bool is_atom = false;
  std::string text;          // atoms only
  std::vector<SExpr> items;  // lists only
  std::size_t pos = 0;
};

// Reads exactly one s-expression; trailing non-whitespace is an error.
SExpr read_sexpr(std::string_view input);

}  // namespace s02e
