#include "s02e/sexpr.hpp"

#include "s02e/errors.hpp"

namespace s02e {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }
bool is_delim(char c) { return c == '(' || c == ')' || is_space(c); }

struct Cursor {
  std::string_view in;
  std::size_t pos = 0;

  void skip_space() {
    while (pos < in.size() && is_space(in[pos])) ++pos;
  }
  bool done() const { return pos >= in.size(); }
};

SExpr read_one(Cursor& c) {
  c.skip_space();
  if (c.done()) throw ParseError(c.pos, "unexpected end of input");
  SExpr e;
  e.pos = c.pos;
  if (c.in[c.pos] == '(') {
    ++c.pos;
    for (;;) {
      c.skip_space();
      if (c.done()) throw ParseError(c.pos, "unterminated list");
      if (c.in[c.pos] == ')') {
        ++c.pos;
        return e;
      }
      e.items.push_back(read_one(c));
    }
  }
  if (c.in[c.pos] == ')') throw ParseError(c.pos, "unmatched ')'");
  e.is_atom = true;
  std::size_t start = c.pos;
  while (c.pos < c.in.size() && !is_delim(c.in[c.pos])) ++c.pos;
  e.text.assign(c.in.substr(start, c.pos - start));
  return e;
}

}  // namespace

SExpr read_sexpr(std::string_view input) {
  Cursor c{input};
  SExpr e = read_one(c);
  c.skip_space();
  if (!c.done()) throw ParseError(c.pos, "trailing input after expression");
  return e;
}

}  // namespace s02e
