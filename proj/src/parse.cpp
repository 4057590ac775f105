#include "s02e/parse.hpp"

#include <stdexcept>

#include "s02e/errors.hpp"

namespace s02e {

namespace {

[[noreturn]] void fail(const SExpr& e, const std::string& msg) { throw ParseError(e.pos, msg); }

void expect_arity(const SExpr& e, std::size_t n, const char* what) {
  if (e.items.size() != n + 1) {
    fail(e, std::string(what) + " expects " + std::to_string(n) + " argument(s), got " +
                std::to_string(e.items.size() - 1));
  }
}

const SExpr& head_of(const SExpr& e) {
  if (e.items.empty()) fail(e, "empty list");
  if (!e.items[0].is_atom) fail(e.items[0], "expected an operator symbol");
  return e.items[0];
}

}  // namespace

unsigned variable_from_sexpr(const SExpr& e) {
  if (!e.is_atom || e.text.size() < 2 || e.text[0] != 'x') fail(e, "expected a variable x<k>");
  const std::string digits = e.text.substr(1);
  if (digits[0] == '0') fail(e, "variable indices start at 1 and have no leading zeros");
  unsigned long idx = 0;
  for (char ch : digits) {
    if (ch < '0' || ch > '9') fail(e, "expected a variable x<k>");
    idx = idx * 10 + static_cast<unsigned long>(ch - '0');
    if (idx > 1'000'000'000UL) fail(e, "variable index out of range");
  }
  return static_cast<unsigned>(idx);
}

TermPtr term_from_sexpr(const SExpr& e) {
  if (e.is_atom) {
    if (e.text == "0") return t_zero();
    if (!e.text.empty() && e.text[0] == 'x') return t_var(variable_from_sexpr(e));
    fail(e, "unknown term atom '" + e.text + "'");
  }
  const SExpr& head = head_of(e);
  const std::string& op = head.text;
  auto arg = [&](std::size_t i) { return term_from_sexpr(e.items[i]); };
  if (op == "S" || op == "half" || op == "len" || op == "s0" || op == "s1" || op == "parity") {
    expect_arity(e, 1, op.c_str());
    UnaryOp u = op == "S"      ? UnaryOp::Succ
                : op == "half" ? UnaryOp::Half
                : op == "len"  ? UnaryOp::Len
                : op == "s0"   ? UnaryOp::S0
                : op == "s1"   ? UnaryOp::S1
                               : UnaryOp::Parity;
    return t_unary(u, arg(1));
  }
  if (op == "+" || op == "*" || op == "#" || op == "bp") {
    expect_arity(e, 2, op.c_str());
    BinaryOp b = op == "+"   ? BinaryOp::Plus
                 : op == "*" ? BinaryOp::Times
                 : op == "#" ? BinaryOp::Smash
                             : BinaryOp::BoxPlus;
    return t_binary(b, arg(1), arg(2));
  }
  if (op == "cond") {
    expect_arity(e, 3, "cond");
    return t_cond(arg(1), arg(2), arg(3));
  }
  fail(head, "unknown term operator '" + op + "'");
}

FormulaPtr formula_from_sexpr(const SExpr& e) {
  if (e.is_atom) fail(e, "expected a formula");
  const SExpr& head = head_of(e);
  const std::string& op = head.text;
  if (op == "<=" || op == "=") {
    expect_arity(e, 2, op.c_str());
    TermPtr l = term_from_sexpr(e.items[1]);
    TermPtr r = term_from_sexpr(e.items[2]);
    return op == "<=" ? f_le(std::move(l), std::move(r)) : f_eq(std::move(l), std::move(r));
  }
  if (op == "E") {
    expect_arity(e, 1, "E");
    return f_e(term_from_sexpr(e.items[1]));
  }
  if (op == "not") {
    expect_arity(e, 1, "not");
    FormulaPtr inner = formula_from_sexpr(e.items[1]);
    if (inner->kind != Formula::Kind::Atom || inner->neg) {
      fail(e.items[1], "negation applies to positive atoms only");
    }
    return f_neg(inner);
  }
  if (op == "and" || op == "or") {
    expect_arity(e, 2, op.c_str());
    FormulaPtr l = formula_from_sexpr(e.items[1]);
    FormulaPtr r = formula_from_sexpr(e.items[2]);
    return op == "and" ? f_and(std::move(l), std::move(r)) : f_or(std::move(l), std::move(r));
  }
  if (op == "all" || op == "ex") {
    expect_arity(e, 3, op.c_str());
    unsigned var = variable_from_sexpr(e.items[1]);
    TermPtr bound = term_from_sexpr(e.items[2]);
    if (op == "all" && !sharply_bounded(bound)) {
      fail(e.items[2], "universal bound must be sharply bounded (len ...)");
    }
    FormulaPtr body = formula_from_sexpr(e.items[3]);
    return op == "all" ? f_all(var, std::move(bound), std::move(body))
                       : f_ex(var, std::move(bound), std::move(body));
  }
  fail(head, "unknown formula operator '" + op + "'");
}

Sequent sequent_from_sexpr(const SExpr& e) {
  if (e.is_atom || e.items.size() != 3) fail(e, "expected (seq (ants ...) (sucs ...))");
  if (!e.items[0].is_atom || e.items[0].text != "seq") fail(e.items[0], "expected 'seq'");
  const auto side = [](const SExpr& s, const char* tag) {
    if (s.is_atom || s.items.empty() || !s.items[0].is_atom || s.items[0].text != tag) {
      throw ParseError(s.pos, std::string("expected (") + tag + " ...)");
    }
    std::vector<FormulaPtr> out;
    for (std::size_t i = 1; i < s.items.size(); ++i) out.push_back(formula_from_sexpr(s.items[i]));
    return out;
  };
  Sequent s;
  s.ants = side(e.items[1], "ants");
  s.sucs = side(e.items[2], "sucs");
  return s;
}

TermPtr parse_term(std::string_view input) { return term_from_sexpr(read_sexpr(input)); }
FormulaPtr parse_formula(std::string_view input) { return formula_from_sexpr(read_sexpr(input)); }
Sequent parse_sequent(std::string_view input) { return sequent_from_sexpr(read_sexpr(input)); }

}  // namespace s02e
