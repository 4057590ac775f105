#include "s02e/term.hpp"

#include <sstream>
#include <stdexcept>

namespace s02e {

TermPtr t_zero() {
  static const TermPtr zero = [] {
    auto t = std::make_shared<Term>();
    t->kind = Term::Kind::Zero;
    return t;
  }();
  return zero;
}

TermPtr t_var(unsigned index) {
  if (index == 0) throw std::invalid_argument("variable indices start at 1");
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::Var;
  t->var = index;
  return t;
}

TermPtr t_unary(UnaryOp op, TermPtr arg) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::Unary;
  t->uop = op;
  t->a = std::move(arg);
  return t;
}

TermPtr t_binary(BinaryOp op, TermPtr lhs, TermPtr rhs) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::Binary;
  t->bop = op;
  t->a = std::move(lhs);
  t->b = std::move(rhs);
  return t;
}

TermPtr t_cond(TermPtr sel, TermPtr then_t, TermPtr else_t) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::Cond;
  t->a = std::move(sel);
  t->b = std::move(then_t);
  t->c = std::move(else_t);
  return t;
}

TermPtr numeral(const Nat& n) {
  if (n == 0) return t_zero();
  // Build from the top bit inward so the low bit ends up outermost.
  TermPtr acc = t_zero();
  for (std::size_t i = bitlength(n); i-- > 0;) {
    acc = test_bit(n, i) ? t_s1(std::move(acc)) : t_s0(std::move(acc));
  }
  return acc;
}

bool term_equal(const TermPtr& s, const TermPtr& t) {
  if (s.get() == t.get()) return true;
  if (!s || !t) return false;
  if (s->kind != t->kind) return false;
  switch (s->kind) {
    case Term::Kind::Zero:
      return true;
    case Term::Kind::Var:
      return s->var == t->var;
    case Term::Kind::Unary:
      return s->uop == t->uop && term_equal(s->a, t->a);
    case Term::Kind::Binary:
      return s->bop == t->bop && term_equal(s->a, t->a) && term_equal(s->b, t->b);
    case Term::Kind::Cond:
      return term_equal(s->a, t->a) && term_equal(s->b, t->b) && term_equal(s->c, t->c);
  }
  return false;
}

void collect_free_vars(const TermPtr& t, std::set<unsigned>& out) {
  switch (t->kind) {
    case Term::Kind::Zero:
      return;
    case Term::Kind::Var:
      out.insert(t->var);
      return;
    case Term::Kind::Unary:
      collect_free_vars(t->a, out);
      return;
    case Term::Kind::Binary:
      collect_free_vars(t->a, out);
      collect_free_vars(t->b, out);
      return;
    case Term::Kind::Cond:
      collect_free_vars(t->a, out);
      collect_free_vars(t->b, out);
      collect_free_vars(t->c, out);
      return;
  }
}

std::set<unsigned> free_vars(const TermPtr& t) {
  std::set<unsigned> out;
  collect_free_vars(t, out);
  return out;
}

bool contains_var(const TermPtr& t, unsigned index) {
  switch (t->kind) {
    case Term::Kind::Zero:
      return false;
    case Term::Kind::Var:
      return t->var == index;
    case Term::Kind::Unary:
      return contains_var(t->a, index);
    case Term::Kind::Binary:
      return contains_var(t->a, index) || contains_var(t->b, index);
    case Term::Kind::Cond:
      return contains_var(t->a, index) || contains_var(t->b, index) || contains_var(t->c, index);
  }
  return false;
}

std::size_t term_size(const TermPtr& t) {
  switch (t->kind) {
    case Term::Kind::Zero:
    case Term::Kind::Var:
      return 1;
    case Term::Kind::Unary:
      return 1 + term_size(t->a);
    case Term::Kind::Binary:
      return 1 + term_size(t->a) + term_size(t->b);
    case Term::Kind::Cond:
      return 1 + term_size(t->a) + term_size(t->b) + term_size(t->c);
  }
  return 0;
}

bool is_numeral(const TermPtr& t) {
  const Term* p = t.get();
  while (p->kind == Term::Kind::Unary && (p->uop == UnaryOp::S0 || p->uop == UnaryOp::S1)) {
    p = p->a.get();
  }
  return p->kind == Term::Kind::Zero;
}

Nat numeral_value(const TermPtr& t) {
  // Iterative read: collect digits outermost-in, then fold from the top.
  std::vector<bool> digits;  // outermost (low bit) first
  const Term* p = t.get();
  while (p->kind == Term::Kind::Unary && (p->uop == UnaryOp::S0 || p->uop == UnaryOp::S1)) {
    digits.push_back(p->uop == UnaryOp::S1);
    p = p->a.get();
  }
  if (p->kind != Term::Kind::Zero) throw std::invalid_argument("not a numeral");
  Nat v = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    v = shift_left(v, 1);
    if (*it) v += 1;
  }
  return v;
}

TermPtr substitute_term(const TermPtr& t, unsigned index, const TermPtr& repl) {
  switch (t->kind) {
    case Term::Kind::Zero:
      return t;
    case Term::Kind::Var:
      return t->var == index ? repl : t;
    case Term::Kind::Unary: {
      TermPtr a = substitute_term(t->a, index, repl);
      return a.get() == t->a.get() ? t : t_unary(t->uop, std::move(a));
    }
    case Term::Kind::Binary: {
      TermPtr a = substitute_term(t->a, index, repl);
      TermPtr b = substitute_term(t->b, index, repl);
      return (a.get() == t->a.get() && b.get() == t->b.get()) ? t : t_binary(t->bop, std::move(a), std::move(b));
    }
    case Term::Kind::Cond: {
      TermPtr a = substitute_term(t->a, index, repl);
      TermPtr b = substitute_term(t->b, index, repl);
      TermPtr c = substitute_term(t->c, index, repl);
      return (a.get() == t->a.get() && b.get() == t->b.get() && c.get() == t->c.get())
                 ? t
                 : t_cond(std::move(a), std::move(b), std::move(c));
    }
  }
  return t;
}

bool sharply_bounded(const TermPtr& t) {
  return t->kind == Term::Kind::Unary && t->uop == UnaryOp::Len;
}

namespace {

const char* unary_name(UnaryOp op) {
  switch (op) {
    case UnaryOp::Succ: return "S";
    case UnaryOp::Half: return "half";
    case UnaryOp::Len: return "len";
    case UnaryOp::S0: return "s0";
    case UnaryOp::S1: return "s1";
    case UnaryOp::Parity: return "parity";
  }
  return "?";
}

const char* binary_name(BinaryOp op) {
  switch (op) {
    case BinaryOp::Plus: return "+";
    case BinaryOp::Times: return "*";
    case BinaryOp::Smash: return "#";
    case BinaryOp::BoxPlus: return "bp";
  }
  return "?";
}

void print_term_rec(const TermPtr& t, std::ostringstream& os) {
  switch (t->kind) {
    case Term::Kind::Zero:
      os << "0";
      return;
    case Term::Kind::Var:
      os << "x" << t->var;
      return;
    case Term::Kind::Unary:
      os << "(" << unary_name(t->uop) << " ";
      print_term_rec(t->a, os);
      os << ")";
      return;
    case Term::Kind::Binary:
      os << "(" << binary_name(t->bop) << " ";
      print_term_rec(t->a, os);
      os << " ";
      print_term_rec(t->b, os);
      os << ")";
      return;
    case Term::Kind::Cond:
      os << "(cond ";
      print_term_rec(t->a, os);
      os << " ";
      print_term_rec(t->b, os);
      os << " ";
      print_term_rec(t->c, os);
      os << ")";
      return;
  }
}

}  // namespace

std::string print_term(const TermPtr& t) {
  std::ostringstream os;
  print_term_rec(t, os);
  return os.str();
}

}  // namespace s02e
