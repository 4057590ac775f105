#pragma once

// Independent reference implementations for the bounded semantics, kept
// deliberately naive: direct transcriptions of the definitions with no
// code shared with the engine beyond the syntax types. Property tests
// compare the engine against these.

#include <optional>

#include "s02e/env.hpp"
#include "s02e/errors.hpp"
#include "s02e/formula.hpp"
#include "s02e/nat.hpp"
#include "s02e/term.hpp"

namespace s02e::oracle {

// Bounded value of a term: every subterm occurrence (variables included,
// all three branches of cond) must evaluate to a value <= u. The smash
// result is width-checked before being materialized so huge values are
// rejected, not built.
inline std::optional<Nat> naive_value(const TermPtr& t, const Env& env, const Nat& u) {
  switch (t->kind) {
    case Term::Kind::Zero:
      return Nat(0);
    case Term::Kind::Var: {
      Nat v = env.get(t->var);
      if (v > u) return std::nullopt;
      return v;
    }
    case Term::Kind::Unary: {
      auto a = naive_value(t->a, env, u);
      if (!a) return std::nullopt;
      Nat v;
      switch (t->uop) {
        case UnaryOp::Succ: v = *a + 1; break;
        case UnaryOp::Half: v = *a / 2; break;
        case UnaryOp::Len: v = Nat(static_cast<unsigned long>(bitlength(*a))); break;
        case UnaryOp::S0: v = 2 * *a; break;
        case UnaryOp::S1: v = 2 * *a + 1; break;
        case UnaryOp::Parity: v = *a % 2; break;
      }
      if (v > u) return std::nullopt;
      return v;
    }
    case Term::Kind::Binary: {
      auto a = naive_value(t->a, env, u);
      auto b = naive_value(t->b, env, u);
      if (!a || !b) return std::nullopt;
      Nat v;
      switch (t->bop) {
        case BinaryOp::Plus: v = *a + *b; break;
        case BinaryOp::Times: v = *a * *b; break;
        case BinaryOp::Smash: {
          // 2^k has k+1 bits; wider than u means strictly greater than u.
          const std::size_t k = bitlength(*a) * bitlength(*b);
          if (k + 1 > bitlength(u)) return std::nullopt;
          v = pow2(k);
          break;
        }
        case BinaryOp::BoxPlus: v = shift_left(*a, bitlength(*b)); break;
      }
      if (v > u) return std::nullopt;
      return v;
    }
    case Term::Kind::Cond: {
      auto s = naive_value(t->a, env, u);
      auto x = naive_value(t->b, env, u);
      auto y = naive_value(t->c, env, u);
      if (!s || !x || !y) return std::nullopt;
      return *s == 0 ? *x : *y;
    }
  }
  throw ContractViolation("naive_value: unreachable");
}

// Quantifier-free bounded truth. Positive comparison atoms hold when both
// sides converge and the relation holds; negated comparisons when both
// sides converge and the relation fails; a convergence atom when its term
// converges; a negated convergence atom never holds.
inline bool naive_t0(const Nat& u, const FormulaPtr& f, const Env& env) {
  switch (f->kind) {
    case Formula::Kind::Atom: {
      if (f->pred == Pred::E) {
        if (f->neg) return false;
        return naive_value(f->t1, env, u).has_value();
      }
      auto a = naive_value(f->t1, env, u);
      auto b = naive_value(f->t2, env, u);
      if (!a || !b) return false;
      const bool holds = f->pred == Pred::Le ? (*a <= *b) : (*a == *b);
      return f->neg ? !holds : holds;
    }
    case Formula::Kind::And:
      return naive_t0(u, f->lhs, env) && naive_t0(u, f->rhs, env);
    case Formula::Kind::Or:
      return naive_t0(u, f->lhs, env) || naive_t0(u, f->rhs, env);
    default:
      throw ContractViolation("naive_t0: quantifier");
  }
}

// Bounded truth on 1-forms: the existential bound must converge and some
// witness up to it must satisfy the body; a sharply bounded universal's
// bound must converge and every instance up to it must hold. A witness for
// which the inner universal's bound diverges does not count.
inline bool naive_t(const Nat& u, const FormulaPtr& f, const Env& env) {
  switch (classify_form(f)) {
    case FormClass::QuantifierFree:
    case FormClass::EAtom:
      return naive_t0(u, f, env);
    case FormClass::SharplyBoundedAll: {
      auto m = naive_value(f->bound, env, u);
      if (!m) return false;
      for (Nat x = 0; x <= *m; ++x) {
        if (!naive_t0(u, f->body, env.with(f->var, x))) return false;
      }
      return true;
    }
    case FormClass::Pure1: {
      auto c = naive_value(f->bound, env, u);
      if (!c) return false;
      const FormulaPtr inner = f->body;
      for (Nat w = 0; w <= *c; ++w) {
        Env e1 = env.with(f->var, w);
        auto m = naive_value(inner->bound, e1, u);
        if (!m) continue;
        bool all = true;
        for (Nat x = 0; x <= *m && all; ++x) {
          all = naive_t0(u, inner->body, e1.with(inner->var, x));
        }
        if (all) return true;
      }
      return false;
    }
    case FormClass::NotOneForm:
      break;
  }
  throw ContractViolation("naive_t: not a 1-form");
}

}  // namespace s02e::oracle
