#include "s02e/semantics.hpp"

#include <cassert>

#include "s02e/errors.hpp"

namespace s02e {

namespace {

// Shared core for the closed-form route. Returns false as soon as the
// result is known to exceed `cap` bits; smash/boxplus widths are checked
// before any wide value is materialized.
bool eval_core(const TermPtr& t, const Env& env, std::size_t cap, Nat& out) {
  switch (t->kind) {
    case Term::Kind::Zero:
      out = 0;
      return true;
    case Term::Kind::Var:
      out = env.get(t->var);
      return bitlength(out) <= cap;
    case Term::Kind::Unary: {
      Nat a;
      if (!eval_core(t->a, env, cap, a)) return false;
      switch (t->uop) {
        case UnaryOp::Succ: out = a + 1; break;
        case UnaryOp::Half: out = shift_right(a, 1); break;
        case UnaryOp::Len: out = Nat(static_cast<unsigned long>(bitlength(a))); break;
        case UnaryOp::S0: out = shift_left(a, 1); break;
        case UnaryOp::S1: out = shift_left(a, 1) + 1; break;
        case UnaryOp::Parity: out = a % 2; break;
      }
      return bitlength(out) <= cap;
    }
    case Term::Kind::Binary: {
      Nat a, b;
      if (!eval_core(t->a, env, cap, a) || !eval_core(t->b, env, cap, b)) return false;
      const std::size_t la = bitlength(a), lb = bitlength(b);
      switch (t->bop) {
        case BinaryOp::Plus:
          out = a + b;
          break;
        case BinaryOp::Times:
          if (la > 0 && lb > 0 && la + lb - 1 > cap) return false;
          out = a * b;
          break;
        case BinaryOp::Smash: {
          // 2^(la*lb) has la*lb + 1 bits.
          if (lb != 0 && la > cap / lb) return false;
          const std::size_t k = la * lb;
          if (k + 1 > cap) return false;
          out = pow2(k);
          break;
        }
        case BinaryOp::BoxPlus:
          if (la > 0 && la + lb > cap) return false;
          out = shift_left(a, lb);
          break;
      }
      return bitlength(out) <= cap;
    }
    case Term::Kind::Cond: {
      // cond is a total ternary function; all three arguments have values.
      Nat sel, tv, ev;
      if (!eval_core(t->a, env, cap, sel) || !eval_core(t->b, env, cap, tv) ||
          !eval_core(t->c, env, cap, ev)) {
        return false;
      }
      out = (sel == 0) ? tv : ev;
      return true;
    }
  }
  return false;
}

}  // namespace

Nat eval_closed(const TermPtr& t, const Env& env, const EvalLimits& limits) {
  Nat out;
  if (!eval_core(t, env, limits.max_value_bits, out)) {
    throw ResourceError("eval_closed: intermediate value exceeds " +
                        std::to_string(limits.max_value_bits) + " bits");
  }
  return out;
}

std::optional<Nat> eval_closed_capped(const TermPtr& t, const Env& env, std::size_t max_value_bits) {
  Nat out;
  if (!eval_core(t, env, max_value_bits, out)) return std::nullopt;
  return out;
}

namespace {

// A normal form with its width (number of s0/s1 applications). Widths ride
// along so the step budget can track the widest numeral without re-walking
// chains.
struct Num {
  TermPtr term;
  std::size_t len = 0;
};

struct Rewriter {
  std::uint64_t steps = 0;
  std::size_t max_bits = 0;
  std::size_t size0 = 0;

  // Deciding a cond selector re-walks its run of zero digits one rule
  // application at a time, so honest evaluation is quadratic in the widest
  // numeral (e.g. len of a power of two), never worse.
  std::uint64_t budget() const { return 10ull * size0 * (max_bits + 1) * (max_bits + 2); }

  void step() {
    ++steps;
    if (steps > budget()) {
      throw RewriteDiverged("rewrite step budget exceeded (" + std::to_string(steps) +
                            " steps, budget " + std::to_string(budget()) + ")");
    }
  }

  Num note(Num n) {
    if (n.len > max_bits) max_bits = n.len;
    return n;
  }

  Num zero() { return Num{t_zero(), 0}; }
  Num one() { return note(Num{t_s1(t_zero()), 1}); }
  Num digit0(const Num& n) { return note(Num{t_s0(n.term), n.len + 1}); }
  Num digit1(const Num& n) { return note(Num{t_s1(n.term), n.len + 1}); }

  static bool is_zero(const Num& n) { return n.term->kind == Term::Kind::Zero; }
  static bool headed(const Num& n, UnaryOp op) {
    return n.term->kind == Term::Kind::Unary && n.term->uop == op;
  }
  static Num tail(const Num& n) { return Num{n.term->a, n.len - 1}; }

  // Strips the selector by the cond rules; true selects the else branch.
  bool cond_select(Num sel) {
    for (;;) {
      if (is_zero(sel)) {
        step();  // cond-zero
        return false;
      }
      if (headed(sel, UnaryOp::S0)) {
        step();  // cond recursion on s0
        sel = tail(sel);
        continue;
      }
      step();  // cond-else on s1
      return true;
    }
  }

  Num succ(const Num& a) {
    if (is_zero(a)) {
      step();  // S 0 = s1 0
      return one();
    }
    if (headed(a, UnaryOp::S0)) {
      step();  // S s0 x = s1 x
      return digit1(tail(a));
    }
    step();  // S s1 x = s0 (S x)
    return digit0(succ(tail(a)));
  }

  Num half(const Num& a) {
    step();  // all three half rules drop the outer digit
    if (is_zero(a)) return zero();
    return tail(a);
  }

  Num parity(const Num& a) {
    step();
    if (!is_zero(a) && headed(a, UnaryOp::S1)) return one();
    return zero();
  }

  Num length(const Num& a) {
    if (is_zero(a)) {
      step();  // len 0 = 0
      return zero();
    }
    if (headed(a, UnaryOp::S0)) {
      step();  // len s0 x = cond(x, 0, S (len x))
      if (!cond_select(tail(a))) return zero();
      return succ(length(tail(a)));
    }
    step();  // len s1 x = S (len x)
    return succ(length(tail(a)));
  }

  Num plus(const Num& a, const Num& b) {
    if (is_zero(b)) {
      step();  // x + 0 = x
      return a;
    }
    const bool low1 = headed(b, UnaryOp::S1);
    step();  // x + s_i y unfolds to a cond over parity(x)
    const bool odd = cond_select(parity(a));
    Num rec = plus(half(a), tail(b));
    if (!low1) return odd ? digit1(rec) : digit0(rec);
    return odd ? digit0(succ(rec)) : digit1(rec);
  }

  Num times(const Num& a, const Num& b) {
    if (is_zero(b)) {
      step();  // x * 0 = 0
      return zero();
    }
    if (headed(b, UnaryOp::S0)) {
      step();  // x * s0 y = s0 (x * y)
      return digit0(times(a, tail(b)));
    }
    step();  // x * s1 y = s0 (x * y) + x
    return plus(digit0(times(a, tail(b))), a);
  }

  Num boxplus(const Num& a, const Num& b) {
    if (is_zero(b)) {
      step();  // x bp 0 = x
      return a;
    }
    if (headed(b, UnaryOp::S0)) {
      step();  // x bp s0 y = cond(y, x, s0 (x bp y))
      if (!cond_select(tail(b))) return a;
      return digit0(boxplus(a, tail(b)));
    }
    step();  // x bp s1 y = s0 (x bp y)
    return digit0(boxplus(a, tail(b)));
  }

  Num smash(const Num& a, const Num& b) {
    if (is_zero(b)) {
      step();  // x # 0 = 1
      return one();
    }
    if (headed(b, UnaryOp::S0)) {
      step();  // x # s0 y = cond(y, 1, (x # y) bp x)
      if (!cond_select(tail(b))) return one();
      return boxplus(smash(a, tail(b)), a);
    }
    step();  // x # s1 y = (x # y) bp x
    return boxplus(smash(a, tail(b)), a);
  }

  Num eval(const TermPtr& t) {
    switch (t->kind) {
      case Term::Kind::Zero:
        return zero();
      case Term::Kind::Var:
        throw ContractViolation("rewrite engine saw an unsubstituted variable");
      case Term::Kind::Unary: {
        if (t->uop == UnaryOp::S0) return digit0(eval(t->a));
        if (t->uop == UnaryOp::S1) return digit1(eval(t->a));
        Num a = eval(t->a);
        switch (t->uop) {
          case UnaryOp::Succ: return succ(a);
          case UnaryOp::Half: return half(a);
          case UnaryOp::Len: return length(a);
          case UnaryOp::Parity: return parity(a);
          default: break;
        }
        break;
      }
      case Term::Kind::Binary: {
        Num a = eval(t->a);
        Num b = eval(t->b);
        switch (t->bop) {
          case BinaryOp::Plus: return plus(a, b);
          case BinaryOp::Times: return times(a, b);
          case BinaryOp::Smash: return smash(a, b);
          case BinaryOp::BoxPlus: return boxplus(a, b);
        }
        break;
      }
      case Term::Kind::Cond: {
        Num sel = eval(t->a);
        return cond_select(sel) ? eval(t->c) : eval(t->b);
      }
    }
    throw ContractViolation("rewrite engine: unreachable term shape");
  }
};

}  // namespace

Nat eval_rewrite(const TermPtr& t, const Env& env, RewriteStats* stats) {
  TermPtr closed = t;
  for (unsigned v : free_vars(t)) closed = substitute_term(closed, v, numeral(env.get(v)));
  Rewriter rw;
  rw.size0 = term_size(closed);
  // Numerals substituted for variables count toward the widest-numeral bound.
  for (unsigned v : free_vars(t)) {
    const std::size_t w = bitlength(env.get(v));
    if (w > rw.max_bits) rw.max_bits = w;
  }
  Num n = rw.eval(closed);
  if (stats) {
    stats->steps = rw.steps;
    stats->max_bits = rw.max_bits;
    stats->budget = rw.budget();
  }
  return numeral_value(n.term);
}

}  // namespace s02e
