#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "s02e/codec.hpp"
#include "s02e/env.hpp"
#include "s02e/errors.hpp"
#include "s02e/parse.hpp"
#include "s02e/truth.hpp"
#include "support/gen.hpp"
#include "support/oracles.hpp"

using namespace s02e;

namespace {

bool T0(unsigned long u, const std::string& f, std::vector<Nat> values = {}) {
  return t0(Nat(u), parse_formula(f), Env::from_values(std::move(values)));
}

bool T(unsigned long u, const std::string& f, std::vector<Nat> values = {}) {
  return t(Nat(u), parse_formula(f), Env::from_values(std::move(values)));
}

}  // namespace

TEST_CASE("quantifier-free truth on worked examples") {
  CHECK(T0(8, "(E x1)", {Nat(5)}));
  CHECK_FALSE(T0(8, "(E x1)", {Nat(9)}));
  CHECK(T0(8, "(<= x1 x2)", {Nat(3), Nat(5)}));
  CHECK_FALSE(T0(8, "(<= x1 x2)", {Nat(5), Nat(3)}));
  CHECK(T0(8, "(not (<= x1 x2))", {Nat(5), Nat(3)}));
  CHECK(T0(8, "(= (+ x1 x1) (s0 x1))", {Nat(3)}));

  // Divergence defeats an atom and its negation alike.
  CHECK_FALSE(T0(8, "(= (# x1 x1) (# x1 x1))", {Nat(3)}));       // 16 > 8
  CHECK_FALSE(T0(8, "(not (= (# x1 x1) (# x1 x1)))", {Nat(3)}));
  CHECK(T0(16, "(= (# x1 x1) (# x1 x1))", {Nat(3)}));

  // A negated convergence atom never holds, even for a convergent term.
  CHECK_FALSE(T0(8, "(not (E 0))"));
  CHECK(T0(8, "(E 0)"));

  CHECK(T0(8, "(and (E x1) (<= 0 x1))", {Nat(2)}));
  CHECK_FALSE(T0(8, "(and (E x1) (not (<= 0 x1)))", {Nat(2)}));
  CHECK(T0(8, "(or (not (<= 0 x1)) (= x1 x1))", {Nat(2)}));
}

TEST_CASE("atomic decisions distinguish false from divergent") {
  Env env = Env::from_values({Nat(3)});
  auto conv_true = decide_atomic(Nat(8), parse_formula("(<= x1 x1)"), env);
  REQUIRE(conv_true.has_value());
  CHECK(*conv_true);
  auto conv_false = decide_atomic(Nat(8), parse_formula("(= x1 0)"), env);
  REQUIRE(conv_false.has_value());
  CHECK_FALSE(*conv_false);
  CHECK_FALSE(decide_atomic(Nat(8), parse_formula("(= (# x1 x1) 0)"), env).has_value());
  CHECK_THROWS_AS(decide_atomic(Nat(8), parse_formula("(and (E 0) (E 0))"), env),
                  ContractViolation);
}

TEST_CASE("quantifier-free truth matches the reference oracle") {
  gen::Rng rng(2101);
  for (int i = 0; i < 5000; ++i) {
    FormulaPtr f = gen::rand_qf(rng, 2, 2, 2);
    Env env = gen::rand_env(rng, 2, Nat(15));
    Nat u = uniform_nat(rng, Nat(32));
    CHECK(t0(u, f, env) == oracle::naive_t0(u, f, env));
  }
}

TEST_CASE("the nine defining clauses of quantifier-free truth") {
  gen::Rng rng(2102);
  for (int i = 0; i < 5000; ++i) {
    Env env = gen::rand_env(rng, 2, Nat(15));
    Nat u = uniform_nat(rng, Nat(32));
    TermPtr s = gen::rand_term(rng, 2, 2, 4);
    TermPtr w = gen::rand_term(rng, 2, 2, 4);
    auto vs = oracle::naive_value(s, env, u);
    auto vw = oracle::naive_value(w, env, u);

    // 1: a convergence atom holds exactly when the term converges.
    CHECK(t0(u, f_e(s), env) == vs.has_value());
    // 2: a negated convergence atom never holds.
    CHECK_FALSE(t0(u, f_neg(f_e(s)), env));
    // 3/4: an order atom holds when both sides converge and compare; its
    // negation when both converge and do not.
    CHECK(t0(u, f_le(s, w), env) == (vs && vw && *vs <= *vw));
    CHECK(t0(u, f_neg(f_le(s, w)), env) == (vs && vw && !(*vs <= *vw)));
    // 5/6: likewise for equations.
    CHECK(t0(u, f_eq(s, w), env) == (vs && vw && *vs == *vw));
    CHECK(t0(u, f_neg(f_eq(s, w)), env) == (vs && vw && *vs != *vw));

    FormulaPtr a = gen::rand_qf(rng, 1, 1, 2);
    FormulaPtr b = gen::rand_qf(rng, 1, 1, 2);
    // 7/8: conjunction and disjunction evaluate componentwise.
    CHECK(t0(u, f_and(a, b), env) == (t0(u, a, env) && t0(u, b, env)));
    CHECK(t0(u, f_or(a, b), env) == (t0(u, a, env) || t0(u, b, env)));
    // 9: an atom and its negation are never both true.
    FormulaPtr pos;
    switch (gen::below(rng, 3)) {
      case 0: pos = f_le(s, w); break;
      case 1: pos = f_eq(s, w); break;
      default: pos = f_e(s); break;
    }
    CHECK_FALSE((t0(u, pos, env) && t0(u, f_neg(pos), env)));
  }
}

TEST_CASE("excluded middle holds exactly for convergent atoms") {
  gen::Rng rng(2103);
  for (int i = 0; i < 2000; ++i) {
    Env env = gen::rand_env(rng, 2, Nat(15));
    Nat u = uniform_nat(rng, Nat(32));
    TermPtr s = gen::rand_term(rng, 2, 2, 4);
    TermPtr w = gen::rand_term(rng, 2, 2, 4);
    FormulaPtr a = gen::below(rng, 2) == 0 ? f_le(s, w) : f_eq(s, w);
    auto decided = decide_atomic(u, a, env);
    const bool pos = t0(u, a, env), neg = t0(u, f_neg(a), env);
    if (decided.has_value()) {
      CHECK(pos != neg);  // exactly one side holds
      CHECK(pos == *decided);
    } else {
      CHECK_FALSE(pos);
      CHECK_FALSE(neg);
    }
  }
}

TEST_CASE("bounded truth on 1-forms, worked examples") {
  // There is an x up to 2 such that every y up to |x| satisfies y <= x.
  CHECK(T(8, "(ex x1 (s0 (s1 0)) (all x2 (len x1) (<= x2 x1)))"));
  // No x up to 2 doubles to 5.
  CHECK_FALSE(T(8, "(ex x1 (s0 (s1 0)) (all x2 (len 0) (= (s0 x1) (s1 (s0 (s1 0))))))"));
  // Sharply bounded universal: every y with y <= |6| = 3 satisfies y <= 6.
  CHECK(T(8, "(all x1 (len (s0 (s1 (s1 0)))) (<= x1 (s0 (s1 (s1 0)))))"));
  CHECK_FALSE(T(8, "(all x1 (len (s0 (s1 (s1 0)))) (<= (s0 x1) x1))"));
  // A diverging existential bound makes the form false outright.
  CHECK_FALSE(T(8, "(ex x1 (# (s1 (s1 0)) (s1 (s1 0))) (all x2 (len 0) (= 0 0)))"));
  // The same bound within reach makes it true.
  CHECK(T(16, "(ex x1 (# (s1 (s1 0)) (s1 (s1 0))) (all x2 (len 0) (= 0 0)))"));
  CHECK(T(8, "(E (s1 (s1 0)))"));
  CHECK_FALSE(T(2, "(E (s1 (s1 0)))"));
}

TEST_CASE("bounded truth rejects formulas outside the checkable classes") {
  CHECK_THROWS_AS(T(8, "(not (E 0))"), ContractViolation);
  CHECK_THROWS_AS(T(8, "(and (E 0) (= 0 0))"), ContractViolation);
  CHECK_THROWS_AS(T(8, "(ex x1 0 (<= x1 0))"), ContractViolation);
}

TEST_CASE("bounded truth matches the reference oracle on 1-forms") {
  gen::Rng rng(2104);
  for (int i = 0; i < 2000; ++i) {
    FormulaPtr f = gen::rand_one_form(rng, 2);
    Env env = gen::rand_env(rng, 2, Nat(15));
    Nat u = uniform_nat(rng, Nat(32));
    CHECK(t(u, f, env) == oracle::naive_t(u, f, env));
  }
}

TEST_CASE("bounded truth is monotone in the bound on 1-forms") {
  gen::Rng rng(2105);
  for (int i = 0; i < 2000; ++i) {
    FormulaPtr f = gen::rand_one_form(rng, 2);
    Env env = gen::rand_env(rng, 2, Nat(15));
    Nat u = uniform_nat(rng, Nat(32));
    if (!t(u, f, env)) continue;
    Nat bigger = u + 1 + uniform_nat(rng, Nat(32));
    CHECK(t(bigger, f, env));
  }
}

TEST_CASE("an oversized witness range is refused, not searched") {
  FormulaPtr f = f_ex(1, numeral(pow2(21)),
                      f_all(2, t_len(t_var(1)), f_le(t_var(2), t_var(1))));
  CHECK_THROWS_AS(t(pow2(25), f, Env::from_values({})), ResourceError);
}

TEST_CASE("truth witnesses carry the verdict and respect their size bound") {
  gen::Rng rng(2106);
  for (int i = 0; i < 1000; ++i) {
    FormulaPtr f = gen::rand_qf(rng, 2, 2, 2);
    Env env = gen::rand_env(rng, 2, Nat(15));
    Nat u = uniform_nat(rng, Nat(32));
    TruthNodePtr w = build_truth_tree(f, env, u);
    REQUIRE(w);
    CHECK(w->eps == oracle::naive_t0(u, f, env));
    CHECK(within_truth_size_bound(encode_truth_tree(w), encode_formula(f), u));
  }
}
