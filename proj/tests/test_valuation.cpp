#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "s02e/codec.hpp"
#include "s02e/env.hpp"
#include "s02e/errors.hpp"
#include "s02e/parse.hpp"
#include "s02e/semantics.hpp"
#include "s02e/valuation.hpp"
#include "support/gen.hpp"
#include "support/oracles.hpp"

using namespace s02e;

namespace {

std::optional<Nat> vdn(const std::string& text, std::vector<Nat> values, unsigned long u) {
  return value_dn(parse_term(text), Env::from_values(std::move(values)), Nat(u));
}

}  // namespace

TEST_CASE("bounded values on worked examples") {
  // x1 # x2 at 2, 3 is 16: first seen at bound 16.
  CHECK_FALSE(vdn("(# x1 x2)", {Nat(2), Nat(3)}, 15).has_value());
  auto v = vdn("(# x1 x2)", {Nat(2), Nat(3)}, 16);
  REQUIRE(v.has_value());
  CHECK(*v == 16);

  // Doubling overshoots the bound even when the final half comes back down.
  CHECK_FALSE(vdn("(half (s0 x1))", {Nat(7)}, 13).has_value());
  CHECK(vdn("(half (s0 x1))", {Nat(7)}, 14) == Nat(7));

  // cond needs all three branches, not just the selected one.
  CHECK_FALSE(vdn("(cond 0 0 (# x1 x1))", {Nat(255)}, 100).has_value());
  CHECK(vdn("(cond 0 0 (s1 0))", {}, 100) == Nat(0));

  // Zero converges even at bound zero; one does not.
  CHECK(vdn("0", {}, 0) == Nat(0));
  CHECK_FALSE(vdn("(s1 0)", {}, 0).has_value());
  CHECK_FALSE(vdn("x1", {Nat(5)}, 4).has_value());  // a variable's value must fit too
}

TEST_CASE("a convergent bounded value matches the standard value") {
  gen::Rng rng(1001);
  int converged = 0;
  for (int i = 0; i < 3000; ++i) {
    TermPtr t = gen::rand_term(rng, 4, 2, 4);
    Env env = gen::rand_env(rng, 2, Nat(15));
    Nat u = uniform_nat(rng, Nat(64));
    auto v = value_dn(t, env, u);
    if (!v) continue;
    ++converged;
    CHECK(*v <= u);
    CHECK(*v == eval_closed(t, env));
  }
  CHECK(converged > 300);  // the distribution must actually exercise the positive case
}

TEST_CASE("bounded evaluation is monotone in the bound and matches the reference") {
  gen::Rng rng(1002);
  for (int i = 0; i < 5000; ++i) {
    TermPtr t = gen::rand_term(rng, 4, 2, 4);
    Env env = gen::rand_env(rng, 2, Nat(15));
    Nat u = uniform_nat(rng, Nat(64));
    auto engine = value_dn(t, env, u);
    auto naive = oracle::naive_value(t, env, u);
    CHECK(engine.has_value() == naive.has_value());
    if (engine && naive) CHECK(*engine == *naive);
    if (engine) {
      Nat bigger = u + 1 + uniform_nat(rng, Nat(64));
      auto again = value_dn(t, env, bigger);
      REQUIRE(again.has_value());
      CHECK(*again == *engine);
    }
  }
}

TEST_CASE("witness trees verify, and damaged ones do not") {
  gen::Rng rng(1003);
  int built = 0;
  while (built < 400) {
    TermPtr t = gen::rand_term(rng, 4, 2, 4);
    Env env = gen::rand_env(rng, 2, Nat(15));
    Nat u = 16 + uniform_nat(rng, Nat(48));
    auto w = build_valuation_tree(t, env, u);
    if (!w) continue;
    ++built;
    CHECK(verify_valuation_tree(*w, t, env, u));
    CHECK((*w)->value == eval_closed(t, env));

    // Bump the root value.
    ValNode forged = **w;
    forged.value += 1;
    CHECK_FALSE(verify_valuation_tree(std::make_shared<const ValNode>(forged), t, env, u));

    // Claim a different term.
    ValNode relabeled = **w;
    relabeled.term = t_succ(t);
    CHECK_FALSE(verify_valuation_tree(std::make_shared<const ValNode>(relabeled), t, env, u));

    // Drop a child, when there is one.
    if (!(*w)->children.empty()) {
      ValNode pruned = **w;
      pruned.children.pop_back();
      CHECK_FALSE(verify_valuation_tree(std::make_shared<const ValNode>(pruned), t, env, u));
    }

    // A wrong environment or a tighter bound invalidates the witness.
    if (!free_vars(t).empty()) {
      CHECK_FALSE(verify_valuation_tree(*w, t, Env::from_values({}), u));
    }
  }
}

TEST_CASE("a verifying witness pins the value even below the build bound") {
  // verify is pure: it re-checks every node against u, so the same tree
  // verifies at any bound at or above the largest node value.
  TermPtr t = parse_term("(+ x1 (s1 0))");
  Env env = Env::from_values({Nat(6)});
  auto w = build_valuation_tree(t, env, Nat(64));
  REQUIRE(w.has_value());
  CHECK(verify_valuation_tree(*w, t, env, Nat(7)));   // max node value is 7
  CHECK_FALSE(verify_valuation_tree(*w, t, env, Nat(6)));
}

TEST_CASE("witness codes stay within the declared size bound") {
  gen::Rng rng(1004);
  int built = 0;
  while (built < 300) {
    TermPtr t = gen::rand_term(rng, 4, 2, 4);
    Env env = gen::rand_env(rng, 2, Nat(15));
    Nat u = uniform_nat(rng, Nat(64));
    auto w = build_valuation_tree(t, env, u);
    if (!w) continue;
    ++built;
    CHECK(within_valuation_size_bound(encode_valuation_tree(*w), encode_term(t), u));
  }
}

TEST_CASE("the size exponent grows with the bound and the term code") {
  TermPtr t = parse_term("(+ x1 x2)");
  const Nat code = encode_term(t);
  Nat last = 0;
  for (unsigned long u : {0ul, 1ul, 7ul, 64ul, 100000ul}) {
    Nat e = valuation_size_exponent(code, Nat(u));
    CHECK(e >= last);
    last = e;
  }
  TermPtr bigger = parse_term("(+ (+ x1 x2) (* x1 x2))");
  CHECK(valuation_size_exponent(encode_term(bigger), Nat(8)) >
        valuation_size_exponent(code, Nat(8)));
}

TEST_CASE("materializing a size bound respects the resource guard") {
  const Nat code = encode_term(parse_term("(s1 0)"));
  const Nat b = size_bound(code, Nat(4));
  CHECK(b == pow2(static_cast<std::size_t>(valuation_size_exponent(code, Nat(4)).get_ui())) - 1);
  CHECK_THROWS_AS(size_bound(code, Nat(4), /*max_bits=*/8), ResourceError);
  CHECK_THROWS_AS(size_bound(Nat(3), Nat(4)), DecodeError);  // 3 codes no term
}

TEST_CASE("valuation witnesses round-trip through their codes") {
  gen::Rng rng(1005);
  int built = 0;
  while (built < 100) {
    TermPtr t = gen::rand_term(rng, 3, 2, 3);
    Env env = gen::rand_env(rng, 2, Nat(7));
    auto w = build_valuation_tree(t, env, Nat(64));
    if (!w) continue;
    ++built;
    // Two structurally equal witnesses code identically; a different
    // witness for a different bound context still codes injectively.
    auto w2 = build_valuation_tree(t, env, Nat(64));
    REQUIRE(w2.has_value());
    CHECK(encode_valuation_tree(*w) == encode_valuation_tree(*w2));
  }
}
