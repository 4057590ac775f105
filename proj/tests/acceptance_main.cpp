// Acceptance suite: one line per criterion, PASS/FAIL, nonzero exit if any
// criterion fails. Each criterion is self-contained and seeded, so a FAIL
// line reproduces by rerunning this binary.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "s02e/corpus.hpp"
#include "s02e/env.hpp"
#include "s02e/errors.hpp"
#include "s02e/fuzz.hpp"
#include "s02e/parse.hpp"
#include "s02e/proof.hpp"
#include "s02e/semantics.hpp"
#include "s02e/soundness.hpp"
#include "s02e/truth.hpp"
#include "s02e/valuation.hpp"
#include "support/gen.hpp"
#include "support/oracles.hpp"

using namespace s02e;

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// ---- criterion 1: the two evaluation routes agree in bulk -----------------

std::string criterion_oracle_agreement() {
  const auto start = std::chrono::steady_clock::now();
  gen::Rng rng(10001);
  int checked = 0;
  long skipped = 0;
  while (checked < 10000) {
    if (skipped > 100000) return "skip rate out of control: " + std::to_string(skipped);
    TermPtr t = gen::rand_term(rng, 6, 3, 10);
    Env env = gen::rand_env(rng, 3, Nat(1023));
    auto v = eval_closed_capped(t, env, 1024);
    if (!v) {
      ++skipped;
      continue;  // value beyond 1024 bits: outside the measured distribution
    }
    const Nat r = eval_rewrite(t, env);
    if (r != *v) {
      return "evaluators disagree on " + print_term(t) + " under " + env.to_string() + ": " +
             v->get_str() + " vs " + r.get_str();
    }
    ++checked;
  }
  const double secs = seconds_since(start);
  if (secs >= 60.0) {
    std::ostringstream ss;
    ss << "10000 agreements took " << secs << "s (budget 60s)";
    return ss.str();
  }
  return "";
}

// ---- criterion 2: defining equations, exhaustively below 64 ---------------

std::string criterion_defining_equations() {
  Env empty = Env::from_values({});
  for (unsigned long n = 0; n < 64; ++n) {
    const Nat N(n);
    if (eval_rewrite(t_succ(numeral(N)), empty) != N + 1) return "succ fails at " + N.get_str();
    if (eval_rewrite(t_half(numeral(N)), empty) != N / 2) return "half fails at " + N.get_str();
    if (eval_rewrite(t_len(numeral(N)), empty) != Nat(static_cast<unsigned long>(bitlength(N))))
      return "len fails at " + N.get_str();
    if (eval_rewrite(t_s0(numeral(N)), empty) != 2 * N) return "s0 fails at " + N.get_str();
    if (eval_rewrite(t_s1(numeral(N)), empty) != 2 * N + 1) return "s1 fails at " + N.get_str();
    if (eval_rewrite(t_parity(numeral(N)), empty) != N % 2)
      return "parity fails at " + N.get_str();
    for (unsigned long m = 0; m < 64; ++m) {
      const Nat M(m);
      const std::string at = " at " + N.get_str() + ", " + M.get_str();
      if (eval_rewrite(t_plus(numeral(N), numeral(M)), empty) != N + M) return "plus fails" + at;
      if (eval_rewrite(t_times(numeral(N), numeral(M)), empty) != N * M) return "times fails" + at;
      if (eval_rewrite(t_smash(numeral(N), numeral(M)), empty) !=
          pow2(bitlength(N) * bitlength(M)))
        return "smash fails" + at;
      if (eval_rewrite(t_boxplus(numeral(N), numeral(M)), empty) != shift_left(N, bitlength(M)))
        return "boxplus fails" + at;
      if (eval_rewrite(t_cond(numeral(N), numeral(M), t_succ(numeral(M))), empty) !=
          (n == 0 ? M : M + 1))
        return "cond fails" + at;
    }
  }
  return "";
}

// ---- criterion 3: bounded evaluation behaves like the reference -----------

std::string criterion_bounded_values() {
  gen::Rng rng(30003);
  for (int i = 0; i < 5000; ++i) {
    TermPtr t = gen::rand_term(rng, 4, 2, 4);
    Env env = gen::rand_env(rng, 2, Nat(15));
    Nat u = uniform_nat(rng, Nat(64));
    auto engine = value_dn(t, env, u);
    auto naive = oracle::naive_value(t, env, u);
    const std::string tag = print_term(t) + " under " + env.to_string() + " at u=" + u.get_str();
    if (engine.has_value() != naive.has_value()) return "convergence differs for " + tag;
    if (engine) {
      if (*engine != *naive) return "values differ for " + tag;
      if (*engine > u) return "value above the bound for " + tag;
      if (*engine != eval_closed(t, env)) return "bounded value is not the standard value: " + tag;
      auto again = value_dn(t, env, u + 1 + uniform_nat(rng, Nat(64)));
      if (!again || *again != *engine) return "not monotone in the bound: " + tag;
      auto w = build_valuation_tree(t, env, u);
      if (!w) return "no witness tree despite convergence: " + tag;
      if (!verify_valuation_tree(*w, t, env, u)) return "witness fails verification: " + tag;
      if (!within_valuation_size_bound(encode_valuation_tree(*w), encode_term(t), u))
        return "witness outgrows its size bound: " + tag;
    }
  }
  return "";
}

// ---- criterion 4: the truth clauses, excluded middle, monotonicity --------

std::string criterion_truth_clauses() {
  gen::Rng rng(40004);
  for (int i = 0; i < 5000; ++i) {
    Env env = gen::rand_env(rng, 2, Nat(15));
    Nat u = uniform_nat(rng, Nat(32));
    TermPtr s = gen::rand_term(rng, 2, 2, 4);
    TermPtr w = gen::rand_term(rng, 2, 2, 4);
    auto vs = oracle::naive_value(s, env, u);
    auto vw = oracle::naive_value(w, env, u);
    if (t0(u, f_e(s), env) != vs.has_value()) return "clause 1 (convergence atom) fails";
    if (t0(u, f_neg(f_e(s)), env)) return "clause 2 (negated convergence atom) fails";
    if (t0(u, f_le(s, w), env) != (vs && vw && *vs <= *vw)) return "clause 3 (order) fails";
    if (t0(u, f_neg(f_le(s, w)), env) != (vs && vw && !(*vs <= *vw)))
      return "clause 4 (negated order) fails";
    if (t0(u, f_eq(s, w), env) != (vs && vw && *vs == *vw)) return "clause 5 (equation) fails";
    if (t0(u, f_neg(f_eq(s, w)), env) != (vs && vw && *vs != *vw))
      return "clause 6 (negated equation) fails";
    FormulaPtr a = gen::rand_qf(rng, 1, 1, 2);
    FormulaPtr b = gen::rand_qf(rng, 1, 1, 2);
    if (t0(u, f_and(a, b), env) != (t0(u, a, env) && t0(u, b, env)))
      return "clause 7 (conjunction) fails";
    if (t0(u, f_or(a, b), env) != (t0(u, a, env) || t0(u, b, env)))
      return "clause 8 (disjunction) fails";
    FormulaPtr pos;
    switch (gen::below(rng, 3)) {
      case 0: pos = f_le(s, w); break;
      case 1: pos = f_eq(s, w); break;
      default: pos = f_e(s); break;
    }
    if (t0(u, pos, env) && t0(u, f_neg(pos), env)) return "clause 9 (consistency) fails";
    FormulaPtr qf = gen::rand_qf(rng, 2, 2, 2);
    if (t0(u, qf, env) != oracle::naive_t0(u, qf, env))
      return "quantifier-free truth disagrees with the reference on " + print_formula(qf);
  }
  for (int i = 0; i < 2000; ++i) {
    Env env = gen::rand_env(rng, 2, Nat(15));
    Nat u = uniform_nat(rng, Nat(32));
    TermPtr s = gen::rand_term(rng, 2, 2, 4);
    TermPtr w = gen::rand_term(rng, 2, 2, 4);
    FormulaPtr a = gen::below(rng, 2) == 0 ? f_le(s, w) : f_eq(s, w);
    auto decided = decide_atomic(u, a, env);
    const bool pos = t0(u, a, env), neg = t0(u, f_neg(a), env);
    if (decided.has_value()) {
      if (pos == neg) return "excluded middle fails on a convergent atom: " + print_formula(a);
      if (pos != *decided) return "truth disagrees with the atomic decision";
    } else if (pos || neg) {
      return "a divergent atom decided: " + print_formula(a);
    }
  }
  for (int i = 0; i < 2000; ++i) {
    FormulaPtr f = gen::rand_one_form(rng, 2);
    Env env = gen::rand_env(rng, 2, Nat(15));
    Nat u = uniform_nat(rng, Nat(32));
    const bool at_u = t(u, f, env);
    if (at_u != oracle::naive_t(u, f, env))
      return "truth disagrees with the reference on " + print_formula(f);
    if (at_u && !t(u + 1 + uniform_nat(rng, Nat(32)), f, env))
      return "truth is not monotone on " + print_formula(f);
  }
  return "";
}

// ---- criterion 5: every axiom schema is sound, exhaustively at u = 8 ------

bool one_formed(const Sequent& s) {
  for (const auto* side : {&s.ants, &s.sucs}) {
    for (const FormulaPtr& f : *side) {
      if (classify_form(f) == FormClass::NotOneForm) return false;
    }
  }
  return true;
}

// A pattern carrying a negated convergence atom can never appear in a checked
// proof (the 1-form discipline bars it), but it is still sound: a negated
// convergence atom is never true, so the sequent holds vacuously. Confirms
// that under every assignment of 0..u to the free variables.
std::string vacuously_sound(const Sequent& s, const Nat& u) {
  const FormulaPtr* neg_e = nullptr;
  for (const FormulaPtr& f : s.ants) {
    if (f->kind == Formula::Kind::Atom && f->neg && f->pred == Pred::E) {
      neg_e = &f;
      break;
    }
  }
  if (neg_e == nullptr) return "not one-formed yet lacks a negated convergence antecedent";
  unsigned maxvar = 0;
  for (unsigned v : free_vars(s)) maxvar = std::max(maxvar, v);
  const unsigned long lim = u.get_ui();
  std::vector<unsigned long> vals(maxvar, 0);
  while (true) {
    Env env = Env::from_values(std::vector<Nat>(vals.begin(), vals.end()));
    if (t0(u, *neg_e, env)) {
      return "negated convergence antecedent " + print_formula(*neg_e) + " came out true";
    }
    std::size_t i = 0;
    for (; i < vals.size(); ++i) {
      if (vals[i] < lim) {
        ++vals[i];
        break;
      }
      vals[i] = 0;
    }
    if (i == vals.size()) break;
  }
  return "";
}

std::string criterion_axioms_sound() {
  const auto start = std::chrono::steady_clock::now();
  SoundnessOptions opts;
  opts.u = 8;
  for (const std::string& name : axiom_names()) {
    for (const Sequent& pattern : axiom_patterns(name)) {
      if (free_vars(pattern).size() > 3) {
        return "schema " + name + " mentions more than three variables";
      }
      if (!one_formed(pattern)) {
        const std::string why = vacuously_sound(pattern, Nat(8));
        if (!why.empty()) return "schema " + name + ": " + why;
        continue;
      }
      ProofNodePtr p = make_node(RuleTag::Axiom, pattern, {}, name);
      const CheckResult r = check_proof(p);
      if (!r.ok) return "schema " + name + " rejected: " + r.message;
      const SoundnessReport rep = check_proof_soundness(p, opts);
      if (rep.sampled_any) return "schema " + name + " did not enumerate";
      if (!rep.ok) {
        std::string detail = "schema " + name + " has a counterexample";
        for (const NodeOutcome& n : rep.nodes) {
          if (n.counterexample) {
            detail += " at uPrime=" + n.counterexample->uPrime.get_str() + " with";
            for (const auto& [var, val] : n.counterexample->rho) {
              detail += " x" + std::to_string(var) + "=" + val.get_str();
            }
          }
        }
        return detail;
      }
    }
  }
  const double secs = seconds_since(start);
  if (secs >= 300.0) {
    std::ostringstream ss;
    ss << "schema audit took " << secs << "s (budget 300s)";
    return ss.str();
  }
  return "";
}

// ---- criterion 6: every rule's minimal proof is sound at u = 8 ------------

std::string criterion_rules_sound() {
  SoundnessOptions opts;
  opts.u = 8;
  int audited = 0;
  for (const CorpusEntry& e : build_corpus()) {
    if (e.kind != "rule" || e.expect != "accept") continue;
    ProofNodePtr p = parse_proof(e.text);
    const CheckResult r = check_proof(p);
    if (!r.ok) return e.file + " rejected: " + r.message;
    const SoundnessReport rep = check_proof_soundness(p, opts);
    if (rep.sampled_any) return e.file + " did not enumerate";
    if (!rep.ok) return e.file + " has a soundness counterexample";
    ++audited;
  }
  if (audited != 21) {
    return "expected one accepted proof per rule (21), audited " + std::to_string(audited);
  }
  return "";
}

// ---- criterion 7: budget laws on the corpus and on generated proofs -------

std::string check_budget_laws(const ProofNodePtr& p, gen::Rng& rng, const std::string& tag) {
  const auto meta = proof_meta(p);
  std::map<std::string, Nat> by_path;
  for (const NodeMeta& m : meta) by_path.emplace(m.path, m.rCode);
  for (const NodeMeta& m : meta) {
    if (m.path.empty()) continue;
    const auto dot = m.path.rfind('.');
    const std::string parent = dot == std::string::npos ? std::string() : m.path.substr(0, dot);
    const Nat &r = by_path.at(parent), &ri = m.rCode;
    for (const Nat& u : {Nat(0), Nat(1), Nat(8), Nat(255), Nat(pow2(bitlength(r)) + 7),
                         uniform_nat(rng, pow2(70))}) {
      if (budget_sub(u, r) > budget_sub(u, ri)) {
        return "remaining budget grows toward the root in " + tag;
      }
    }
    for (const Nat& uPrime : {Nat(0), Nat(1), Nat(9), Nat(1000)}) {
      if (budget_concat(uPrime, ri) > budget_concat(uPrime, r)) {
        return "granted bound shrinks toward the root in " + tag;
      }
    }
  }
  for (const NodeMeta& m : meta) {
    if (m.rule != RuleTag::Cut) continue;
    const Nat& r = m.rCode;
    const Nat& r1 = by_path.at(m.path.empty() ? "0" : m.path + ".0");
    const Nat& r2 = by_path.at(m.path.empty() ? "1" : m.path + ".1");
    for (unsigned long scale : {1ul, 3ul, 17ul}) {
      const Nat u = scale * pow2(bitlength(r));
      const Nat uMax = budget_sub(u, r);
      for (Nat uPrime = 0; uPrime <= uMax; ++uPrime) {
        if (budget_concat(uPrime, r1) > budget_sub(u, r2)) {
          return "cut chain law fails at u=" + u.get_str() + " in " + tag;
        }
      }
    }
  }
  return "";
}

std::string criterion_budget_laws() {
  gen::Rng rng(70007);
  for (const CorpusEntry& e : build_corpus()) {
    if (e.expect != "accept") continue;
    if (auto msg = check_budget_laws(parse_proof(e.text), rng, e.file); !msg.empty()) return msg;
  }
  std::mt19937_64 gen_rng(70008);
  for (int i = 0; i < 500; ++i) {
    ProofNodePtr p = generate_proof(gen_rng, i % 3 == 2);
    if (auto msg = check_budget_laws(p, rng, "generated proof " + std::to_string(i));
        !msg.empty()) {
      return msg;
    }
  }
  return "";
}

// ---- criterion 8: seeded fuzzing keeps the kernel invariants --------------

std::string criterion_fuzz() {
  FuzzOptions opts;
  opts.count = 500;
  opts.seed = 80008;
  const FuzzReport r = run_fuzz(opts);
  if (r.attempted != 500) return "expected 500 rounds";
  if (r.accepted == 0 || r.rejected == 0) return "degenerate verdict distribution";
  if (!fuzz_clean(r)) {
    std::string msg = "invariant violations:";
    for (const std::string& note : r.notes) msg += " [" + note + "]";
    return msg;
  }
  return "";
}

// ---- criterion 9: negative controls land on the advertised diagnostics ----

std::string criterion_negative_controls() {
  int rejected = 0;
  for (const CorpusEntry& e : build_corpus()) {
    if (e.expect != "reject") continue;
    const CheckResult r = check_proof(parse_proof(e.text));
    if (r.ok) return e.file + " was accepted";
    if (check_error_category_name(r.category) != e.category) {
      return e.file + ": expected " + e.category + ", got " +
             check_error_category_name(r.category);
    }
    ++rejected;
  }
  if (rejected < 50) return "too few negative controls: " + std::to_string(rejected);

  // A forged sequent claiming 0 = 1 must fail the per-node soundness check.
  ProofNodePtr forged =
      parse_proof("(proof axiom:e-zero (concl (seq (ants) (sucs (= 0 (s1 0))))) (prems))");
  if (check_node_soundness(Nat(8), forged->concl, encode_proof(forged), Nat(0),
                           Env::from_values({}))) {
    return "the forged sequent (=> 0 = s1 0) passed the per-node check";
  }
  return "";
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* label;
    std::function<std::string()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "evaluator agreement on 10000 generated terms", criterion_oracle_agreement},
      {2, "defining equations, exhaustive below 64", criterion_defining_equations},
      {3, "bounded evaluation against the reference, 5000 instances", criterion_bounded_values},
      {4, "truth clauses, excluded middle and monotonicity", criterion_truth_clauses},
      {5, "every axiom schema enumerated sound at u=8", criterion_axioms_sound},
      {6, "every rule's minimal proof enumerated sound at u=8", criterion_rules_sound},
      {7, "budget laws on the corpus and 500 generated proofs", criterion_budget_laws},
      {8, "500 fuzzed proofs keep the kernel invariants", criterion_fuzz},
      {9, "negative controls report the advertised diagnostics", criterion_negative_controls},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string msg;
    try {
      msg = c.run();
    } catch (const std::exception& e) {
      msg = std::string("unexpected exception: ") + e.what();
    }
    const double secs = seconds_since(start);
    if (msg.empty()) {
      std::printf("PASS  criterion %d: %s  [%.1fs]\n", c.id, c.label, secs);
    } else {
      ++failures;
      std::printf("FAIL  criterion %d: %s  [%.1fs]  %s\n", c.id, c.label, secs, msg.c_str());
    }
    std::fflush(stdout);
  }
  if (failures > 0) {
    std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    return 1;
  }
  std::printf("all %zu criteria passed\n", criteria.size());
  return 0;
}
