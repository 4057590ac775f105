#include "s02e/fuzz.hpp"

#include <functional>

#include "s02e/errors.hpp"
#include "s02e/soundness.hpp"

namespace s02e {

namespace {

std::size_t pick(std::mt19937_64& rng, std::size_t n) {
  return static_cast<std::size_t>(rng() % n);
}

using Formulas = std::vector<FormulaPtr>;

Formulas drop_front(Formulas v) {
  v.erase(v.begin());
  return v;
}

Formulas with_front(FormulaPtr f, Formulas v) {
  v.insert(v.begin(), std::move(f));
  return v;
}

Formulas with_back(Formulas v, FormulaPtr f) {
  v.push_back(std::move(f));
  return v;
}

// ---- random syntax ---------------------------------------------------------

TermPtr rand_term(std::mt19937_64& rng, unsigned depth) {
  if (depth == 0) {
    switch (pick(rng, 3)) {
      case 0: return t_zero();
      case 1: return t_var(1 + static_cast<unsigned>(pick(rng, 3)));
      default: return numeral(Nat(static_cast<unsigned long>(pick(rng, 16))));
    }
  }
  switch (pick(rng, 10)) {
    case 0: return rand_term(rng, 0);
    case 1: return t_succ(rand_term(rng, depth - 1));
    case 2: return t_half(rand_term(rng, depth - 1));
    case 3: return t_len(rand_term(rng, depth - 1));
    case 4: return t_s0(rand_term(rng, depth - 1));
    case 5: return t_s1(rand_term(rng, depth - 1));
    case 6: return t_parity(rand_term(rng, depth - 1));
    case 7: return t_plus(rand_term(rng, depth - 1), rand_term(rng, depth - 1));
    case 8:
      return pick(rng, 2) ? t_times(rand_term(rng, depth - 1), rand_term(rng, depth - 1))
                          : t_smash(rand_term(rng, 0), rand_term(rng, 0));
    default:
      return t_cond(rand_term(rng, depth - 1), rand_term(rng, 0), rand_term(rng, 0));
  }
}

FormulaPtr rand_pos_atom(std::mt19937_64& rng) {
  switch (pick(rng, 3)) {
    case 0: return f_le(rand_term(rng, 1), rand_term(rng, 1));
    case 1: return f_eq(rand_term(rng, 1), rand_term(rng, 1));
    default: return f_e(rand_term(rng, 1));
  }
}

// E-free quantifier-free literal or connective of two such.
FormulaPtr rand_qf_formula(std::mt19937_64& rng) {
  auto lit = [&rng] {
    FormulaPtr a = pick(rng, 2) ? f_le(rand_term(rng, 1), rand_term(rng, 1))
                                : f_eq(rand_term(rng, 1), rand_term(rng, 1));
    return pick(rng, 3) == 0 ? f_neg(a) : a;
  };
  switch (pick(rng, 4)) {
    case 0: return f_and(lit(), lit());
    case 1: return f_or(lit(), lit());
    default: return lit();
  }
}

// Any formula legal inside a strictly 1-normal sequent.
FormulaPtr rand_safe_formula(std::mt19937_64& rng) {
  if (pick(rng, 4) == 0) return f_e(rand_term(rng, 1));
  return rand_qf_formula(rng);
}

// ---- valid building blocks --------------------------------------------------

Sequent substitute_sequent(const Sequent& s, const std::vector<std::pair<unsigned, TermPtr>>& m) {
  // Two passes keep the replacement simultaneous: park each variable at a
  // fresh index, then rewrite the parked indices to the replacements.
  Sequent out = s;
  auto apply = [&out](unsigned var, const TermPtr& repl) {
    for (auto& f : out.ants) f = substitute_formula(f, var, repl);
    for (auto& f : out.sucs) f = substitute_formula(f, var, repl);
  };
  constexpr unsigned kPark = 1000;
  for (const auto& [var, repl] : m) {
    (void)repl;
    apply(var, t_var(kPark + var));
  }
  for (const auto& [var, repl] : m) apply(kPark + var, repl);
  return out;
}

bool sequent_one_formed(const Sequent& s) {
  for (const auto* side : {&s.ants, &s.sucs}) {
    for (const FormulaPtr& f : *side) {
      if (classify_form(f) == FormClass::NotOneForm) return false;
    }
  }
  return true;
}

ProofNodePtr rand_axiom_instance(std::mt19937_64& rng) {
  static const std::vector<std::string> names = axiom_names();
  for (int attempt = 0; attempt < 50; ++attempt) {
    const std::string& name = names[pick(rng, names.size())];
    const std::vector<Sequent> patterns = axiom_patterns(name);
    const Sequent& pattern = patterns[pick(rng, patterns.size())];
    std::set<unsigned> vars = free_vars(pattern);
    std::vector<std::pair<unsigned, TermPtr>> subst;
    for (unsigned v : vars) subst.emplace_back(v, rand_term(rng, pick(rng, 3) ? 1 : 2));
    Sequent instance = substitute_sequent(pattern, subst);
    if (!sequent_one_formed(instance)) continue;  // the negated-E convergence pattern
    return make_node(RuleTag::Axiom, std::move(instance), {}, name);
  }
  return make_node(RuleTag::Axiom, Sequent{{}, {f_e(t_zero())}}, {}, "e-zero");
}

ProofNodePtr rand_identity(std::mt19937_64& rng) {
  FormulaPtr a = rand_pos_atom(rng);
  return make_node(RuleTag::Identity, Sequent{{a}, {a}});
}

// E len(n) -> all x_bv <= len(n). x_bv <= len(n), by all-r over an identity.
ProofNodePtr template_all_r(std::mt19937_64& rng) {
  const TermPtr bound = t_len(numeral(Nat(static_cast<unsigned long>(1 + pick(rng, 15)))));
  const unsigned eigen = 5, bv = 4;
  const FormulaPtr leaf = f_le(t_var(eigen), bound);
  ProofNodePtr id = make_node(RuleTag::Identity, Sequent{{leaf}, {leaf}});
  Sequent concl{{f_e(bound)}, {f_all(bv, bound, f_le(t_var(bv), bound))}};
  return make_node(RuleTag::AllR, std::move(concl), {id});
}

// 0 <= len(n), all x_bv <= len(n). x_bv <= len(n) -> 0 <= len(n).
ProofNodePtr template_all_l(std::mt19937_64& rng) {
  const TermPtr bound = t_len(numeral(Nat(static_cast<unsigned long>(1 + pick(rng, 15)))));
  const unsigned bv = 4;
  const FormulaPtr at_zero = f_le(t_zero(), bound);
  ProofNodePtr id = make_node(RuleTag::Identity, Sequent{{at_zero}, {at_zero}});
  Sequent concl{{at_zero, f_all(bv, bound, f_le(t_var(bv), bound))}, {at_zero}};
  return make_node(RuleTag::AllL, std::move(concl), {id});
}

// len(m) <= s, E len(m) -> ex x <= s. all y <= len(m). y <= x, by ex-r over
// the all-r template.
ProofNodePtr template_ex_r(std::mt19937_64& rng) {
  const TermPtr inner = t_len(numeral(Nat(static_cast<unsigned long>(1 + pick(rng, 15)))));
  const TermPtr outer = numeral(Nat(static_cast<unsigned long>(pick(rng, 16))));
  const unsigned eigen = 5, bv = 4, xv = 6;
  const FormulaPtr leaf = f_le(t_var(eigen), inner);
  ProofNodePtr id = make_node(RuleTag::Identity, Sequent{{leaf}, {leaf}});
  ProofNodePtr allr = make_node(
      RuleTag::AllR, Sequent{{f_e(inner)}, {f_all(bv, inner, f_le(t_var(bv), inner))}}, {id});
  Sequent concl{{f_le(inner, outer), f_e(inner)},
                {f_ex(xv, outer, f_all(bv, inner, f_le(t_var(bv), t_var(xv))))}};
  return make_node(RuleTag::ExR, std::move(concl), {allr});
}

// ex x <= n. all y <= len(m). y <= x -> E 0, by ex-l over weakenings of the
// zero convergence axiom.
ProofNodePtr template_ex_l(std::mt19937_64& rng) {
  const TermPtr t = numeral(Nat(static_cast<unsigned long>(pick(rng, 16))));
  const TermPtr inner = t_len(numeral(Nat(static_cast<unsigned long>(1 + pick(rng, 15)))));
  const unsigned eigen = 5, bv = 4, xv = 6;
  const FormulaPtr goal = f_e(t_zero());
  const FormulaPtr body_at_eigen = f_all(bv, inner, f_le(t_var(bv), t_var(eigen)));
  ProofNodePtr ax = make_node(RuleTag::Axiom, Sequent{{}, {goal}}, {}, "e-zero");
  ProofNodePtr w1 = make_node(RuleTag::WeakL, Sequent{{body_at_eigen}, {goal}}, {ax});
  ProofNodePtr w2 = make_node(
      RuleTag::WeakL, Sequent{{f_le(t_var(eigen), t), body_at_eigen}, {goal}}, {w1});
  Sequent concl{{f_ex(xv, t, f_all(bv, inner, f_le(t_var(bv), t_var(xv))))}, {goal}};
  return make_node(RuleTag::ExL, std::move(concl), {w2});
}

bool qf_e_free(const FormulaPtr& f) { return is_quantifier_free(f) && !contains_e(f); }

// Duplicating a subtree that introduces an eigenvariable would introduce it
// twice and break the free variable normal form.
bool has_quantifier_intro(const ProofNodePtr& p) {
  if (p->rule == RuleTag::AllR || p->rule == RuleTag::ExL) return true;
  for (const auto& q : p->prems) {
    if (has_quantifier_intro(q)) return true;
  }
  return false;
}

// One structurally valid step on top of p; returns p when the drawn step
// does not apply.
ProofNodePtr grow(std::mt19937_64& rng, const ProofNodePtr& p) {
  const Sequent& c = p->concl;
  switch (pick(rng, 12)) {
    case 0:
      return make_node(RuleTag::WeakL, Sequent{with_front(rand_safe_formula(rng), c.ants), c.sucs},
                       {p});
    case 1:
      return make_node(RuleTag::WeakR, Sequent{c.ants, with_back(c.sucs, rand_safe_formula(rng))},
                       {p});
    case 2: {
      if (c.ants.size() < 2) return p;
      const std::size_t i = pick(rng, c.ants.size() - 1);
      Sequent s = c;
      std::swap(s.ants[i], s.ants[i + 1]);
      return make_node(RuleTag::ExchL, std::move(s), {p});
    }
    case 3: {
      if (c.sucs.size() < 2) return p;
      const std::size_t i = pick(rng, c.sucs.size() - 1);
      Sequent s = c;
      std::swap(s.sucs[i], s.sucs[i + 1]);
      return make_node(RuleTag::ExchR, std::move(s), {p});
    }
    case 4: {
      if (c.ants.empty()) return p;
      ProofNodePtr dup =
          make_node(RuleTag::WeakL, Sequent{with_front(c.ants[0], c.ants), c.sucs}, {p});
      return make_node(RuleTag::ContrL, c, {dup});
    }
    case 5: {
      if (c.sucs.empty()) return p;
      ProofNodePtr dup =
          make_node(RuleTag::WeakR, Sequent{c.ants, with_back(c.sucs, c.sucs.back())}, {p});
      return make_node(RuleTag::ContrR, c, {dup});
    }
    case 6: {
      if (c.sucs.empty() || c.sucs.back()->kind != Formula::Kind::Atom || c.sucs.back()->neg) {
        return p;
      }
      const FormulaPtr& a = c.sucs.back();
      ProofNodePtr id = make_node(RuleTag::Identity, Sequent{{a}, {a}});
      return make_node(RuleTag::Cut, c, {p, id});
    }
    case 7: {
      if (c.sucs.empty() || !qf_e_free(c.sucs.back()) || has_quantifier_intro(p)) return p;
      Sequent s = c;
      s.sucs.back() = f_and(c.sucs.back(), c.sucs.back());
      return make_node(RuleTag::AndR, std::move(s), {p, p});
    }
    case 8: {
      if (c.sucs.empty() || !qf_e_free(c.sucs.back())) return p;
      FormulaPtr g = rand_qf_formula(rng);
      const bool left = pick(rng, 2) == 0;
      Sequent s = c;
      s.sucs.back() = left ? f_or(c.sucs.back(), g) : f_or(g, c.sucs.back());
      return make_node(left ? RuleTag::OrR1 : RuleTag::OrR2, std::move(s), {p});
    }
    case 9: {
      if (c.ants.empty() || !qf_e_free(c.ants[0])) return p;
      FormulaPtr g = rand_qf_formula(rng);
      const bool left = pick(rng, 2) == 0;
      Sequent s = c;
      s.ants[0] = left ? f_and(c.ants[0], g) : f_and(g, c.ants[0]);
      return make_node(left ? RuleTag::AndL1 : RuleTag::AndL2, std::move(s), {p});
    }
    case 10: {
      if (c.ants.empty() || !qf_e_free(c.ants[0]) || has_quantifier_intro(p)) return p;
      Sequent s = c;
      s.ants[0] = f_or(c.ants[0], c.ants[0]);
      return make_node(RuleTag::OrL, std::move(s), {p, p});
    }
    default: {
      // neg-r on a positive non-E literal at the antecedent front.
      if (c.ants.empty() || c.ants[0]->kind != Formula::Kind::Atom || c.ants[0]->neg ||
          c.ants[0]->pred == Pred::E) {
        return p;
      }
      const FormulaPtr& a = c.ants[0];
      Sequent s;
      s.ants = with_front(f_e(a->t1), with_front(f_e(a->t2), drop_front(c.ants)));
      s.sucs = with_back(c.sucs, f_neg(a));
      return make_node(RuleTag::NegR, std::move(s), {p});
    }
  }
}

// ---- mutations ---------------------------------------------------------------

std::size_t count_nodes(const ProofNodePtr& p) {
  std::size_t n = 1;
  for (const auto& q : p->prems) n += count_nodes(q);
  return n;
}

ProofNodePtr mutate_node(std::mt19937_64& rng, const ProofNode& n) {
  Sequent c = n.concl;
  RuleTag rule = n.rule;
  std::string axiom = n.axiom;
  std::vector<ProofNodePtr> prems = n.prems;
  switch (pick(rng, 7)) {
    case 0:
      rule = static_cast<RuleTag>(pick(rng, 21));
      if (rule == RuleTag::Axiom && axiom.empty()) axiom = "eq-refl";
      break;
    case 1:
      c = Sequent{};  // forged empty end-sequent
      break;
    case 2:
      if (!c.ants.empty()) c.ants.erase(c.ants.begin());
      else c.sucs.clear();
      break;
    case 3:
      if (!c.sucs.empty()) c.sucs.push_back(c.sucs.back());
      else c.ants.push_back(f_e(t_zero()));
      break;
    case 4:
      rule = RuleTag::Axiom;
      prems.clear();
      axiom = pick(rng, 2) ? "eq-refl" : "no-such-schema";
      break;
    case 5:
      if (!c.sucs.empty() && c.sucs.back()->kind == Formula::Kind::Atom) {
        const FormulaPtr& a = c.sucs.back();
        FormulaPtr tweaked = a->pred == Pred::E ? f_e(t_s0(a->t1)) : f_le(t_s0(a->t1), a->t2);
        if (a->neg) tweaked = f_neg(tweaked);
        c.sucs.back() = tweaked;
      } else {
        c.sucs.push_back(f_eq(t_zero(), t_s1(t_zero())));
      }
      break;
    default:
      if (!prems.empty()) prems.pop_back();
      else prems.push_back(make_node(RuleTag::Identity, c));
      break;
  }
  return make_node(rule, std::move(c), std::move(prems), std::move(axiom), n.inst);
}

// Mutates the k-th node in pre-order; `done` reports that the mutation landed.
ProofNodePtr mutate_at(std::mt19937_64& rng, const ProofNodePtr& p, std::size_t& k, bool& done) {
  if (k == 0) {
    done = true;
    return mutate_node(rng, *p);
  }
  --k;
  std::vector<ProofNodePtr> prems = p->prems;
  for (auto& q : prems) {
    q = mutate_at(rng, q, k, done);
    if (done) break;
  }
  if (!done) return p;
  return make_node(p->rule, p->concl, std::move(prems), p->axiom, p->inst);
}

}  // namespace

ProofNodePtr generate_proof(std::mt19937_64& rng, bool mutate) {
  ProofNodePtr p;
  switch (pick(rng, 6)) {
    case 0: p = rand_identity(rng); break;
    case 1: p = template_all_r(rng); break;
    case 2: p = template_all_l(rng); break;
    case 3: p = template_ex_r(rng); break;
    case 4: p = template_ex_l(rng); break;
    default: p = rand_axiom_instance(rng); break;
  }
  const std::size_t steps = pick(rng, 4);
  for (std::size_t i = 0; i < steps; ++i) p = grow(rng, p);
  if (mutate) {
    std::size_t k = pick(rng, count_nodes(p));
    bool done = false;
    p = mutate_at(rng, p, k, done);
  }
  return p;
}

FuzzReport run_fuzz(const FuzzOptions& opts) {
  FuzzReport report;
  std::mt19937_64 rng(opts.seed);
  for (std::size_t i = 0; i < opts.count; ++i) {
    ++report.attempted;
    const bool mutated = (i % 3 == 2);
    ProofNodePtr p = generate_proof(rng, mutated);
    const CheckResult res = check_proof(p);
    if (!res.ok) {
      ++report.rejected;
      if (!mutated) {
        ++report.valid_rejected;
        report.notes.push_back("round " + std::to_string(i) +
                               ": built-as-valid proof rejected (" +
                               check_error_category_name(res.category) + ": " + res.message +
                               " at node '" + res.node_path + "')");
      }
      continue;
    }
    ++report.accepted;
    if (p->concl.ants.empty() && p->concl.sucs.empty()) {
      ++report.empty_endsequent_accepted;
      report.notes.push_back("round " + std::to_string(i) +
                             ": accepted a proof of the empty sequent");
      continue;
    }
    SoundnessOptions sopts;
    sopts.u = opts.u;
    sopts.mode = SoundnessMode::Sample;
    sopts.samples = opts.soundness_samples;
    sopts.seed = rng();
    sopts.limits = opts.limits;
    const SoundnessReport sr = check_proof_soundness(p, sopts);
    if (!sr.ok) {
      ++report.soundness_failures;
      for (const NodeOutcome& n : sr.nodes) {
        if (!n.holds) {
          report.notes.push_back("round " + std::to_string(i) + ": accepted proof fails the " +
                                 "soundness audit at node '" + n.path + "' (" +
                                 rule_name(n.rule) + ")");
          break;
        }
      }
    }
  }
  return report;
}

}  // namespace s02e
