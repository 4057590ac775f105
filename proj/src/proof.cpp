#include "s02e/proof.hpp"

#include <map>
#include <sstream>

#include "s02e/errors.hpp"
#include "s02e/parse.hpp"

namespace s02e {

namespace {

constexpr std::size_t kRuleCount = 21;

const char* const kRuleNames[kRuleCount] = {
    "identity", "axiom",  "weak-l", "weak-r", "contr-l", "contr-r", "exch-l",
    "exch-r",   "neg-l",  "neg-r",  "and-l1", "and-l2",  "and-r",   "or-l",
    "or-r1",    "or-r2",  "all-l",  "all-r",  "ex-l",    "ex-r",    "cut",
};

std::size_t expected_premises(RuleTag r) {
  switch (r) {
    case RuleTag::Identity:
    case RuleTag::Axiom:
      return 0;
    case RuleTag::AndR:
    case RuleTag::OrL:
    case RuleTag::Cut:
      return 2;
    default:
      return 1;
  }
}

using Formulas = std::vector<FormulaPtr>;

Formulas slice(const Formulas& v, std::size_t beg, std::size_t end) {
  return Formulas(v.begin() + static_cast<std::ptrdiff_t>(beg),
                  v.begin() + static_cast<std::ptrdiff_t>(end));
}

Formulas tail(const Formulas& v, std::size_t beg) { return slice(v, beg, v.size()); }

Formulas cat(Formulas a, const Formulas& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

bool eq_lists(const Formulas& a, const Formulas& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!formula_equal(a[i], b[i])) return false;
  }
  return true;
}

bool is_pos_atom(const FormulaPtr& f) { return f->kind == Formula::Kind::Atom && !f->neg; }
bool is_neg_atom(const FormulaPtr& f) { return f->kind == Formula::Kind::Atom && f->neg; }

// Same predicate over pairwise equal argument terms, polarity ignored.
bool same_literal_core(const FormulaPtr& f, const FormulaPtr& g) {
  if (f->pred != g->pred) return false;
  if (!term_equal(f->t1, g->t1)) return false;
  return f->pred == Pred::E || term_equal(f->t2, g->t2);
}

// b equals a with positions i and i+1 swapped.
bool adjacent_swap_equal(const Formulas& a, const Formulas& b, std::size_t i) {
  for (std::size_t j = 0; j < a.size(); ++j) {
    const FormulaPtr& want = (j == i) ? a[i + 1] : (j == i + 1) ? a[i] : a[j];
    if (!formula_equal(want, b[j])) return false;
  }
  return true;
}

bool some_adjacent_swap(const Formulas& a, const Formulas& b) {
  if (a.size() != b.size() || a.size() < 2) return false;
  for (std::size_t i = 0; i + 1 < a.size(); ++i) {
    if (adjacent_swap_equal(a, b, i)) return true;
  }
  return false;
}

CheckResult fail_shape(const std::string& msg) {
  return check_fail(CheckErrorCategory::RuleShape, msg);
}

// Instantiation hints: when a hint for `var` is present it must agree with
// the inferred term.
CheckResult check_hints(const ProofNode& node, unsigned var, const TermPtr& inferred) {
  for (const auto& [v, t] : node.inst) {
    if (v == var && !term_equal(t, inferred)) {
      return check_fail(CheckErrorCategory::InstantiationMismatch,
                        std::string(rule_name(node.rule)) + ": instantiation hint for x" +
                            std::to_string(var) + " is " + print_term(t) +
                            " but the inference uses " + print_term(inferred));
    }
  }
  return check_ok();
}

CheckResult check_axiom_node(const ProofNode& node) {
  if (node.axiom.empty() || !is_axiom_name(node.axiom)) {
    return check_fail(CheckErrorCategory::UnknownAxiom,
                      "axiom: unknown schema name '" + node.axiom + "'");
  }
  auto subst = match_schema(node.axiom, node.concl);
  if (!subst) {
    return check_fail(CheckErrorCategory::AxiomMismatch,
                      "axiom: " + print_sequent(node.concl) + " is not an instance of schema '" +
                          node.axiom + "'");
  }
  for (const auto& [v, t] : node.inst) {
    for (const auto& [mv, mt] : *subst) {
      if (v == mv && !term_equal(t, mt)) {
        return check_fail(CheckErrorCategory::InstantiationMismatch,
                          "axiom: instantiation hint for x" + std::to_string(v) +
                              " disagrees with the matched substitution");
      }
    }
  }
  return check_ok();
}

CheckResult check_identity(const ProofNode& node) {
  const Sequent& c = node.concl;
  if (c.ants.size() != 1 || c.sucs.size() != 1 || !formula_equal(c.ants[0], c.sucs[0])) {
    return fail_shape("identity: conclusion must have the form A -> A");
  }
  if (!is_pos_atom(c.ants[0])) {
    return check_fail(CheckErrorCategory::NotAtomic,
                      "identity: principal formula must be a positive atomic literal, got " +
                          print_formula(c.ants[0]));
  }
  return check_ok();
}

CheckResult check_weak_l(const Sequent& c, const Sequent& p) {
  if (c.ants.size() != p.ants.size() + 1 || !eq_lists(tail(c.ants, 1), p.ants) ||
      !eq_lists(c.sucs, p.sucs)) {
    return fail_shape("weak-l: conclusion must be the premise with one extra formula at the "
                      "front of the antecedent");
  }
  return check_ok();
}

CheckResult check_weak_r(const Sequent& c, const Sequent& p) {
  if (c.sucs.size() != p.sucs.size() + 1 || !eq_lists(slice(c.sucs, 0, p.sucs.size()), p.sucs) ||
      !eq_lists(c.ants, p.ants)) {
    return fail_shape("weak-r: conclusion must be the premise with one extra formula at the "
                      "back of the succedent");
  }
  return check_ok();
}

CheckResult check_contr_l(const Sequent& c, const Sequent& p) {
  if (c.ants.empty() || p.ants.size() != c.ants.size() + 1 ||
      !formula_equal(p.ants[0], p.ants[1]) || !formula_equal(p.ants[0], c.ants[0]) ||
      !eq_lists(tail(p.ants, 2), tail(c.ants, 1)) || !eq_lists(p.sucs, c.sucs)) {
    return fail_shape("contr-l: premise must repeat the first antecedent formula");
  }
  return check_ok();
}

CheckResult check_contr_r(const Sequent& c, const Sequent& p) {
  if (c.sucs.empty() || p.sucs.size() != c.sucs.size() + 1) {
    return fail_shape("contr-r: premise must repeat the last succedent formula");
  }
  const std::size_t m = c.sucs.size() - 1;
  if (!formula_equal(p.sucs[m], p.sucs[m + 1]) || !formula_equal(p.sucs[m], c.sucs[m]) ||
      !eq_lists(slice(p.sucs, 0, m), slice(c.sucs, 0, m)) || !eq_lists(p.ants, c.ants)) {
    return fail_shape("contr-r: premise must repeat the last succedent formula");
  }
  return check_ok();
}

CheckResult check_exch_l(const Sequent& c, const Sequent& p) {
  if (!eq_lists(p.sucs, c.sucs) || !some_adjacent_swap(p.ants, c.ants)) {
    return fail_shape("exch-l: conclusion must swap one adjacent antecedent pair of the premise");
  }
  return check_ok();
}

CheckResult check_exch_r(const Sequent& c, const Sequent& p) {
  if (!eq_lists(p.ants, c.ants) || !some_adjacent_swap(p.sucs, c.sucs)) {
    return fail_shape("exch-r: conclusion must swap one adjacent succedent pair of the premise");
  }
  return check_ok();
}

CheckResult check_neg_l(const Sequent& c, const Sequent& p) {
  if (c.ants.empty() || !is_neg_atom(c.ants[0])) {
    return fail_shape("neg-l: first antecedent of the conclusion must be a negated literal");
  }
  const FormulaPtr& principal = c.ants[0];
  if (p.sucs.empty() || !is_pos_atom(p.sucs.back()) ||
      !same_literal_core(p.sucs.back(), principal)) {
    return fail_shape("neg-l: premise must end with the positive form of the principal literal");
  }
  if (!eq_lists(p.ants, tail(c.ants, 1)) ||
      !eq_lists(slice(p.sucs, 0, p.sucs.size() - 1), c.sucs)) {
    return fail_shape("neg-l: side formulas of premise and conclusion differ");
  }
  return check_ok();
}

CheckResult check_neg_r(const Sequent& c, const Sequent& p) {
  if (p.ants.empty() || !is_pos_atom(p.ants[0])) {
    return fail_shape("neg-r: premise must begin with a positive literal");
  }
  const FormulaPtr& principal = p.ants[0];
  if (c.sucs.empty() || !is_neg_atom(c.sucs.back()) ||
      !same_literal_core(c.sucs.back(), principal)) {
    return fail_shape("neg-r: conclusion must end with the negated form of the premise literal");
  }
  const std::size_t arity = principal->pred == Pred::E ? 1 : 2;
  if (c.ants.size() != arity + p.ants.size() - 1) {
    return fail_shape("neg-r: conclusion must assume convergence of every argument of the "
                      "principal literal");
  }
  if (!formula_equal(c.ants[0], f_e(principal->t1)) ||
      (arity == 2 && !formula_equal(c.ants[1], f_e(principal->t2)))) {
    return fail_shape("neg-r: conclusion must assume convergence of every argument of the "
                      "principal literal, in argument order");
  }
  if (!eq_lists(tail(c.ants, arity), tail(p.ants, 1)) ||
      !eq_lists(slice(c.sucs, 0, c.sucs.size() - 1), p.sucs)) {
    return fail_shape("neg-r: side formulas of premise and conclusion differ");
  }
  return check_ok();
}

CheckResult check_and_l(const Sequent& c, const Sequent& p, bool left_component) {
  const char* rule = left_component ? "and-l1" : "and-l2";
  if (c.ants.empty() || c.ants[0]->kind != Formula::Kind::And) {
    return fail_shape(std::string(rule) + ": first antecedent must be a conjunction");
  }
  const FormulaPtr& comp = left_component ? c.ants[0]->lhs : c.ants[0]->rhs;
  if (p.ants.size() != c.ants.size() || !formula_equal(p.ants[0], comp) ||
      !eq_lists(tail(p.ants, 1), tail(c.ants, 1)) || !eq_lists(p.sucs, c.sucs)) {
    return fail_shape(std::string(rule) + ": premise must begin with the " +
                      (left_component ? "left" : "right") + " conjunct");
  }
  return check_ok();
}

CheckResult check_and_r(const Sequent& c, const Sequent& p1, const Sequent& p2) {
  if (c.sucs.empty() || c.sucs.back()->kind != Formula::Kind::And) {
    return fail_shape("and-r: last succedent must be a conjunction");
  }
  const FormulaPtr& principal = c.sucs.back();
  const std::size_t m = c.sucs.size() - 1;
  for (const Sequent* p : {&p1, &p2}) {
    if (!eq_lists(p->ants, c.ants) || p->sucs.size() != c.sucs.size() ||
        !eq_lists(slice(p->sucs, 0, m), slice(c.sucs, 0, m))) {
      return fail_shape("and-r: premises must share the conclusion's side formulas");
    }
  }
  if (!formula_equal(p1.sucs.back(), principal->lhs) ||
      !formula_equal(p2.sucs.back(), principal->rhs)) {
    return fail_shape("and-r: premises must end with the left and right conjuncts");
  }
  return check_ok();
}

CheckResult check_or_l(const Sequent& c, const Sequent& p1, const Sequent& p2) {
  if (c.ants.empty() || c.ants[0]->kind != Formula::Kind::Or) {
    return fail_shape("or-l: first antecedent must be a disjunction");
  }
  const FormulaPtr& principal = c.ants[0];
  for (const Sequent* p : {&p1, &p2}) {
    if (p->ants.size() != c.ants.size() || !eq_lists(tail(p->ants, 1), tail(c.ants, 1)) ||
        !eq_lists(p->sucs, c.sucs)) {
      return fail_shape("or-l: premises must share the conclusion's side formulas");
    }
  }
  if (!formula_equal(p1.ants[0], principal->lhs) || !formula_equal(p2.ants[0], principal->rhs)) {
    return fail_shape("or-l: premises must begin with the left and right disjuncts");
  }
  return check_ok();
}

CheckResult check_or_r(const Sequent& c, const Sequent& p, bool left_component) {
  const char* rule = left_component ? "or-r1" : "or-r2";
  if (c.sucs.empty() || c.sucs.back()->kind != Formula::Kind::Or) {
    return fail_shape(std::string(rule) + ": last succedent must be a disjunction");
  }
  const FormulaPtr& comp = left_component ? c.sucs.back()->lhs : c.sucs.back()->rhs;
  const std::size_t m = c.sucs.size() - 1;
  if (p.sucs.size() != c.sucs.size() || !formula_equal(p.sucs.back(), comp) ||
      !eq_lists(slice(p.sucs, 0, m), slice(c.sucs, 0, m)) || !eq_lists(p.ants, c.ants)) {
    return fail_shape(std::string(rule) + ": premise must end with the " +
                      (left_component ? "left" : "right") + " disjunct");
  }
  return check_ok();
}

CheckResult check_all_l(const ProofNode& node, const Sequent& c, const Sequent& p) {
  if (c.ants.size() < 2 || !is_pos_atom(c.ants[0]) || c.ants[0]->pred != Pred::Le) {
    return fail_shape("all-l: conclusion must begin with t <= s followed by the quantified "
                      "formula");
  }
  if (c.ants[1]->kind != Formula::Kind::All) {
    return fail_shape("all-l: second antecedent must be a bounded universal formula");
  }
  const FormulaPtr& q = c.ants[1];
  const TermPtr& t = c.ants[0]->t1;
  if (!term_equal(c.ants[0]->t2, q->bound)) {
    return check_fail(CheckErrorCategory::InstantiationMismatch,
                      "all-l: the inequality bound must be the quantifier bound " +
                          print_term(q->bound));
  }
  if (p.ants.size() + 1 != c.ants.size() || p.ants.empty()) {
    return fail_shape("all-l: premise must replace the two principal antecedents by the "
                      "instantiated body");
  }
  const FormulaPtr expected = substitute_formula(q->body, q->var, t);
  if (!formula_equal(p.ants[0], expected)) {
    return check_fail(CheckErrorCategory::InstantiationMismatch,
                      "all-l: premise begins with " + print_formula(p.ants[0]) +
                          " but instantiating the body at " + print_term(t) + " gives " +
                          print_formula(expected));
  }
  if (!eq_lists(tail(p.ants, 1), tail(c.ants, 2)) || !eq_lists(p.sucs, c.sucs)) {
    return fail_shape("all-l: side formulas of premise and conclusion differ");
  }
  return check_hints(node, q->var, t);
}

CheckResult check_all_r(const ProofNode& node, const Sequent& c, const Sequent& p) {
  if (c.ants.empty() || !is_pos_atom(c.ants[0]) || c.ants[0]->pred != Pred::E) {
    return fail_shape("all-r: conclusion must begin with a convergence assumption for the "
                      "quantifier bound");
  }
  if (c.sucs.empty() || c.sucs.back()->kind != Formula::Kind::All) {
    return fail_shape("all-r: last succedent must be a bounded universal formula");
  }
  const FormulaPtr& q = c.sucs.back();
  if (!term_equal(c.ants[0]->t1, q->bound)) {
    return fail_shape("all-r: the convergence assumption must be for the quantifier bound " +
                      print_term(q->bound));
  }
  if (p.ants.size() != c.ants.size() || p.ants.empty() || !is_pos_atom(p.ants[0]) ||
      p.ants[0]->pred != Pred::Le || p.ants[0]->t1->kind != Term::Kind::Var) {
    return fail_shape("all-r: premise must begin with eigenvariable <= bound");
  }
  const unsigned eigen = p.ants[0]->t1->var;
  if (!term_equal(p.ants[0]->t2, q->bound)) {
    return fail_shape("all-r: premise inequality bound must be the quantifier bound " +
                      print_term(q->bound));
  }
  if (p.sucs.size() != c.sucs.size() || p.sucs.empty()) {
    return fail_shape("all-r: premise must end with the body at the eigenvariable");
  }
  const std::size_t m = c.sucs.size() - 1;
  const FormulaPtr expected = substitute_formula(q->body, q->var, t_var(eigen));
  if (!formula_equal(p.sucs.back(), expected)) {
    return check_fail(CheckErrorCategory::InstantiationMismatch,
                      "all-r: premise ends with " + print_formula(p.sucs.back()) +
                          " but the body at x" + std::to_string(eigen) + " is " +
                          print_formula(expected));
  }
  if (!eq_lists(tail(p.ants, 1), tail(c.ants, 1)) ||
      !eq_lists(slice(p.sucs, 0, m), slice(c.sucs, 0, m))) {
    return fail_shape("all-r: side formulas of premise and conclusion differ");
  }
  if (free_vars(c).count(eigen) != 0) {
    return check_fail(CheckErrorCategory::Eigenvariable,
                      "all-r: eigenvariable x" + std::to_string(eigen) +
                          " occurs free in the conclusion");
  }
  return check_hints(node, q->var, t_var(eigen));
}

CheckResult check_ex_l(const ProofNode& node, const Sequent& c, const Sequent& p) {
  if (c.ants.empty() || c.ants[0]->kind != Formula::Kind::Ex) {
    return fail_shape("ex-l: first antecedent must be a bounded existential formula");
  }
  const FormulaPtr& q = c.ants[0];
  if (p.ants.size() != c.ants.size() + 1 || !is_pos_atom(p.ants[0]) ||
      p.ants[0]->pred != Pred::Le || p.ants[0]->t1->kind != Term::Kind::Var) {
    return fail_shape("ex-l: premise must begin with eigenvariable <= bound");
  }
  const unsigned eigen = p.ants[0]->t1->var;
  if (!term_equal(p.ants[0]->t2, q->bound)) {
    return fail_shape("ex-l: premise inequality bound must be the quantifier bound " +
                      print_term(q->bound));
  }
  const FormulaPtr expected = substitute_formula(q->body, q->var, t_var(eigen));
  if (!formula_equal(p.ants[1], expected)) {
    return check_fail(CheckErrorCategory::InstantiationMismatch,
                      "ex-l: second premise antecedent is " + print_formula(p.ants[1]) +
                          " but the body at x" + std::to_string(eigen) + " is " +
                          print_formula(expected));
  }
  if (!eq_lists(tail(p.ants, 2), tail(c.ants, 1)) || !eq_lists(p.sucs, c.sucs)) {
    return fail_shape("ex-l: side formulas of premise and conclusion differ");
  }
  std::set<unsigned> context;
  for (std::size_t i = 1; i < c.ants.size(); ++i) collect_free_vars(c.ants[i], context);
  for (const auto& f : c.sucs) collect_free_vars(f, context);
  if (context.count(eigen) != 0) {
    return check_fail(CheckErrorCategory::Eigenvariable,
                      "ex-l: eigenvariable x" + std::to_string(eigen) +
                          " occurs free in the context");
  }
  return check_hints(node, q->var, t_var(eigen));
}

CheckResult check_ex_r(const ProofNode& node, const Sequent& c, const Sequent& p) {
  if (c.ants.empty() || !is_pos_atom(c.ants[0]) || c.ants[0]->pred != Pred::Le) {
    return fail_shape("ex-r: conclusion must begin with t <= s for the witness t");
  }
  if (c.sucs.empty() || c.sucs.back()->kind != Formula::Kind::Ex) {
    return fail_shape("ex-r: last succedent must be a bounded existential formula");
  }
  const FormulaPtr& q = c.sucs.back();
  const TermPtr& t = c.ants[0]->t1;
  if (!term_equal(c.ants[0]->t2, q->bound)) {
    return check_fail(CheckErrorCategory::InstantiationMismatch,
                      "ex-r: the inequality bound must be the quantifier bound " +
                          print_term(q->bound));
  }
  if (!eq_lists(p.ants, tail(c.ants, 1))) {
    return fail_shape("ex-r: premise antecedent must drop the witness inequality");
  }
  if (p.sucs.size() != c.sucs.size() || p.sucs.empty()) {
    return fail_shape("ex-r: premise must end with the body at the witness term");
  }
  const std::size_t m = c.sucs.size() - 1;
  const FormulaPtr expected = substitute_formula(q->body, q->var, t);
  if (!formula_equal(p.sucs.back(), expected)) {
    return check_fail(CheckErrorCategory::InstantiationMismatch,
                      "ex-r: premise ends with " + print_formula(p.sucs.back()) +
                          " but instantiating the body at " + print_term(t) + " gives " +
                          print_formula(expected));
  }
  if (!eq_lists(slice(p.sucs, 0, m), slice(c.sucs, 0, m))) {
    return fail_shape("ex-r: side formulas of premise and conclusion differ");
  }
  return check_hints(node, q->var, t);
}

CheckResult check_cut(const Sequent& c, const Sequent& p1, const Sequent& p2) {
  if (p1.sucs.empty() || p2.ants.empty() ||
      !formula_equal(p1.sucs.back(), p2.ants[0])) {
    return fail_shape("cut: the cut formula must end the first premise's succedent and begin "
                      "the second premise's antecedent");
  }
  if (!eq_lists(c.ants, cat(p1.ants, tail(p2.ants, 1))) ||
      !eq_lists(c.sucs, cat(slice(p1.sucs, 0, p1.sucs.size() - 1), p2.sucs))) {
    return fail_shape("cut: conclusion must concatenate the premise contexts");
  }
  return check_ok();
}

// ---- proof-level audits --------------------------------------------------

std::string child_path(const std::string& path, std::size_t i) {
  return path.empty() ? std::to_string(i) : path + "." + std::to_string(i);
}

struct FlatNode {
  std::string path;
  const ProofNode* node;
};

void flatten(const ProofNodePtr& p, const std::string& path, std::vector<FlatNode>& out) {
  out.push_back({path, p.get()});
  for (std::size_t i = 0; i < p->prems.size(); ++i) {
    flatten(p->prems[i], child_path(path, i), out);
  }
}

bool in_subtree(const std::string& node_path, const std::string& subtree_root) {
  if (node_path == subtree_root) return true;
  return node_path.size() > subtree_root.size() &&
         node_path.compare(0, subtree_root.size(), subtree_root) == 0 &&
         node_path[subtree_root.size()] == '.';
}

}  // namespace

const char* rule_name(RuleTag r) { return kRuleNames[static_cast<std::size_t>(r)]; }

std::optional<RuleTag> rule_from_name(const std::string& name) {
  for (std::size_t i = 0; i < kRuleCount; ++i) {
    if (name == kRuleNames[i]) return static_cast<RuleTag>(i);
  }
  return std::nullopt;
}

ProofNodePtr make_node(RuleTag rule, Sequent concl, std::vector<ProofNodePtr> prems,
                       std::string axiom, std::vector<std::pair<unsigned, TermPtr>> inst) {
  auto n = std::make_shared<ProofNode>();
  n->rule = rule;
  // A schema name is meaningful only on axiom nodes; dropping it elsewhere
  // keeps node equality in step with the printed and encoded forms.
  n->axiom = rule == RuleTag::Axiom ? std::move(axiom) : std::string{};
  n->concl = std::move(concl);
  n->inst = std::move(inst);
  n->prems = std::move(prems);
  return n;
}

const char* check_error_category_name(CheckErrorCategory c) {
  switch (c) {
    case CheckErrorCategory::RuleShape: return "rule-shape";
    case CheckErrorCategory::PremiseCount: return "premise-count";
    case CheckErrorCategory::NotAtomic: return "not-atomic";
    case CheckErrorCategory::AxiomMismatch: return "axiom-mismatch";
    case CheckErrorCategory::InstantiationMismatch: return "instantiation-mismatch";
    case CheckErrorCategory::Eigenvariable: return "eigenvariable";
    case CheckErrorCategory::NotOneForm: return "not-one-form";
    case CheckErrorCategory::FreeVarNormalForm: return "free-var-normal-form";
    case CheckErrorCategory::UnknownAxiom: return "unknown-axiom";
  }
  return "unknown";
}

CheckResult check_ok() { return CheckResult{}; }

CheckResult check_fail(CheckErrorCategory cat, std::string msg, std::string path) {
  CheckResult r;
  r.ok = false;
  r.category = cat;
  r.message = std::move(msg);
  r.node_path = std::move(path);
  return r;
}

CheckResult check_rule(const ProofNode& node) {
  const std::size_t want = expected_premises(node.rule);
  if (node.prems.size() != want) {
    return check_fail(CheckErrorCategory::PremiseCount,
                      std::string(rule_name(node.rule)) + ": expected " + std::to_string(want) +
                          " premise(s), got " + std::to_string(node.prems.size()));
  }
  const Sequent& c = node.concl;
  switch (node.rule) {
    case RuleTag::Identity: return check_identity(node);
    case RuleTag::Axiom: return check_axiom_node(node);
    case RuleTag::WeakL: return check_weak_l(c, node.prems[0]->concl);
    case RuleTag::WeakR: return check_weak_r(c, node.prems[0]->concl);
    case RuleTag::ContrL: return check_contr_l(c, node.prems[0]->concl);
    case RuleTag::ContrR: return check_contr_r(c, node.prems[0]->concl);
    case RuleTag::ExchL: return check_exch_l(c, node.prems[0]->concl);
    case RuleTag::ExchR: return check_exch_r(c, node.prems[0]->concl);
    case RuleTag::NegL: return check_neg_l(c, node.prems[0]->concl);
    case RuleTag::NegR: return check_neg_r(c, node.prems[0]->concl);
    case RuleTag::AndL1: return check_and_l(c, node.prems[0]->concl, true);
    case RuleTag::AndL2: return check_and_l(c, node.prems[0]->concl, false);
    case RuleTag::AndR: return check_and_r(c, node.prems[0]->concl, node.prems[1]->concl);
    case RuleTag::OrL: return check_or_l(c, node.prems[0]->concl, node.prems[1]->concl);
    case RuleTag::OrR1: return check_or_r(c, node.prems[0]->concl, true);
    case RuleTag::OrR2: return check_or_r(c, node.prems[0]->concl, false);
    case RuleTag::AllL: return check_all_l(node, c, node.prems[0]->concl);
    case RuleTag::AllR: return check_all_r(node, c, node.prems[0]->concl);
    case RuleTag::ExL: return check_ex_l(node, c, node.prems[0]->concl);
    case RuleTag::ExR: return check_ex_r(node, c, node.prems[0]->concl);
    case RuleTag::Cut: return check_cut(c, node.prems[0]->concl, node.prems[1]->concl);
  }
  return fail_shape("unknown rule tag");
}

CheckResult check_proof(const ProofNodePtr& p) {
  if (!p) throw ContractViolation("check_proof: null proof");
  std::vector<FlatNode> nodes;
  flatten(p, "", nodes);

  // Local inference checks and the 1-form discipline.
  for (const FlatNode& fn : nodes) {
    CheckResult r = check_rule(*fn.node);
    if (!r.ok) {
      r.node_path = fn.path;
      return r;
    }
    const Sequent& s = fn.node->concl;
    for (const auto* side : {&s.ants, &s.sucs}) {
      for (const FormulaPtr& f : *side) {
        if (classify_form(f) == FormClass::NotOneForm) {
          return check_fail(CheckErrorCategory::NotOneForm,
                            "formula " + print_formula(f) +
                                " is neither a 1-form nor a convergence atom",
                            fn.path);
        }
      }
    }
  }

  // Free variable normal form: each eigenvariable is introduced once and
  // occurs free only inside the introducing inference's premise subtree.
  std::map<unsigned, std::string> intro;  // eigenvariable -> premise subtree root
  for (const FlatNode& fn : nodes) {
    if (fn.node->rule != RuleTag::AllR && fn.node->rule != RuleTag::ExL) continue;
    const unsigned eigen = fn.node->prems[0]->concl.ants[0]->t1->var;
    auto [it, inserted] = intro.emplace(eigen, child_path(fn.path, 0));
    if (!inserted) {
      return check_fail(CheckErrorCategory::FreeVarNormalForm,
                        "eigenvariable x" + std::to_string(eigen) +
                            " is introduced by more than one inference",
                        fn.path);
    }
  }
  for (const FlatNode& fn : nodes) {
    if (intro.empty()) break;
    const std::set<unsigned> fv = free_vars(fn.node->concl);
    for (const auto& [eigen, subtree] : intro) {
      if (fv.count(eigen) != 0 && !in_subtree(fn.path, subtree)) {
        return check_fail(CheckErrorCategory::FreeVarNormalForm,
                          "eigenvariable x" + std::to_string(eigen) +
                              " occurs free outside its introducing subtree",
                          fn.path);
      }
    }
  }
  return check_ok();
}

// ---- Goedel codes ---------------------------------------------------------

void write_proof(BitWriter& w, const ProofNodePtr& p) {
  if (!p) throw ContractViolation("write_proof: null proof");
  w.tag(TAG_PROOF);
  w.number(static_cast<std::size_t>(p->rule));
  if (p->rule == RuleTag::Axiom) {
    // Schema names ride along as length-led printable bytes; instantiation
    // hints are derived data and are not encoded.
    w.number(p->axiom.size());
    for (char ch : p->axiom) {
      for (int b = 7; b >= 0; --b) w.bit((static_cast<unsigned char>(ch) >> b) & 1u);
    }
  }
  write_sequent(w, p->concl);
  w.number(p->prems.size());
  for (const ProofNodePtr& q : p->prems) write_proof(w, q);
}

Nat encode_proof(const ProofNodePtr& p) {
  BitWriter w;
  write_proof(w, p);
  return w.finish();
}

ProofNodePtr read_proof(BitReader& r) {
  if (r.tag() != TAG_PROOF) throw DecodeError("expected a proof node");
  const Nat rule_idx = r.number();
  if (rule_idx >= kRuleCount) throw DecodeError("rule index out of range");
  const RuleTag rule = static_cast<RuleTag>(rule_idx.get_ui());
  std::string axiom;
  if (rule == RuleTag::Axiom) {
    const Nat len = r.number();
    if (len > 256) throw DecodeError("axiom name too long");
    for (unsigned long i = 0; i < len.get_ui(); ++i) {
      unsigned ch = 0;
      for (int b = 0; b < 8; ++b) ch = (ch << 1) | (r.bit() ? 1u : 0u);
      if (ch < 33 || ch > 126) throw DecodeError("axiom name contains a non-printable byte");
      axiom.push_back(static_cast<char>(ch));
    }
  }
  Sequent concl = read_sequent(r);
  const Nat count = r.number();
  if (count > 1000) throw DecodeError("premise count out of range");
  std::vector<ProofNodePtr> prems;
  prems.reserve(count.get_ui());
  for (unsigned long i = 0; i < count.get_ui(); ++i) prems.push_back(read_proof(r));
  return make_node(rule, std::move(concl), std::move(prems), std::move(axiom));
}

ProofNodePtr decode_proof(const Nat& code) {
  BitReader r(code);
  ProofNodePtr p = read_proof(r);
  r.expect_end();
  return p;
}

namespace {

void meta_rec(const ProofNodePtr& p, const std::string& path, std::vector<NodeMeta>& out) {
  NodeMeta m;
  m.path = path;
  m.sequent = p->concl;
  m.rule = p->rule;
  m.k_r = free_vars(p->concl).size();
  m.rCode = encode_proof(p);
  out.push_back(std::move(m));
  for (std::size_t i = 0; i < p->prems.size(); ++i) {
    meta_rec(p->prems[i], child_path(path, i), out);
  }
}

}  // namespace

std::vector<NodeMeta> proof_meta(const ProofNodePtr& p) {
  if (!p) throw ContractViolation("proof_meta: null proof");
  std::vector<NodeMeta> out;
  meta_rec(p, "", out);
  return out;
}

// ---- text form -------------------------------------------------------------

namespace {

[[noreturn]] void pfail(const SExpr& e, const std::string& msg) { throw ParseError(e.pos, msg); }

const SExpr& section(const SExpr& parent, std::size_t idx, const char* name) {
  if (idx >= parent.items.size()) {
    pfail(parent, std::string("proof node is missing its (") + name + " ...) section");
  }
  const SExpr& s = parent.items[idx];
  if (s.is_atom || s.items.empty() || !s.items[0].is_atom || s.items[0].text != name) {
    pfail(s, std::string("expected a (") + name + " ...) section");
  }
  return s;
}

ProofNodePtr proof_from_sexpr(const SExpr& e) {
  if (e.is_atom || e.items.size() < 2 || !e.items[0].is_atom || e.items[0].text != "proof") {
    pfail(e, "expected (proof <tag> (concl ...) [(inst ...)] (prems ...))");
  }
  if (!e.items[1].is_atom) pfail(e.items[1], "expected a rule tag");
  const std::string& tag = e.items[1].text;
  RuleTag rule;
  std::string axiom;
  if (tag.rfind("axiom:", 0) == 0) {
    rule = RuleTag::Axiom;
    axiom = tag.substr(6);
    if (axiom.empty()) pfail(e.items[1], "axiom tag is missing its schema name");
  } else {
    auto r = rule_from_name(tag);
    if (!r) pfail(e.items[1], "unknown rule tag '" + tag + "'");
    if (*r == RuleTag::Axiom) pfail(e.items[1], "axiom nodes are written axiom:<name>");
    rule = *r;
  }

  const SExpr& concl_sec = section(e, 2, "concl");
  if (concl_sec.items.size() != 2) pfail(concl_sec, "(concl ...) takes exactly one sequent");
  Sequent concl = sequent_from_sexpr(concl_sec.items[1]);

  std::size_t next = 3;
  std::vector<std::pair<unsigned, TermPtr>> inst;
  if (next < e.items.size() && !e.items[next].is_atom && !e.items[next].items.empty() &&
      e.items[next].items[0].is_atom && e.items[next].items[0].text == "inst") {
    const SExpr& inst_sec = e.items[next];
    for (std::size_t i = 1; i < inst_sec.items.size(); ++i) {
      const SExpr& pair = inst_sec.items[i];
      if (pair.is_atom || pair.items.size() != 2) {
        pfail(pair, "instantiation hints are written (x<k> <term>)");
      }
      inst.emplace_back(variable_from_sexpr(pair.items[0]), term_from_sexpr(pair.items[1]));
    }
    ++next;
  }

  const SExpr& prems_sec = section(e, next, "prems");
  if (next + 1 != e.items.size()) {
    pfail(e.items[next + 1], "unexpected trailing items after the (prems ...) section");
  }
  std::vector<ProofNodePtr> prems;
  for (std::size_t i = 1; i < prems_sec.items.size(); ++i) {
    prems.push_back(proof_from_sexpr(prems_sec.items[i]));
  }
  return make_node(rule, std::move(concl), std::move(prems), std::move(axiom), std::move(inst));
}

void print_rec(std::ostringstream& os, const ProofNodePtr& p, std::size_t indent) {
  const std::string pad(indent, ' ');
  os << pad << "(proof ";
  if (p->rule == RuleTag::Axiom) {
    os << "axiom:" << p->axiom;
  } else {
    os << rule_name(p->rule);
  }
  os << "\n" << pad << "  (concl " << print_sequent(p->concl) << ")";
  if (!p->inst.empty()) {
    os << "\n" << pad << "  (inst";
    for (const auto& [v, t] : p->inst) os << " (x" << v << " " << print_term(t) << ")";
    os << ")";
  }
  if (p->prems.empty()) {
    os << "\n" << pad << "  (prems)";
  } else {
    os << "\n" << pad << "  (prems";
    for (const ProofNodePtr& q : p->prems) {
      os << "\n";
      print_rec(os, q, indent + 4);
    }
    os << ")";
  }
  os << ")";
}

}  // namespace

ProofNodePtr parse_proof(const std::string& text) {
  return proof_from_sexpr(read_sexpr(text));
}

std::string print_proof(const ProofNodePtr& p) {
  if (!p) throw ContractViolation("print_proof: null proof");
  std::ostringstream os;
  print_rec(os, p, 0);
  os << "\n";
  return os.str();
}

// Instantiation hints are derived data: equality is over rule, schema name,
// conclusion and premises.
bool proof_equal(const ProofNodePtr& p, const ProofNodePtr& q) {
  if (p == q) return true;
  if (!p || !q) return false;
  if (p->rule != q->rule || p->axiom != q->axiom || !sequent_equal(p->concl, q->concl) ||
      p->prems.size() != q->prems.size()) {
    return false;
  }
  for (std::size_t i = 0; i < p->prems.size(); ++i) {
    if (!proof_equal(p->prems[i], q->prems[i])) return false;
  }
  return true;
}

}  // namespace s02e
