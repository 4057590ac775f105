#include <map>

#include "s02e/errors.hpp"
#include "s02e/proof.hpp"

namespace s02e {

namespace {

// Schema sequents over the substitutable variables x1, x2, x3. Schemas
// that shift a successor digit come as an s0/s1 pattern pair under one
// name; the argument-convergence schemas come as one pattern per
// (predicate, argument position).
struct Schema {
  std::string name;
  std::vector<Sequent> patterns;
};

TermPtr X1() { return t_var(1); }
TermPtr X2() { return t_var(2); }
TermPtr X3() { return t_var(3); }
TermPtr ZERO() { return t_zero(); }
TermPtr ONE() { return t_s1(t_zero()); }

Sequent seq(std::vector<FormulaPtr> ants, std::vector<FormulaPtr> sucs) {
  return Sequent{std::move(ants), std::move(sucs)};
}

std::vector<Schema> build_schemas() {
  std::vector<Schema> v;

  // Convergence axioms.
  v.push_back({"e-zero", {seq({}, {f_e(ZERO())})}});
  v.push_back({"e-succ",
               {seq({f_e(X1())}, {f_e(t_s0(X1()))}),
                seq({f_e(X1())}, {f_e(t_s1(X1()))})}});
  v.push_back({"e-arg-pos",
               {seq({f_le(X1(), X2())}, {f_e(X1())}),
                seq({f_le(X1(), X2())}, {f_e(X2())}),
                seq({f_eq(X1(), X2())}, {f_e(X1())}),
                seq({f_eq(X1(), X2())}, {f_e(X2())}),
                seq({f_e(X1())}, {f_e(X1())})}});
  v.push_back({"e-arg-neg",
               {seq({f_neg(f_le(X1(), X2()))}, {f_e(X1())}),
                seq({f_neg(f_le(X1(), X2()))}, {f_e(X2())}),
                seq({f_neg(f_eq(X1(), X2()))}, {f_e(X1())}),
                seq({f_neg(f_eq(X1(), X2()))}, {f_e(X2())}),
                seq({f_neg(f_e(X1()))}, {f_e(X1())})}});

  // Equality axioms.
  v.push_back({"eq-refl", {seq({f_e(X1())}, {f_eq(X1(), X1())})}});
  v.push_back({"eq-trans", {seq({f_eq(X1(), X2()), f_eq(X2(), X3())}, {f_eq(X1(), X3())})}});
  v.push_back({"eq-succ",
               {seq({f_eq(X1(), X2())}, {f_eq(t_s0(X1()), t_s0(X2()))}),
                seq({f_eq(X1(), X2())}, {f_eq(t_s1(X1()), t_s1(X2()))})}});

  // Separation axioms.
  v.push_back({"sep-zero", {seq({f_neg(f_eq(X1(), ZERO()))}, {f_neg(f_eq(X1(), t_s0(X1())))})}});
  v.push_back({"sep-s1", {seq({f_e(X1())}, {f_neg(f_eq(X1(), t_s1(X1())))})}});
  v.push_back({"sep-s0s1", {seq({f_e(X1())}, {f_neg(f_eq(t_s0(X1()), t_s1(X1())))})}});

  // Inequality axioms.
  v.push_back({"le-zero", {seq({f_e(X1())}, {f_le(ZERO(), X1())})}});
  v.push_back({"le-succ",
               {seq({f_le(X1(), X2())}, {f_le(t_s0(X1()), t_s0(X2()))}),
                seq({f_le(X1(), X2())}, {f_le(t_s1(X1()), t_s1(X2()))})}});
  v.push_back({"le-s0s1", {seq({f_le(X1(), X2())}, {f_le(t_s0(X1()), t_s1(X2()))})}});

  // Defining axioms: cond.
  v.push_back({"cond-zero",
               {seq({f_e(X2()), f_e(X3())}, {f_eq(t_cond(ZERO(), X2(), X3()), X2())})}});
  v.push_back({"cond-s0",
               {seq({f_e(t_cond(X1(), X2(), X3()))},
                    {f_eq(t_cond(t_s0(X1()), X2(), X3()), t_cond(X1(), X2(), X3()))})}});
  v.push_back({"cond-s1",
               {seq({f_e(X1()), f_e(X2()), f_e(X3())},
                    {f_eq(t_cond(t_s1(X1()), X2(), X3()), X3())})}});

  // Defining axioms: S.
  v.push_back({"succ-zero", {seq({}, {f_eq(t_succ(ZERO()), ONE())})}});
  v.push_back({"succ-s0", {seq({f_e(t_s1(X1()))}, {f_eq(t_succ(t_s0(X1())), t_s1(X1()))})}});
  v.push_back({"succ-s1",
               {seq({f_e(t_succ(X1()))}, {f_eq(t_succ(t_s1(X1())), t_s0(t_succ(X1())))})}});

  // Defining axioms: len.
  v.push_back({"len-zero", {seq({}, {f_eq(t_len(ZERO()), ZERO())})}});
  v.push_back({"len-s0",
               {seq({f_e(t_succ(t_len(X1())))},
                    {f_eq(t_len(t_s0(X1())), t_cond(X1(), ZERO(), t_succ(t_len(X1()))))})}});
  v.push_back({"len-s1",
               {seq({f_e(t_succ(t_len(X1())))},
                    {f_eq(t_len(t_s1(X1())), t_succ(t_len(X1())))})}});

  // Defining axioms: half.
  v.push_back({"half-zero", {seq({}, {f_eq(t_half(ZERO()), ZERO())})}});
  v.push_back({"half-s0", {seq({f_e(X1())}, {f_eq(t_half(t_s0(X1())), X1())})}});
  v.push_back({"half-s1", {seq({f_e(X1())}, {f_eq(t_half(t_s1(X1())), X1())})}});

  // Defining axioms: bp.
  v.push_back({"bp-zero", {seq({f_e(X1())}, {f_eq(t_boxplus(X1(), ZERO()), X1())})}});
  v.push_back({"bp-s0",
               {seq({f_e(t_s0(t_boxplus(X1(), X2())))},
                    {f_eq(t_boxplus(X1(), t_s0(X2())),
                          t_cond(X2(), X1(), t_s0(t_boxplus(X1(), X2()))))})}});
  v.push_back({"bp-s1",
               {seq({f_e(t_s0(t_boxplus(X1(), X2())))},
                    {f_eq(t_boxplus(X1(), t_s1(X2())), t_s0(t_boxplus(X1(), X2())))})}});

  // Defining axioms: smash.
  v.push_back({"smash-zero", {seq({f_e(X1())}, {f_eq(t_smash(X1(), ZERO()), ONE())})}});
  v.push_back({"smash-s0",
               {seq({f_e(t_boxplus(t_smash(X1(), X2()), X1()))},
                    {f_eq(t_smash(X1(), t_s0(X2())),
                          t_cond(X2(), ONE(), t_boxplus(t_smash(X1(), X2()), X1())))})}});
  v.push_back({"smash-s1",
               {seq({f_e(t_boxplus(t_smash(X1(), X2()), X1()))},
                    {f_eq(t_smash(X1(), t_s1(X2())), t_boxplus(t_smash(X1(), X2()), X1()))})}});

  // Defining axioms: parity.
  v.push_back({"parity-zero", {seq({}, {f_eq(t_parity(ZERO()), ZERO())})}});
  v.push_back({"parity-s0", {seq({f_e(X1())}, {f_eq(t_parity(t_s0(X1())), ZERO())})}});
  v.push_back({"parity-s1", {seq({f_e(X1())}, {f_eq(t_parity(t_s1(X1())), ONE())})}});

  // Defining axioms: +.
  v.push_back({"plus-zero", {seq({f_e(X1())}, {f_eq(t_plus(X1(), ZERO()), X1())})}});
  {
    TermPtr hsum = t_plus(t_half(X1()), X2());
    v.push_back({"plus-s0",
                 {seq({f_e(hsum)},
                      {f_eq(t_plus(X1(), t_s0(X2())),
                            t_cond(t_parity(X1()), t_s0(hsum), t_s1(hsum)))})}});
    v.push_back({"plus-s1",
                 {seq({f_e(hsum)},
                      {f_eq(t_plus(X1(), t_s1(X2())),
                            t_cond(t_parity(X1()), t_s1(hsum), t_s0(t_succ(hsum))))})}});
  }

  // Defining axioms: *.
  v.push_back({"times-zero", {seq({f_e(X1())}, {f_eq(t_times(X1(), ZERO()), ZERO())})}});
  v.push_back({"times-s0",
               {seq({f_e(t_times(X1(), X2()))},
                    {f_eq(t_times(X1(), t_s0(X2())), t_s0(t_times(X1(), X2())))})}});
  v.push_back({"times-s1",
               {seq({f_e(t_plus(t_s0(t_times(X1(), X2())), X1()))},
                    {f_eq(t_times(X1(), t_s1(X2())),
                          t_plus(t_s0(t_times(X1(), X2())), X1()))})}});

  return v;
}

const std::vector<Schema>& schemas() {
  static const std::vector<Schema> table = build_schemas();
  return table;
}

using Subst = std::map<unsigned, TermPtr>;

bool match_term(const TermPtr& pat, const TermPtr& sub, Subst& s) {
  switch (pat->kind) {
    case Term::Kind::Var: {
      auto it = s.find(pat->var);
      if (it != s.end()) return term_equal(it->second, sub);
      s.emplace(pat->var, sub);
      return true;
    }
    case Term::Kind::Zero:
      return sub->kind == Term::Kind::Zero;
    case Term::Kind::Unary:
      return sub->kind == Term::Kind::Unary && sub->uop == pat->uop &&
             match_term(pat->a, sub->a, s);
    case Term::Kind::Binary:
      return sub->kind == Term::Kind::Binary && sub->bop == pat->bop &&
             match_term(pat->a, sub->a, s) && match_term(pat->b, sub->b, s);
    case Term::Kind::Cond:
      return sub->kind == Term::Kind::Cond && match_term(pat->a, sub->a, s) &&
             match_term(pat->b, sub->b, s) && match_term(pat->c, sub->c, s);
  }
  return false;
}

bool match_formula(const FormulaPtr& pat, const FormulaPtr& sub, Subst& s) {
  if (pat->kind != sub->kind) return false;
  switch (pat->kind) {
    case Formula::Kind::Atom:
      if (pat->neg != sub->neg || pat->pred != sub->pred) return false;
      if (!match_term(pat->t1, sub->t1, s)) return false;
      return pat->pred == Pred::E || match_term(pat->t2, sub->t2, s);
    case Formula::Kind::And:
    case Formula::Kind::Or:
      return match_formula(pat->lhs, sub->lhs, s) && match_formula(pat->rhs, sub->rhs, s);
    case Formula::Kind::All:
    case Formula::Kind::Ex:
      throw ContractViolation("axiom schemas are quantifier-free");
  }
  return false;
}

std::optional<Subst> match_sequent(const Sequent& pat, const Sequent& sub) {
  if (pat.ants.size() != sub.ants.size() || pat.sucs.size() != sub.sucs.size()) {
    return std::nullopt;
  }
  Subst s;
  for (std::size_t i = 0; i < pat.ants.size(); ++i) {
    if (!match_formula(pat.ants[i], sub.ants[i], s)) return std::nullopt;
  }
  for (std::size_t i = 0; i < pat.sucs.size(); ++i) {
    if (!match_formula(pat.sucs[i], sub.sucs[i], s)) return std::nullopt;
  }
  return s;
}

std::vector<std::pair<unsigned, TermPtr>> to_pairs(const Subst& s) {
  std::vector<std::pair<unsigned, TermPtr>> out(s.begin(), s.end());
  return out;
}

}  // namespace

std::vector<std::string> axiom_names() {
  std::vector<std::string> out;
  out.reserve(schemas().size());
  for (const Schema& s : schemas()) out.push_back(s.name);
  return out;
}

bool is_axiom_name(const std::string& name) {
  for (const Schema& s : schemas()) {
    if (s.name == name) return true;
  }
  return false;
}

std::vector<Sequent> axiom_patterns(const std::string& name) {
  for (const Schema& s : schemas()) {
    if (s.name == name) return s.patterns;
  }
  throw ContractViolation("unknown axiom schema: " + name);
}

std::optional<std::vector<std::pair<unsigned, TermPtr>>> match_schema(const std::string& name,
                                                                      const Sequent& s) {
  for (const Sequent& pat : axiom_patterns(name)) {
    if (auto subst = match_sequent(pat, s)) return to_pairs(*subst);
  }
  return std::nullopt;
}

std::optional<std::pair<std::string, std::vector<std::pair<unsigned, TermPtr>>>> match_axiom(
    const Sequent& s) {
  for (const Schema& schema : schemas()) {
    for (const Sequent& pat : schema.patterns) {
      if (auto subst = match_sequent(pat, s)) return std::make_pair(schema.name, to_pairs(*subst));
    }
  }
  return std::nullopt;
}

}  // namespace s02e
