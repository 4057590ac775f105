#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "s02e/term.hpp"

namespace s02e {

enum class Pred { Le, Eq, E };

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

// Formulas in negation normal form at the literal level: negation is a
// flag on atoms, never a connective. Quantifiers are bounded; universal
// bounds must be sharply bounded (len-headed), which f_all enforces.
struct Formula {
  enum class Kind { Atom, And, Or, All, Ex };

  Kind kind;

  // Atom: pred over t1 (and t2 for Le/Eq); neg marks a negated literal.
  bool neg = false;
  Pred pred = Pred::Le;
  TermPtr t1, t2;

  // And / Or
  FormulaPtr lhs, rhs;

  // All / Ex. The bound term is scoped outside the binder: occurrences of
  // `var` inside `bound` refer to an outer variable, not the binder.
  unsigned var = 0;
  TermPtr bound;
  FormulaPtr body;
};

FormulaPtr f_le(TermPtr l, TermPtr r);
FormulaPtr f_eq(TermPtr l, TermPtr r);
FormulaPtr f_e(TermPtr t);
FormulaPtr f_neg(const FormulaPtr& atom);  // throws unless a positive atom
FormulaPtr f_and(FormulaPtr l, FormulaPtr r);
FormulaPtr f_or(FormulaPtr l, FormulaPtr r);
FormulaPtr f_all(unsigned var, TermPtr bound, FormulaPtr body);  // bound must be len-headed
FormulaPtr f_ex(unsigned var, TermPtr bound, FormulaPtr body);

bool formula_equal(const FormulaPtr& f, const FormulaPtr& g);
void collect_free_vars(const FormulaPtr& f, std::set<unsigned>& out);
std::set<unsigned> free_vars(const FormulaPtr& f);
bool free_in(const FormulaPtr& f, unsigned index);
bool is_quantifier_free(const FormulaPtr& f);
bool contains_e(const FormulaPtr& f);

// The shapes the bounded truth predicate accepts:
//   Pure1             ex x <= t . all y <= len(s) . A   (A quantifier-free, E-free)
//   SharplyBoundedAll all y <= len(s) . A               (A quantifier-free, E-free)
//   QuantifierFree    no quantifier, no E anywhere
//   EAtom             exactly (E t), positive
// Everything else (including any other occurrence of E, e.g. a negated E
// literal or E under a connective) is NotOneForm.
enum class FormClass { Pure1, SharplyBoundedAll, QuantifierFree, EAtom, NotOneForm };
FormClass classify_form(const FormulaPtr& f);
const char* form_class_name(FormClass c);

// Capture-avoiding substitution of the free variable x<index>. Clashing
// binders are renamed to the smallest variable index that is free
// everywhere relevant.
FormulaPtr substitute_formula(const FormulaPtr& f, unsigned index, const TermPtr& repl);

std::string print_formula(const FormulaPtr& f);

// Sequents are ordered: the structural rules move formulas explicitly.
struct Sequent {
  std::vector<FormulaPtr> ants;
  std::vector<FormulaPtr> sucs;
};

bool sequent_equal(const Sequent& s, const Sequent& t);
std::set<unsigned> free_vars(const Sequent& s);
std::string print_sequent(const Sequent& s);

}  // namespace s02e
