#include "s02e/formula.hpp"

#include <sstream>
#include <stdexcept>

namespace s02e {

namespace {

FormulaPtr make_atom(Pred p, bool neg, TermPtr t1, TermPtr t2) {
  auto f = std::make_shared<Formula>();
  f->kind = Formula::Kind::Atom;
  f->neg = neg;
  f->pred = p;
  f->t1 = std::move(t1);
  f->t2 = std::move(t2);
  return f;
}

}  // namespace

FormulaPtr f_le(TermPtr l, TermPtr r) { return make_atom(Pred::Le, false, std::move(l), std::move(r)); }
FormulaPtr f_eq(TermPtr l, TermPtr r) { return make_atom(Pred::Eq, false, std::move(l), std::move(r)); }
FormulaPtr f_e(TermPtr t) { return make_atom(Pred::E, false, std::move(t), nullptr); }

FormulaPtr f_neg(const FormulaPtr& atom) {
  if (atom->kind != Formula::Kind::Atom || atom->neg) {
    throw std::invalid_argument("negation applies to positive atoms only");
  }
  return make_atom(atom->pred, true, atom->t1, atom->t2);
}

FormulaPtr f_and(FormulaPtr l, FormulaPtr r) {
  auto f = std::make_shared<Formula>();
  f->kind = Formula::Kind::And;
  f->lhs = std::move(l);
  f->rhs = std::move(r);
  return f;
}

FormulaPtr f_or(FormulaPtr l, FormulaPtr r) {
  auto f = std::make_shared<Formula>();
  f->kind = Formula::Kind::Or;
  f->lhs = std::move(l);
  f->rhs = std::move(r);
  return f;
}

FormulaPtr f_all(unsigned var, TermPtr bound, FormulaPtr body) {
  if (var == 0) throw std::invalid_argument("variable indices start at 1");
  if (!sharply_bounded(bound)) {
    throw std::invalid_argument("universal bound must be sharply bounded (len ...)");
  }
  auto f = std::make_shared<Formula>();
  f->kind = Formula::Kind::All;
  f->var = var;
  f->bound = std::move(bound);
  f->body = std::move(body);
  return f;
}

FormulaPtr f_ex(unsigned var, TermPtr bound, FormulaPtr body) {
  if (var == 0) throw std::invalid_argument("variable indices start at 1");
  auto f = std::make_shared<Formula>();
  f->kind = Formula::Kind::Ex;
  f->var = var;
  f->bound = std::move(bound);
  f->body = std::move(body);
  return f;
}

bool formula_equal(const FormulaPtr& f, const FormulaPtr& g) {
  if (f.get() == g.get()) return true;
  if (!f || !g) return false;
  if (f->kind != g->kind) return false;
  switch (f->kind) {
    case Formula::Kind::Atom:
      if (f->neg != g->neg || f->pred != g->pred) return false;
      if (!term_equal(f->t1, g->t1)) return false;
      return f->pred == Pred::E || term_equal(f->t2, g->t2);
    case Formula::Kind::And:
    case Formula::Kind::Or:
      return formula_equal(f->lhs, g->lhs) && formula_equal(f->rhs, g->rhs);
    case Formula::Kind::All:
    case Formula::Kind::Ex:
      return f->var == g->var && term_equal(f->bound, g->bound) && formula_equal(f->body, g->body);
  }
  return false;
}

void collect_free_vars(const FormulaPtr& f, std::set<unsigned>& out) {
  switch (f->kind) {
    case Formula::Kind::Atom:
      collect_free_vars(f->t1, out);
      if (f->pred != Pred::E) collect_free_vars(f->t2, out);
      return;
    case Formula::Kind::And:
    case Formula::Kind::Or:
      collect_free_vars(f->lhs, out);
      collect_free_vars(f->rhs, out);
      return;
    case Formula::Kind::All:
    case Formula::Kind::Ex: {
      // The bound is outside the binder; only the body occurrences are bound.
      collect_free_vars(f->bound, out);
      std::set<unsigned> body_vars;
      collect_free_vars(f->body, body_vars);
      body_vars.erase(f->var);
      out.insert(body_vars.begin(), body_vars.end());
      return;
    }
  }
}

std::set<unsigned> free_vars(const FormulaPtr& f) {
  std::set<unsigned> out;
  collect_free_vars(f, out);
  return out;
}

bool free_in(const FormulaPtr& f, unsigned index) {
  switch (f->kind) {
    case Formula::Kind::Atom:
      return contains_var(f->t1, index) || (f->pred != Pred::E && contains_var(f->t2, index));
    case Formula::Kind::And:
    case Formula::Kind::Or:
      return free_in(f->lhs, index) || free_in(f->rhs, index);
    case Formula::Kind::All:
    case Formula::Kind::Ex:
      if (contains_var(f->bound, index)) return true;
      return f->var != index && free_in(f->body, index);
  }
  return false;
}

bool is_quantifier_free(const FormulaPtr& f) {
  switch (f->kind) {
    case Formula::Kind::Atom:
      return true;
    case Formula::Kind::And:
    case Formula::Kind::Or:
      return is_quantifier_free(f->lhs) && is_quantifier_free(f->rhs);
    case Formula::Kind::All:
    case Formula::Kind::Ex:
      return false;
  }
  return false;
}

bool contains_e(const FormulaPtr& f) {
  switch (f->kind) {
    case Formula::Kind::Atom:
      return f->pred == Pred::E;
    case Formula::Kind::And:
    case Formula::Kind::Or:
      return contains_e(f->lhs) || contains_e(f->rhs);
    case Formula::Kind::All:
    case Formula::Kind::Ex:
      return contains_e(f->body);
  }
  return false;
}

FormClass classify_form(const FormulaPtr& f) {
  const auto qf_e_free = [](const FormulaPtr& g) {
    return is_quantifier_free(g) && !contains_e(g);
  };
  switch (f->kind) {
    case Formula::Kind::Atom:
      if (f->pred == Pred::E) return f->neg ? FormClass::NotOneForm : FormClass::EAtom;
      return FormClass::QuantifierFree;
    case Formula::Kind::And:
    case Formula::Kind::Or:
      return qf_e_free(f) ? FormClass::QuantifierFree : FormClass::NotOneForm;
    case Formula::Kind::All:
      return qf_e_free(f->body) ? FormClass::SharplyBoundedAll : FormClass::NotOneForm;
    case Formula::Kind::Ex:
      // A pure 1-form requires a sharply bounded universal directly inside.
      if (f->body->kind == Formula::Kind::All && qf_e_free(f->body->body)) return FormClass::Pure1;
      return FormClass::NotOneForm;
  }
  return FormClass::NotOneForm;
}

const char* form_class_name(FormClass c) {
  switch (c) {
    case FormClass::Pure1: return "Pure1";
    case FormClass::SharplyBoundedAll: return "SharplyBoundedAll";
    case FormClass::QuantifierFree: return "QuantifierFree";
    case FormClass::EAtom: return "EAtom";
    case FormClass::NotOneForm: return "NotOneForm";
  }
  return "?";
}

namespace {

unsigned smallest_fresh(const std::set<unsigned>& used) {
  unsigned k = 1;
  while (used.count(k)) ++k;
  return k;
}

}  // namespace

FormulaPtr substitute_formula(const FormulaPtr& f, unsigned index, const TermPtr& repl) {
  switch (f->kind) {
    case Formula::Kind::Atom: {
      TermPtr t1 = substitute_term(f->t1, index, repl);
      TermPtr t2 = f->pred == Pred::E ? nullptr : substitute_term(f->t2, index, repl);
      if (t1.get() == f->t1.get() && t2.get() == f->t2.get()) return f;
      auto g = std::make_shared<Formula>(*f);
      g->t1 = std::move(t1);
      g->t2 = std::move(t2);
      return g;
    }
    case Formula::Kind::And:
    case Formula::Kind::Or: {
      FormulaPtr l = substitute_formula(f->lhs, index, repl);
      FormulaPtr r = substitute_formula(f->rhs, index, repl);
      if (l.get() == f->lhs.get() && r.get() == f->rhs.get()) return f;
      auto g = std::make_shared<Formula>(*f);
      g->lhs = std::move(l);
      g->rhs = std::move(r);
      return g;
    }
    case Formula::Kind::All:
    case Formula::Kind::Ex: {
      TermPtr bound = substitute_term(f->bound, index, repl);
      unsigned var = f->var;
      FormulaPtr body = f->body;
      if (index != var && free_in(body, index)) {
        if (contains_var(repl, var)) {
          // The binder would capture a variable of the replacement: rename
          // it to the smallest index unused anywhere relevant.
          std::set<unsigned> used = free_vars(body);
          collect_free_vars(repl, used);
          used.insert(index);
          used.insert(var);
          unsigned fresh = smallest_fresh(used);
          body = substitute_formula(body, var, t_var(fresh));
          var = fresh;
        }
        body = substitute_formula(body, index, repl);
      }
      if (bound.get() == f->bound.get() && body.get() == f->body.get() && var == f->var) return f;
      auto g = std::make_shared<Formula>(*f);
      g->var = var;
      g->bound = std::move(bound);
      g->body = std::move(body);
      return g;
    }
  }
  return f;
}

std::string print_formula(const FormulaPtr& f) {
  std::ostringstream os;
  switch (f->kind) {
    case Formula::Kind::Atom: {
      std::string inner;
      if (f->pred == Pred::E) {
        inner = "(E " + print_term(f->t1) + ")";
      } else {
        inner = std::string("(") + (f->pred == Pred::Le ? "<=" : "=") + " " + print_term(f->t1) + " " +
                print_term(f->t2) + ")";
      }
      os << (f->neg ? "(not " + inner + ")" : inner);
      break;
    }
    case Formula::Kind::And:
      os << "(and " << print_formula(f->lhs) << " " << print_formula(f->rhs) << ")";
      break;
    case Formula::Kind::Or:
      os << "(or " << print_formula(f->lhs) << " " << print_formula(f->rhs) << ")";
      break;
    case Formula::Kind::All:
      os << "(all x" << f->var << " " << print_term(f->bound) << " " << print_formula(f->body) << ")";
      break;
    case Formula::Kind::Ex:
      os << "(ex x" << f->var << " " << print_term(f->bound) << " " << print_formula(f->body) << ")";
      break;
  }
  return os.str();
}

bool sequent_equal(const Sequent& s, const Sequent& t) {
  if (s.ants.size() != t.ants.size() || s.sucs.size() != t.sucs.size()) return false;
  for (std::size_t i = 0; i < s.ants.size(); ++i) {
    if (!formula_equal(s.ants[i], t.ants[i])) return false;
  }
  for (std::size_t i = 0; i < s.sucs.size(); ++i) {
    if (!formula_equal(s.sucs[i], t.sucs[i])) return false;
  }
  return true;
}

std::set<unsigned> free_vars(const Sequent& s) {
  std::set<unsigned> out;
  for (const auto& f : s.ants) collect_free_vars(f, out);
  for (const auto& f : s.sucs) collect_free_vars(f, out);
  return out;
}

std::string print_sequent(const Sequent& s) {
  std::ostringstream os;
  os << "(seq (ants";
  for (const auto& f : s.ants) os << " " << print_formula(f);
  os << ") (sucs";
  for (const auto& f : s.sucs) os << " " << print_formula(f);
  os << "))";
  return os.str();
}

}  // namespace s02e
