#include "s02e/truth.hpp"

#include <sstream>

#include "s02e/codec.hpp"
#include "s02e/errors.hpp"

namespace s02e {

namespace {

bool leaf_eps(const FormulaPtr& f, const Env& env, const Nat& u) {
  if (f->pred == Pred::E) {
    if (f->neg) return false;  // no clause ever makes a negated E literal true
    return value_dn(f->t1, env, u).has_value();
  }
  auto c1 = value_dn(f->t1, env, u);
  if (!c1) return false;
  auto c2 = value_dn(f->t2, env, u);
  if (!c2) return false;
  const bool pos = f->pred == Pred::Le ? (*c1 <= *c2) : (*c1 == *c2);
  return f->neg ? !pos : pos;
}

TruthNodePtr build_rec(const FormulaPtr& f, const Env& env, const Nat& u) {
  TruthNode node;
  node.formula = f;
  switch (f->kind) {
    case Formula::Kind::Atom:
      node.eps = leaf_eps(f, env, u);
      break;
    case Formula::Kind::And:
    case Formula::Kind::Or: {
      TruthNodePtr l = build_rec(f->lhs, env, u);
      TruthNodePtr r = build_rec(f->rhs, env, u);
      node.eps = f->kind == Formula::Kind::And ? (l->eps && r->eps) : (l->eps || r->eps);
      node.children.push_back(std::move(l));
      node.children.push_back(std::move(r));
      break;
    }
    case Formula::Kind::All:
    case Formula::Kind::Ex:
      throw ContractViolation("build_truth_tree: formula must be quantifier-free");
  }
  return std::make_shared<const TruthNode>(std::move(node));
}

void write_truth_node(BitWriter& w, const TruthNodePtr& node) {
  w.tag(TAG_TRUTH_NODE);
  w.number(encode_formula(node->formula));
  w.bit(node->eps);
  w.number(node->children.size());
  for (const TruthNodePtr& c : node->children) write_truth_node(w, c);
}

}  // namespace

TruthNodePtr build_truth_tree(const FormulaPtr& f, const Env& env, const Nat& u) {
  return build_rec(f, env, u);
}

Nat encode_truth_tree(const TruthNodePtr& w) {
  BitWriter bw;
  write_truth_node(bw, w);
  return bw.finish();
}

Nat truth_size_exponent(const Nat& fCode, const Nat& u) {
  (void)u;  // truth bits are u-independent in width
  const Nat F(static_cast<unsigned long>(bitlength(fCode)));
  const Nat nodes = (F - 1) / 6;
  return nodes * (2 * F + 15) + 1;
}

bool within_truth_size_bound(const Nat& treeCode, const Nat& fCode, const Nat& u) {
  return Nat(static_cast<unsigned long>(bitlength(treeCode))) <= truth_size_exponent(fCode, u);
}

bool t0(const Nat& u, const FormulaPtr& f, const Env& env) {
  TruthNodePtr w = build_truth_tree(f, env, u);
  if (!within_truth_size_bound(encode_truth_tree(w), encode_formula(f), u)) {
    throw ContractViolation("t0: witness tree exceeds its size bound");
  }
  return w->eps;
}

namespace {

// Evaluates a quantifier bound within u, enumerating 0..m on success.
// Universal bounds are len-headed so m is a bitlength; existential bounds
// are arbitrary terms and get the witness-range guard.
std::optional<Nat> bound_value(const TermPtr& bound, const Env& env, const Nat& u) {
  return value_dn(bound, env, u);
}

bool t_rec(const Nat& u, const FormulaPtr& f, const Env& env, const TruthLimits& limits,
           std::string* trace) {
  const FormClass cls = classify_form(f);
  switch (cls) {
    case FormClass::QuantifierFree:
    case FormClass::EAtom: {
      const bool r = t0(u, f, env);
      if (trace) *trace += std::string(r ? "true" : "false") + " by quantifier-free truth\n";
      return r;
    }
    case FormClass::SharplyBoundedAll: {
      auto m = bound_value(f->bound, env, u);
      if (!m) {
        if (trace) *trace += "false: bound " + print_term(f->bound) + " diverges at u\n";
        return false;
      }
      for (Nat x = 0; x <= *m; ++x) {
        if (!t0(u, f->body, env.with(f->var, x))) {
          if (trace) {
            *trace += "false: instance x" + std::to_string(f->var) + " = " + x.get_str() +
                      " fails\n";
          }
          return false;
        }
      }
      if (trace) *trace += "true: all " + Nat(*m + 1).get_str() + " instances hold\n";
      return true;
    }
    case FormClass::Pure1: {
      auto c = bound_value(f->bound, env, u);
      if (!c) {
        if (trace) *trace += "false: bound " + print_term(f->bound) + " diverges at u\n";
        return false;
      }
      if (*c > limits.max_witness_range) {
        throw ResourceError("witness range 0.." + c->get_str() + " exceeds the limit " +
                            limits.max_witness_range.get_str());
      }
      const FormulaPtr inner = f->body;  // the sharply bounded universal
      for (Nat x1 = 0; x1 <= *c; ++x1) {
        Env env1 = env.with(f->var, x1);
        auto m = bound_value(inner->bound, env1, u);
        if (!m) continue;
        bool all_ok = true;
        for (Nat x2 = 0; x2 <= *m; ++x2) {
          if (!t0(u, inner->body, env1.with(inner->var, x2))) {
            all_ok = false;
            break;
          }
        }
        if (all_ok) {
          if (trace) {
            *trace += "true: witness x" + std::to_string(f->var) + " = " + x1.get_str() + "\n";
          }
          return true;
        }
      }
      if (trace) *trace += "false: no witness in 0.." + c->get_str() + "\n";
      return false;
    }
    case FormClass::NotOneForm:
      break;
  }
  throw ContractViolation("t: formula is neither a 1-form nor an E-atom: " + print_formula(f));
}

}  // namespace

bool t(const Nat& u, const FormulaPtr& f, const Env& env, const TruthLimits& limits,
       std::string* trace) {
  return t_rec(u, f, env, limits, trace);
}

std::optional<bool> decide_atomic(const Nat& u, const FormulaPtr& a, const Env& env) {
  if (a->kind != Formula::Kind::Atom) {
    throw ContractViolation("decide_atomic: formula is not atomic");
  }
  if (a->pred == Pred::E) {
    auto c = value_dn(a->t1, env, u);
    if (!c) return std::nullopt;
    return true;
  }
  auto c1 = value_dn(a->t1, env, u);
  if (!c1) return std::nullopt;
  auto c2 = value_dn(a->t2, env, u);
  if (!c2) return std::nullopt;
  return a->pred == Pred::Le ? (*c1 <= *c2) : (*c1 == *c2);
}

}  // namespace s02e
