#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "s02e/env.hpp"
#include "s02e/formula.hpp"
#include "s02e/nat.hpp"
#include "s02e/valuation.hpp"

namespace s02e {

// Witness structure for quantifier-free truth: one node per subformula
// occurrence, pairing the subformula with a truth bit.
struct TruthNode;
using TruthNodePtr = std::shared_ptr<const TruthNode>;

struct TruthNode {
  FormulaPtr formula;
  bool eps = false;
  std::vector<TruthNodePtr> children;
};

// Total on quantifier-free formulas (E literals allowed); throws
// ContractViolation on quantifiers. Leaf bits: a positive literal is true
// iff its argument terms all evaluate within u and the predicate holds of
// the values; a negated <= / = literal is true iff the arguments evaluate
// within u and the predicate fails; everything else -- any divergence, and
// every negated E literal (no clause ever makes one true) -- gets 0.
// And/Or nodes combine their children's bits.
TruthNodePtr build_truth_tree(const FormulaPtr& f, const Env& env, const Nat& u);

Nat encode_truth_tree(const TruthNodePtr& w);

// Size bound for truth-tree codes, mirroring the valuation bound: a
// formula whose code has F bits has at most (F-1)/6 subformula
// occurrences and each tree node's payload costs at most 2F + 15 bits, so
//   E = ((F-1)/6) * (2F + 15) + 1.
Nat truth_size_exponent(const Nat& fCode, const Nat& u);
bool within_truth_size_bound(const Nat& treeCode, const Nat& fCode, const Nat& u);

// Quantifier-free truth: the root bit of the truth tree (asserting the
// tree's code stays within the size bound).
bool t0(const Nat& u, const FormulaPtr& f, const Env& env);

struct TruthLimits {
  // Existential witnesses range over 0..c where c is the evaluated bound;
  // refuse to enumerate past this many candidates. (Universal ranges go up
  // to a bitlength, which is already small.)
  Nat max_witness_range = Nat(1) << 20;
};

// Truth over 1-forms and E-atoms:
//   ex x1 <= t1 . all x2 <= len(t2) . A  --  t1 evaluates to c within u, and
//       some x1 <= c makes len(t2) evaluate to m within u with A true under
//       t0 for every x2 <= m;
//   all x <= len(t) . A                  --  len(t) evaluates to m within u
//       and A is t0-true for every x <= m;
//   quantifier-free / E-atom             --  t0.
// Divergence of a bound term makes the clause false. Quantified variables
// are bound at their own index (Env::with). Throws ContractViolation on
// NotOneForm input, ResourceError when a witness range exceeds limits.
// `trace`, when non-null, receives a human-readable explanation.
bool t(const Nat& u, const FormulaPtr& f, const Env& env, const TruthLimits& limits = {},
       std::string* trace = nullptr);

// For an atomic formula (possibly negated, possibly E): Some(b) when every
// argument term evaluates within u -- then exactly one of the literal and
// its negation is t0-true, except that a negated E literal is never true.
// None when some argument diverges at u (both polarities are then t0-false).
// The decision b reports the positive atom's truth value.
std::optional<bool> decide_atomic(const Nat& u, const FormulaPtr& a, const Env& env);

}  // namespace s02e
