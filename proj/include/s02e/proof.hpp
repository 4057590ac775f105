#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "s02e/codec.hpp"
#include "s02e/formula.hpp"
#include "s02e/nat.hpp"

namespace s02e {

// The sequent calculus: Identity and Axiom are leaves; the rest are the
// structural rules (weakening, contraction, exchange on either side),
// the literal-negation rules, the connective rules, the bounded
// quantifier rules and Cut. Left rules touch the front of the antecedent
// list, right rules the back of the succedent list; exchange moves one
// adjacent pair.
enum class RuleTag {
  Identity,
  Axiom,
  WeakL,
  WeakR,
  ContrL,
  ContrR,
  ExchL,
  ExchR,
  NegL,
  NegR,
  AndL1,
  AndL2,
  AndR,
  OrL,
  OrR1,
  OrR2,
  AllL,
  AllR,
  ExL,
  ExR,
  Cut,
};

const char* rule_name(RuleTag r);
std::optional<RuleTag> rule_from_name(const std::string& name);

struct ProofNode;
using ProofNodePtr = std::shared_ptr<const ProofNode>;

struct ProofNode {
  RuleTag rule = RuleTag::Identity;
  std::string axiom;  // schema name when rule == Axiom
  Sequent concl;
  // Optional hints (var index, term); checked against the inferred
  // instantiation when present, never required.
  std::vector<std::pair<unsigned, TermPtr>> inst;
  std::vector<ProofNodePtr> prems;
};

ProofNodePtr make_node(RuleTag rule, Sequent concl, std::vector<ProofNodePtr> prems = {},
                       std::string axiom = {},
                       std::vector<std::pair<unsigned, TermPtr>> inst = {});

// ---- axiom schemas ----------------------------------------------------

// The schema table, in definition order. Schema sequents use x1, x2, x3 as
// the substitutable variables; a few schemas (successor shifts) come in an
// i = 0 / i = 1 pair under one name.
std::vector<std::string> axiom_names();
bool is_axiom_name(const std::string& name);

// The schema's defining sequents (one or several concrete patterns).
std::vector<Sequent> axiom_patterns(const std::string& name);

// First-order matching of s against the named schema: Some(substitution on
// x1..x3) iff s is a substitution instance of one of its patterns.
std::optional<std::vector<std::pair<unsigned, TermPtr>>> match_schema(const std::string& name,
                                                                      const Sequent& s);

// First match over the fixed schema order.
std::optional<std::pair<std::string, std::vector<std::pair<unsigned, TermPtr>>>> match_axiom(
    const Sequent& s);

// ---- checking ----------------------------------------------------------

enum class CheckErrorCategory {
  RuleShape,             // conclusion does not follow from the premises
  PremiseCount,
  NotAtomic,             // identity on a non-atomic or negated formula
  AxiomMismatch,         // sequent is not an instance of the named schema
  InstantiationMismatch, // quantifier rule premise disagrees with the bound/term
  Eigenvariable,         // eigenvariable occurs in context or bound
  NotOneForm,            // a sequent formula outside 1-forms / E-atoms
  FreeVarNormalForm,     // eigenvariable reused or escaping its subtree
  UnknownAxiom,
};

const char* check_error_category_name(CheckErrorCategory c);

struct CheckResult {
  bool ok = true;
  CheckErrorCategory category = CheckErrorCategory::RuleShape;
  std::string message;
  std::string node_path;  // dotted child indices from the root, "" = root
};

CheckResult check_ok();
CheckResult check_fail(CheckErrorCategory cat, std::string msg, std::string path = {});

// Local validation of one inference: premise count, principal/side formula
// shapes, instantiation agreement, eigenvariable side conditions.
// Premises are taken as given (not recursively checked).
CheckResult check_rule(const ProofNode& node);

// Full proof acceptance: every node passes check_rule, every formula in
// every sequent is a 1-form or E-atom, and the proof is in free variable
// normal form: each eigenvariable is introduced by exactly one inference
// and occurs only inside that inference's premise subtree.
CheckResult check_proof(const ProofNodePtr& p);

// ---- per-node data for the soundness checker ---------------------------

struct NodeMeta {
  std::string path;
  Sequent sequent;
  RuleTag rule;
  std::size_t k_r = 0;  // number of distinct free variables in the sequent
  Nat rCode;            // code of the subproof rooted at this node
};

void write_proof(BitWriter& w, const ProofNodePtr& p);
Nat encode_proof(const ProofNodePtr& p);
ProofNodePtr read_proof(BitReader& r);
ProofNodePtr decode_proof(const Nat& code);

// Pre-order list of node metadata (root first); paths are dotted child
// indices ("" for the root, "1.0" for the first child of the second child).
std::vector<NodeMeta> proof_meta(const ProofNodePtr& p);

// ---- text form -----------------------------------------------------------
//
//   proof := (proof <tag> (concl <sequent>) [(inst (x<k> <term>)...)]
//             (prems <proof>...))
//   tag   := identity | axiom:<name> | weak-l | weak-r | contr-l | contr-r |
//            exch-l | exch-r | neg-l | neg-r | and-l1 | and-l2 | and-r |
//            or-l | or-r1 | or-r2 | all-l | all-r | ex-l | ex-r | cut
ProofNodePtr parse_proof(const std::string& text);
std::string print_proof(const ProofNodePtr& p);

bool proof_equal(const ProofNodePtr& p, const ProofNodePtr& q);

}  // namespace s02e
