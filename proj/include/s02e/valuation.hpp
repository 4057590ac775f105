#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "s02e/codec.hpp"
#include "s02e/env.hpp"
#include "s02e/nat.hpp"
#include "s02e/term.hpp"

namespace s02e {

// Witness structure for bounded evaluation: one node per subterm
// occurrence, pairing the subterm with its value. A term evaluates under
// bound u exactly when such a tree exists with every value <= u.
struct ValNode;
using ValNodePtr = std::shared_ptr<const ValNode>;

struct ValNode {
  TermPtr term;
  Nat value;
  std::vector<ValNodePtr> children;
};

// Some(tree) iff every subterm occurrence of t (including variable leaves)
// evaluates to a value <= u under env; None as soon as any value exceeds u.
// Throws UnboundVariable if env does not cover t.
std::optional<ValNodePtr> build_valuation_tree(const TermPtr& t, const Env& env, const Nat& u);

// The four defining clauses, checked structurally: (1) every node value
// <= u, (2) leaves are exactly <0, 0> or <x_i, env(x_i)>, (3) the root's
// term is t, (4) each internal node's value is its operator applied to its
// children's values, children matching the subterms in order. Malformed
// trees and uncovered variables yield false, never an exception.
bool verify_valuation_tree(const ValNodePtr& w, const TermPtr& t, const Env& env, const Nat& u);

// Bounded evaluation: Some(c) iff a valuation tree bounded by u exists
// with root value c. Asserts (ContractViolation on failure) that the
// witness tree's code stays within size_bound of the term's code, so the
// existential that this function decides is faithfully bounded.
std::optional<Nat> value_dn(const TermPtr& t, const Env& env, const Nat& u);

Nat encode_valuation_tree(const ValNodePtr& w);

// Size bound for valuation-tree codes. A term whose code has T bits has
// at most (T-1)/6 subterm occurrences, and each tree node's payload costs
// at most 2T + 2*bitlength(u) + 13 bits (tag, term code, value, child
// count), so the whole tree code is below 2^E with
//   E = ((T-1)/6) * (2T + 2*bitlength(u) + 13) + 1.
// The bound is monotone in both arguments.
Nat valuation_size_exponent(const Nat& tCode, const Nat& u);

// 2^E - 1 materialized. Raises ResourceError when E exceeds max_bits
// (the bound is astronomically large long before the tree is); use
// within_valuation_size_bound for comparisons. Raises DecodeError if
// tCode is not a term code.
Nat size_bound(const Nat& tCode, const Nat& u, std::size_t max_bits = std::size_t{1} << 24);

// encode(tree) <= size_bound(tCode, u), compared via bitlengths without
// materializing the bound.
bool within_valuation_size_bound(const Nat& treeCode, const Nat& tCode, const Nat& u);

// Nested s-expressions <(term) value children...> for CLI display.
std::string print_valuation_tree(const ValNodePtr& w);

}  // namespace s02e
