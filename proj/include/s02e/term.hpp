#pragma once

#include <memory>
#include <set>
#include <string>

#include "s02e/nat.hpp"

namespace s02e {

enum class UnaryOp { Succ, Half, Len, S0, S1, Parity };
enum class BinaryOp { Plus, Times, Smash, BoxPlus };

struct Term;
using TermPtr = std::shared_ptr<const Term>;

// First-order terms over the constant 0, variables x1, x2, ... and the
// function symbols S, half, len, s0, s1, parity (unary), +, *, #, bp
// (binary) and cond (ternary). Nodes are immutable and freely shared.
struct Term {
  enum class Kind { Zero, Var, Unary, Binary, Cond };

  Kind kind;
  unsigned var = 0;  // Var only; indices start at 1
  UnaryOp uop = UnaryOp::Succ;
  BinaryOp bop = BinaryOp::Plus;
  TermPtr a, b, c;  // unary arg / binary lhs,rhs / cond selector,then,else
};

TermPtr t_zero();
TermPtr t_var(unsigned index);  // throws std::invalid_argument on index 0
TermPtr t_unary(UnaryOp op, TermPtr arg);
TermPtr t_binary(BinaryOp op, TermPtr lhs, TermPtr rhs);
TermPtr t_cond(TermPtr sel, TermPtr then_t, TermPtr else_t);

inline TermPtr t_succ(TermPtr t) { return t_unary(UnaryOp::Succ, std::move(t)); }
inline TermPtr t_half(TermPtr t) { return t_unary(UnaryOp::Half, std::move(t)); }
inline TermPtr t_len(TermPtr t) { return t_unary(UnaryOp::Len, std::move(t)); }
inline TermPtr t_s0(TermPtr t) { return t_unary(UnaryOp::S0, std::move(t)); }
inline TermPtr t_s1(TermPtr t) { return t_unary(UnaryOp::S1, std::move(t)); }
inline TermPtr t_parity(TermPtr t) { return t_unary(UnaryOp::Parity, std::move(t)); }
inline TermPtr t_plus(TermPtr l, TermPtr r) { return t_binary(BinaryOp::Plus, std::move(l), std::move(r)); }
inline TermPtr t_times(TermPtr l, TermPtr r) { return t_binary(BinaryOp::Times, std::move(l), std::move(r)); }
inline TermPtr t_smash(TermPtr l, TermPtr r) { return t_binary(BinaryOp::Smash, std::move(l), std::move(r)); }
inline TermPtr t_boxplus(TermPtr l, TermPtr r) { return t_binary(BinaryOp::BoxPlus, std::move(l), std::move(r)); }

// Shortest binary notation: numeral(0) = 0, numeral(6) = s0(s1(s1 0)).
// The low bit is the outermost symbol; s0 is never applied to 0.
TermPtr numeral(const Nat& n);

bool term_equal(const TermPtr& s, const TermPtr& t);
void collect_free_vars(const TermPtr& t, std::set<unsigned>& out);
std::set<unsigned> free_vars(const TermPtr& t);
bool contains_var(const TermPtr& t, unsigned index);

// Number of subterm occurrences (no sharing), e.g. term_size(s1 0 + s1 0) = 5.
std::size_t term_size(const TermPtr& t);

// Binary-notation values: chains of s0/s1 over 0. Redundant s0 over 0 is
// accepted by numeral_value (it reads the chain as binary), but numeral()
// never produces it.
bool is_numeral(const TermPtr& t);
Nat numeral_value(const TermPtr& t);

// Simultaneous replacement of the free variable x<index>. Terms bind
// nothing, so no capture can occur at this level.
TermPtr substitute_term(const TermPtr& t, unsigned index, const TermPtr& repl);

// A term is sharply bounded as a quantifier bound iff its head symbol is len.
bool sharply_bounded(const TermPtr& t);

std::string print_term(const TermPtr& t);

}  // namespace s02e
