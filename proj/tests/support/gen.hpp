#pragma once

// Seeded random generators for the property tests. Every draw goes through
// an explicit std::mt19937_64, so a failing case is reproducible from the
// seed printed by the test. Generators bias toward small shapes but also
// produce the operators (smash, boxplus) whose values outrun any bound.

#include <cstdint>
#include <random>
#include <vector>

#include "s02e/env.hpp"
#include "s02e/formula.hpp"
#include "s02e/nat.hpp"
#include "s02e/term.hpp"

namespace s02e::gen {

using Rng = std::mt19937_64;

inline std::size_t below(Rng& rng, std::size_t n) {
  return static_cast<std::size_t>(rng() % static_cast<std::uint64_t>(n));
}

// Uniform over [0, 2^bits).
inline Nat nat_bits(Rng& rng, unsigned bits) {
  return uniform_nat(rng, pow2(bits) - 1);
}

// A random term of operator depth <= depth, over x1..x{num_vars}, with
// numeral leaves below 2^numeral_bits.
inline TermPtr rand_term(Rng& rng, unsigned depth, unsigned num_vars,
                         unsigned numeral_bits = 10) {
  if (depth == 0 || below(rng, 4) == 0) {
    switch (below(rng, num_vars == 0 ? 2 : 4)) {
      case 0: return t_zero();
      case 1: return numeral(nat_bits(rng, numeral_bits));
      default: return t_var(1 + static_cast<unsigned>(below(rng, num_vars)));
    }
  }
  const auto sub = [&] { return rand_term(rng, depth - 1, num_vars, numeral_bits); };
  switch (below(rng, 11)) {
    case 0: return t_succ(sub());
    case 1: return t_half(sub());
    case 2: return t_len(sub());
    case 3: return t_s0(sub());
    case 4: return t_s1(sub());
    case 5: return t_parity(sub());
    case 6: return t_plus(sub(), sub());
    case 7: return t_times(sub(), sub());
    case 8: return t_smash(sub(), sub());
    case 9: return t_boxplus(sub(), sub());
    default: return t_cond(sub(), sub(), sub());
  }
}

// An environment for x1..x{num_vars} with values in [0, max].
inline Env rand_env(Rng& rng, unsigned num_vars, const Nat& max) {
  std::vector<Nat> values;
  values.reserve(num_vars);
  for (unsigned i = 0; i < num_vars; ++i) values.push_back(uniform_nat(rng, max));
  return Env::from_values(std::move(values));
}

// A positive or negated comparison/convergence atom.
inline FormulaPtr rand_atom(Rng& rng, unsigned depth, unsigned num_vars,
                            unsigned numeral_bits = 4) {
  const auto sub = [&] { return rand_term(rng, depth, num_vars, numeral_bits); };
  FormulaPtr a;
  switch (below(rng, 3)) {
    case 0: a = f_le(sub(), sub()); break;
    case 1: a = f_eq(sub(), sub()); break;
    default: a = f_e(sub()); break;
  }
  if (below(rng, 3) == 0) a = f_neg(a);
  return a;
}

// A quantifier-free formula (atoms under and/or), possibly with E-atoms.
inline FormulaPtr rand_qf(Rng& rng, unsigned conn_depth, unsigned term_depth,
                          unsigned num_vars) {
  if (conn_depth == 0 || below(rng, 2) == 0) {
    return rand_atom(rng, term_depth, num_vars);
  }
  FormulaPtr l = rand_qf(rng, conn_depth - 1, term_depth, num_vars);
  FormulaPtr r = rand_qf(rng, conn_depth - 1, term_depth, num_vars);
  return below(rng, 2) == 0 ? f_and(l, r) : f_or(l, r);
}

// A quantifier-free, convergence-free formula (the matrix class of the
// 1-forms).
inline FormulaPtr rand_qf_e_free(Rng& rng, unsigned conn_depth, unsigned term_depth,
                                 unsigned num_vars) {
  if (conn_depth == 0 || below(rng, 2) == 0) {
    const auto sub = [&] { return rand_term(rng, term_depth, num_vars, 4); };
    FormulaPtr a = below(rng, 2) == 0 ? f_le(sub(), sub()) : f_eq(sub(), sub());
    if (below(rng, 3) == 0) a = f_neg(a);
    return a;
  }
  FormulaPtr l = rand_qf_e_free(rng, conn_depth - 1, term_depth, num_vars);
  FormulaPtr r = rand_qf_e_free(rng, conn_depth - 1, term_depth, num_vars);
  return below(rng, 2) == 0 ? f_and(l, r) : f_or(l, r);
}

// A 1-form over x1..x{num_vars} (quantified variables use indices above
// num_vars, so generated environments cover exactly the free variables).
inline FormulaPtr rand_one_form(Rng& rng, unsigned num_vars) {
  const unsigned qa = num_vars + 1;  // existential variable
  const unsigned qb = num_vars + 2;  // universal variable
  switch (below(rng, 4)) {
    case 0:  // existential over a sharply bounded universal
      return f_ex(qa, rand_term(rng, 1, num_vars, 3),
                  f_all(qb, t_len(rand_term(rng, 1, num_vars, 3)),
                        rand_qf_e_free(rng, 1, 1, num_vars + 2)));
    case 1:  // sharply bounded universal (matrix may mention the bound variable)
      return f_all(qa, t_len(rand_term(rng, 1, num_vars, 3)),
                   rand_qf_e_free(rng, 1, 1, num_vars + 1));
    case 2:  // quantifier-free, convergence-free
      return rand_qf_e_free(rng, 2, 2, num_vars);
    default:  // bare convergence atom
      return f_e(rand_term(rng, 2, num_vars, 3));
  }
}

}  // namespace s02e::gen
