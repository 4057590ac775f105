#pragma once

#include <cstdint>
#include <optional>

#include "s02e/env.hpp"
#include "s02e/term.hpp"

namespace s02e {

// Standard interpretations over the naturals:
//   S n = n+1        half n = floor(n/2)   len n = bitlength(n)
//   s0 n = 2n        s1 n = 2n+1           parity n = n mod 2
//   n + m, n * m     n # m = 2^(len n * len m)
//   bp n m = n * 2^(len m)                 cond(n,a,b) = a if n = 0 else b
// Note s0(0) = 0.

struct EvalLimits {
  // Refuse intermediate values wider than this many bits (towers of # blow
  // up doubly exponentially). Guards raise ResourceError; results are
  // never silently altered.
  std::size_t max_value_bits = std::size_t{1} << 26;
};

Nat eval_closed(const TermPtr& t, const Env& env, const EvalLimits& limits = {});

// Like eval_closed, but returns nullopt as soon as the result must exceed
// the cap, without materializing wide values. Used by generators.
std::optional<Nat> eval_closed_capped(const TermPtr& t, const Env& env, std::size_t max_value_bits);

struct RewriteStats {
  std::uint64_t steps = 0;        // rule applications
  std::size_t max_bits = 0;       // widest numeral produced
  std::uint64_t budget = 0;       // final step budget (see eval_rewrite)
};

// Independent route: normalizes the term by the defining equations read
// left to right, innermost except that the cond rules fire once the
// selector is normal (only the selected branch is then evaluated; strict
// branch evaluation would duplicate the recursive sum in x + s_i y and
// take exponentially many steps). Variables are first replaced by
// numerals for their env values. Exceeding the step budget
// 10 * term_size * (max bitlength + 1) * (max bitlength + 2) raises
// RewriteDiverged. The budget is quadratic in the widest numeral because
// deciding a cond selector walks its run of zero digits one rule
// application at a time (len of a power of two pays that walk at every
// digit); within that allowance a trip means a rule-coverage bug, not a
// long computation.
Nat eval_rewrite(const TermPtr& t, const Env& env, RewriteStats* stats = nullptr);

}  // namespace s02e
