#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "s02e/env.hpp"
#include "s02e/nat.hpp"
#include "s02e/proof.hpp"
#include "s02e/truth.hpp"

namespace s02e {

// Budget arithmetic over proof codes: spending a code shifts the bound
// down by the code's bitlength, granting one shifts it up and mixes the
// code back in. For any u, r: budget_sub(budget_concat(u, r), r) == u.
Nat budget_concat(const Nat& u, const Nat& r);  // u * 2^bitlength(r) + r
Nat budget_sub(const Nat& u, const Nat& r);     // floor(u / 2^bitlength(r))

// One soundness instance for a proof node with subproof code rCode under
// assignment env: if every antecedent is true at bound uPrime then some
// succedent is true at bound budget_concat(uPrime, rCode).
// Contract: env covers the sequent's free variables with values <= u, and
// uPrime <= budget_sub(u, rCode); violations throw ContractViolation.
bool check_node_soundness(const Nat& u, const Sequent& s, const Nat& rCode, const Nat& uPrime,
                          const Env& env, const TruthLimits& limits = {});

enum class SoundnessMode { Enumerate, Sample };

struct SoundnessOptions {
  Nat u = 8;
  SoundnessMode mode = SoundnessMode::Enumerate;
  std::size_t samples = 200;        // per node when sampling
  std::uint64_t seed = 0;
  // Enumerate switches to sampling (with a note) past this many instances
  // per node; the S02E_ENUM_CEILING environment variable overrides the
  // default.
  std::size_t enum_ceiling = 0;     // 0 = use default_enum_ceiling()
  TruthLimits limits;
};

std::size_t default_enum_ceiling();

struct Counterexample {
  std::vector<std::pair<unsigned, Nat>> rho;  // (variable, value), sorted
  Nat uPrime;
};

struct NodeOutcome {
  std::string path;
  RuleTag rule = RuleTag::Identity;
  bool holds = true;
  bool sampled = false;
  std::uint64_t points = 0;  // instances actually checked
  std::optional<Counterexample> counterexample;
};

struct SoundnessReport {
  bool ok = true;            // no node produced a counterexample
  Nat u;
  bool sampled_any = false;
  std::vector<NodeOutcome> nodes;
  std::vector<std::string> notes;
};

// Audits every node of the proof: assignments range over {0..u} for the
// sequent's free variables and uPrime over {0..budget_sub(u, rCode)}.
// Does not re-run check_proof; callers validate acceptance separately.
SoundnessReport check_proof_soundness(const ProofNodePtr& p, const SoundnessOptions& opts);

}  // namespace s02e
