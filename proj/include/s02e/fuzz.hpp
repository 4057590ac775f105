#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "s02e/nat.hpp"
#include "s02e/proof.hpp"
#include "s02e/truth.hpp"

namespace s02e {

struct FuzzOptions {
  std::size_t count = 500;
  std::uint64_t seed = 1;
  Nat u = 8;                         // bound for the sampled soundness audit
  std::size_t soundness_samples = 8; // per node of each accepted proof
  TruthLimits limits;
};

struct FuzzReport {
  std::size_t attempted = 0;
  std::size_t accepted = 0;
  std::size_t rejected = 0;
  // Invariant counters; all three stay zero on a healthy kernel.
  std::size_t valid_rejected = 0;            // built-as-valid proof rejected
  std::size_t empty_endsequent_accepted = 0; // accepted proof of the empty sequent
  std::size_t soundness_failures = 0;        // accepted proof failing a sampled audit
  std::vector<std::string> notes;            // one line per violation
};

inline bool fuzz_clean(const FuzzReport& r) {
  return r.valid_rejected == 0 && r.empty_endsequent_accepted == 0 && r.soundness_failures == 0;
}

// Draws one proof: valid by construction (axiom instances, identity leaves
// and small template derivations grown by structural steps), or, when
// `mutate` is set, such a proof with one random corruption applied.
ProofNodePtr generate_proof(std::mt19937_64& rng, bool mutate);

// Runs `count` seeded generate/check rounds (every third round mutated),
// auditing each accepted proof with a sampled soundness pass.
FuzzReport run_fuzz(const FuzzOptions& opts);

}  // namespace s02e
