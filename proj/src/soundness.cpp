#include "s02e/soundness.hpp"

#include <cstdlib>
#include <set>

#include "s02e/errors.hpp"

namespace s02e {

Nat budget_concat(const Nat& u, const Nat& r) { return shift_left(u, bitlength(r)) + r; }

Nat budget_sub(const Nat& u, const Nat& r) { return shift_right(u, bitlength(r)); }

std::size_t default_enum_ceiling() {
  if (const char* s = std::getenv("S02E_ENUM_CEILING")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(s, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 2'000'000;
}

bool check_node_soundness(const Nat& u, const Sequent& s, const Nat& rCode, const Nat& uPrime,
                          const Env& env, const TruthLimits& limits) {
  if (uPrime > budget_sub(u, rCode)) {
    throw ContractViolation("check_node_soundness: uPrime exceeds budget_sub(u, rCode)");
  }
  for (unsigned v : free_vars(s)) {
    if (!env.has(v)) {
      throw ContractViolation("check_node_soundness: assignment misses x" + std::to_string(v));
    }
    if (env.get(v) > u) {
      throw ContractViolation("check_node_soundness: assignment for x" + std::to_string(v) +
                              " exceeds u");
    }
  }
  for (const FormulaPtr& a : s.ants) {
    if (!t(uPrime, a, env, limits)) return true;  // vacuously sound at this instance
  }
  const Nat lifted = budget_concat(uPrime, rCode);
  for (const FormulaPtr& b : s.sucs) {
    if (t(lifted, b, env, limits)) return true;
  }
  return false;
}

namespace {

struct NodeDomain {
  std::vector<unsigned> vars;  // sorted distinct free variables
  Nat u_prime_max;             // budget_sub(u, rCode)
  Nat points;                  // (u+1)^k * (u_prime_max+1)
};

NodeDomain node_domain(const Nat& u, const NodeMeta& meta) {
  NodeDomain d;
  const std::set<unsigned> fv = free_vars(meta.sequent);
  d.vars.assign(fv.begin(), fv.end());
  d.u_prime_max = budget_sub(u, meta.rCode);
  d.points = d.u_prime_max + 1;
  for (std::size_t i = 0; i < d.vars.size(); ++i) d.points *= u + 1;
  return d;
}

Env env_of(const std::vector<unsigned>& vars, const std::vector<Nat>& values) {
  std::vector<std::pair<unsigned, Nat>> assignments;
  assignments.reserve(vars.size());
  for (std::size_t i = 0; i < vars.size(); ++i) assignments.emplace_back(vars[i], values[i]);
  return Env::from_assignments(assignments);
}

Counterexample make_counterexample(const std::vector<unsigned>& vars,
                                   const std::vector<Nat>& values, const Nat& uPrime) {
  Counterexample ce;
  for (std::size_t i = 0; i < vars.size(); ++i) ce.rho.emplace_back(vars[i], values[i]);
  ce.uPrime = uPrime;
  return ce;
}

// Odometer over assignments {0..u}^k, last variable fastest; returns false
// after the last tuple.
bool advance(std::vector<Nat>& values, const Nat& u) {
  for (std::size_t i = values.size(); i > 0; --i) {
    if (values[i - 1] < u) {
      ++values[i - 1];
      for (std::size_t j = i; j < values.size(); ++j) values[j] = 0;
      return true;
    }
    values[i - 1] = 0;
  }
  return false;
}

NodeOutcome enumerate_node(const Nat& u, const NodeMeta& meta, const NodeDomain& d,
                           const TruthLimits& limits) {
  NodeOutcome out;
  out.path = meta.path;
  out.rule = meta.rule;
  std::vector<Nat> values(d.vars.size(), Nat(0));
  do {
    const Env env = env_of(d.vars, values);
    for (Nat uPrime(0); uPrime <= d.u_prime_max; ++uPrime) {
      ++out.points;
      if (!check_node_soundness(u, meta.sequent, meta.rCode, uPrime, env, limits)) {
        out.holds = false;
        out.counterexample = make_counterexample(d.vars, values, uPrime);
        return out;
      }
    }
  } while (advance(values, u));
  return out;
}

NodeOutcome sample_node(const Nat& u, const NodeMeta& meta, const NodeDomain& d,
                        std::size_t samples, std::mt19937_64& rng, const TruthLimits& limits) {
  NodeOutcome out;
  out.path = meta.path;
  out.rule = meta.rule;
  out.sampled = true;
  std::vector<Nat> values(d.vars.size());
  for (std::size_t k = 0; k < samples; ++k) {
    for (Nat& v : values) v = uniform_nat(rng, u);
    const Nat uPrime = uniform_nat(rng, d.u_prime_max);
    const Env env = env_of(d.vars, values);
    ++out.points;
    if (!check_node_soundness(u, meta.sequent, meta.rCode, uPrime, env, limits)) {
      out.holds = false;
      out.counterexample = make_counterexample(d.vars, values, uPrime);
      return out;
    }
  }
  return out;
}

}  // namespace

SoundnessReport check_proof_soundness(const ProofNodePtr& p, const SoundnessOptions& opts) {
  SoundnessReport report;
  report.u = opts.u;
  const std::size_t ceiling = opts.enum_ceiling ? opts.enum_ceiling : default_enum_ceiling();
  std::mt19937_64 rng(opts.seed);
  for (const NodeMeta& meta : proof_meta(p)) {
    const NodeDomain d = node_domain(opts.u, meta);
    NodeOutcome out;
    if (opts.mode == SoundnessMode::Sample) {
      out = sample_node(opts.u, meta, d, opts.samples, rng, opts.limits);
    } else if (d.points > static_cast<unsigned long>(ceiling)) {
      out = sample_node(opts.u, meta, d, opts.samples, rng, opts.limits);
      report.notes.push_back("node '" + (meta.path.empty() ? std::string("root") : meta.path) +
                             "': " + d.points.get_str() + " instances exceed the ceiling of " +
                             std::to_string(ceiling) + "; checked " +
                             std::to_string(opts.samples) + " sampled instances instead");
    } else {
      out = enumerate_node(opts.u, meta, d, opts.limits);
    }
    report.ok = report.ok && out.holds;
    report.sampled_any = report.sampled_any || out.sampled;
    report.nodes.push_back(std::move(out));
  }
  return report;
}

}  // namespace s02e
