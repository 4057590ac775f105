// Command line front end for the bounded-arithmetic kernel.
//
// Exit codes, uniform across subcommands:
//   0  the requested computation completed (including "false"/"diverges"
//      answers and help output)
//   1  a semantic rejection or counterexample: proof rejected, soundness
//      audit failed, fuzzing found an invariant violation, evaluator
//      disagreement
//   2  unusable input: malformed command line, unreadable file, parse
//      error, out-of-domain request, or a resource guard refusing to run

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "s02e/corpus.hpp"
#include "s02e/errors.hpp"
#include "s02e/fuzz.hpp"
#include "s02e/parse.hpp"
#include "s02e/proof.hpp"
#include "s02e/semantics.hpp"
#include "s02e/soundness.hpp"
#include "s02e/truth.hpp"
#include "s02e/valuation.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace s02e;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Env parse_env(const std::string& csv, json& report) {
  std::vector<Nat> values;
  json j = json::array();
  if (!csv.empty()) {
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        values.emplace_back(item);
      } catch (const std::invalid_argument&) {
        throw InputError("--env expects comma-separated decimal naturals, got '" + item + "'");
      }
      if (values.back() < 0) throw InputError("--env values must be naturals");
      j.push_back(values.back().get_str());
    }
  }
  report["env"] = std::move(j);
  return Env::from_values(std::move(values));
}

Nat parse_nat_arg(const std::string& text, const char* what) {
  try {
    Nat n(text);
    if (n < 0) throw InputError(std::string(what) + " must be a natural");
    return n;
  } catch (const std::invalid_argument&) {
    throw InputError(std::string(what) + " expects a decimal natural, got '" + text + "'");
  }
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void emit(const json& report, const std::string& output_path) {
  const std::string text = report.dump(2);
  std::cout << text << "\n";
  if (!output_path.empty()) {
    std::ofstream f(output_path, std::ios::binary);
    if (!f) throw InputError("cannot write report to '" + output_path + "'");
    f << text << "\n";
  }
}

int run_oracle_term(const std::string& term_text, const std::string& env_csv,
                    const std::string& output) {
  json report;
  report["term"] = term_text;
  const TermPtr t = parse_term(term_text);
  const Env env = parse_env(env_csv, report);
  const Nat closed = eval_closed(t, env);
  RewriteStats stats;
  const Nat rewritten = eval_rewrite(t, env, &stats);
  report["value"] = closed.get_str();
  report["rewriteValue"] = rewritten.get_str();
  report["rewriteSteps"] = stats.steps;
  report["agree"] = (closed == rewritten);
  emit(report, output);
  return closed == rewritten ? 0 : 1;
}

int run_eval_term(const std::string& term_text, const std::string& env_csv,
                  const std::string& bound_text, bool tree, const std::string& output) {
  json report;
  report["term"] = term_text;
  const TermPtr t = parse_term(term_text);
  const Env env = parse_env(env_csv, report);
  const Nat u = parse_nat_arg(bound_text, "--bound");
  report["bound"] = u.get_str();
  const std::optional<Nat> v = value_dn(t, env, u);
  report["converges"] = v.has_value();
  if (v) report["value"] = v->get_str();
  if (tree) {
    const auto w = build_valuation_tree(t, env, u);
    report["tree"] = w ? json(print_valuation_tree(*w)) : json(nullptr);
    if (w) {
      const Nat code = encode_valuation_tree(*w);
      report["treeCodeBits"] = bitlength(code);
      report["withinSizeBound"] = within_valuation_size_bound(code, encode_term(t), u);
    }
  }
  emit(report, output);
  return 0;
}

int run_truth(const std::string& formula_text, const std::string& env_csv,
              const std::string& bound_text, const std::string& mode, bool want_trace,
              const std::string& output) {
  json report;
  report["formula"] = formula_text;
  const FormulaPtr f = parse_formula(formula_text);
  const Env env = parse_env(env_csv, report);
  const Nat u = parse_nat_arg(bound_text, "--bound");
  report["bound"] = u.get_str();
  report["mode"] = mode;
  bool truth = false;
  if (mode == "t0") {
    if (!is_quantifier_free(f)) {
      throw InputError("mode t0 handles quantifier-free formulas only");
    }
    truth = t0(u, f, env);
  } else {
    if (classify_form(f) == FormClass::NotOneForm) {
      throw InputError("mode t handles 1-forms and convergence atoms only; formula is " +
                       std::string(form_class_name(classify_form(f))));
    }
    std::string trace;
    truth = t(u, f, env, {}, want_trace ? &trace : nullptr);
    if (want_trace) report["trace"] = trace;
  }
  report["truth"] = truth;
  emit(report, output);
  return 0;
}

json check_to_json(const CheckResult& r) {
  json j;
  j["accepted"] = r.ok;
  if (!r.ok) {
    j["category"] = check_error_category_name(r.category);
    j["message"] = r.message;
    j["node"] = r.node_path.empty() ? "root" : r.node_path;
  }
  return j;
}

int run_check_proof(const std::string& path, const std::string& output) {
  json report;
  report["file"] = path;
  const ProofNodePtr p = parse_proof(read_file(path));
  const CheckResult r = check_proof(p);
  report.update(check_to_json(r));
  report["endSequent"] = print_sequent(p->concl);
  report["nodes"] = proof_meta(p).size();
  emit(report, output);
  return r.ok ? 0 : 1;
}

int run_soundness(const std::string& path, const std::string& u_text, bool sample,
                  std::size_t samples, std::uint64_t seed, const std::string& output) {
  json report;
  report["file"] = path;
  const ProofNodePtr p = parse_proof(read_file(path));
  const CheckResult r = check_proof(p);
  report.update(check_to_json(r));
  if (!r.ok) {
    emit(report, output);
    return 1;
  }
  SoundnessOptions opts;
  opts.u = parse_nat_arg(u_text, "--u");
  opts.mode = sample ? SoundnessMode::Sample : SoundnessMode::Enumerate;
  opts.samples = samples;
  opts.seed = seed;
  const SoundnessReport sr = check_proof_soundness(p, opts);
  report["u"] = sr.u.get_str();
  report["mode"] = sample ? "sample" : "enumerate";
  report["ok"] = sr.ok;
  report["sampled"] = sr.sampled_any;
  json nodes = json::array();
  for (const NodeOutcome& n : sr.nodes) {
    json jn;
    jn["path"] = n.path.empty() ? "root" : n.path;
    jn["rule"] = rule_name(n.rule);
    jn["holds"] = n.holds;
    jn["sampled"] = n.sampled;
    jn["points"] = n.points;
    if (n.counterexample) {
      json rho = json::array();
      for (const auto& [var, val] : n.counterexample->rho) {
        rho.push_back(json{{"var", "x" + std::to_string(var)}, {"value", val.get_str()}});
      }
      jn["counterexample"] = json{{"rho", std::move(rho)},
                                  {"uPrime", n.counterexample->uPrime.get_str()}};
    }
    nodes.push_back(std::move(jn));
  }
  report["nodes"] = std::move(nodes);
  report["notes"] = sr.notes;
  emit(report, output);
  return sr.ok ? 0 : 1;
}

int run_fuzz_cmd(std::size_t count, std::uint64_t seed, const std::string& u_text,
                 const std::string& output) {
  FuzzOptions opts;
  opts.count = count;
  opts.seed = seed;
  opts.u = parse_nat_arg(u_text, "--u");
  const FuzzReport r = run_fuzz(opts);
  json report;
  report["count"] = count;
  report["seed"] = seed;
  report["u"] = opts.u.get_str();
  report["attempted"] = r.attempted;
  report["accepted"] = r.accepted;
  report["rejected"] = r.rejected;
  report["validRejected"] = r.valid_rejected;
  report["emptyEndsequentAccepted"] = r.empty_endsequent_accepted;
  report["soundnessFailures"] = r.soundness_failures;
  report["notes"] = r.notes;
  report["clean"] = fuzz_clean(r);
  emit(report, output);
  return fuzz_clean(r) ? 0 : 1;
}

int run_make_corpus(const std::string& dir, const std::string& output) {
  write_corpus(dir);
  json report;
  report["dir"] = dir;
  report["files"] = build_corpus().size() + 1;  // proofs + manifest.json
  emit(report, output);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Proof checker and bounded evaluator for a weak arithmetic with an explicit "
               "convergence predicate"};
  app.require_subcommand(1);

  std::string term_text, formula_text, env_csv, bound_text = "0", mode = "t";
  std::string file, u_text = "8", dir = "corpus", output;
  bool tree = false, want_trace = false, sample = false;
  std::size_t samples = 200, count = 500;
  std::uint64_t seed = 0;

  CLI::App* oracle = app.add_subcommand(
      "oracle-term", "Evaluate a closed-form term on both evaluation routes and compare");
  oracle->add_option("term", term_text, "term in text form")->required();
  oracle->add_option("--env", env_csv, "comma-separated values for x1,x2,...");
  oracle->add_option("--output", output, "also write the JSON report to this file");

  CLI::App* eval = app.add_subcommand("eval-term", "Bounded evaluation of a term");
  eval->add_option("term", term_text, "term in text form")->required();
  eval->add_option("--bound", bound_text, "evaluation bound u")->required();
  eval->add_option("--env", env_csv, "comma-separated values for x1,x2,...");
  eval->add_flag("--tree", tree, "include the valuation tree witness");
  eval->add_option("--output", output, "also write the JSON report to this file");

  CLI::App* truth_cmd = app.add_subcommand("truth", "Bounded truth of a formula");
  truth_cmd->add_option("formula", formula_text, "formula in text form")->required();
  truth_cmd->add_option("--bound", bound_text, "truth bound u")->required();
  truth_cmd->add_option("--env", env_csv, "comma-separated values for x1,x2,...");
  truth_cmd->add_option("--mode", mode, "t0 (quantifier-free) or t (1-forms)")
      ->check(CLI::IsMember({"t0", "t"}));
  truth_cmd->add_flag("--trace", want_trace, "include an evaluation trace");
  truth_cmd->add_option("--output", output, "also write the JSON report to this file");

  CLI::App* check = app.add_subcommand("check-proof", "Check a proof file");
  check->add_option("file", file, "proof in text form")->required();
  check->add_option("--output", output, "also write the JSON report to this file");

  CLI::App* sound = app.add_subcommand(
      "soundness", "Audit every node of an accepted proof against bounded truth");
  sound->add_option("file", file, "proof in text form")->required();
  sound->add_option("--u", u_text, "outer bound (default 8)");
  sound->add_flag("--sample", sample, "sample instead of enumerating");
  sound->add_option("--samples", samples, "samples per node when sampling (default 200)");
  sound->add_option("--seed", seed, "sampling seed (default 0)");
  sound->add_option("--output", output, "also write the JSON report to this file");

  CLI::App* fuzz_cmd = app.add_subcommand(
      "fuzz", "Generate, check and spot-audit random proofs; report invariant violations");
  fuzz_cmd->add_option("--count", count, "number of rounds (default 500)");
  fuzz_cmd->add_option("--seed", seed, "generator seed (default 0)");
  fuzz_cmd->add_option("--u", u_text, "soundness audit bound (default 8)");
  fuzz_cmd->add_option("--output", output, "also write the JSON report to this file");

  CLI::App* corpus_cmd =
      app.add_subcommand("make-corpus", "Regenerate the bundled proof corpus and manifest");
  corpus_cmd->add_option("--dir", dir, "target directory (default corpus)");
  corpus_cmd->add_option("--output", output, "also write the JSON report to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*oracle) return run_oracle_term(term_text, env_csv, output);
    if (*eval) return run_eval_term(term_text, env_csv, bound_text, tree, output);
    if (*truth_cmd) return run_truth(formula_text, env_csv, bound_text, mode, want_trace, output);
    if (*check) return run_check_proof(file, output);
    if (*sound) return run_soundness(file, u_text, sample, samples, seed, output);
    if (*fuzz_cmd) return run_fuzz_cmd(count, seed, u_text, output);
    if (*corpus_cmd) return run_make_corpus(dir, output);
  } catch (const std::exception& e) {
    json err;
    err["error"] = e.what();
    std::cout << err.dump(2) << "\n";
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
