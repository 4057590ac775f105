#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include <json.hpp>

#include "s02e/corpus.hpp"
#include "s02e/fuzz.hpp"
#include "s02e/parse.hpp"
#include "s02e/proof.hpp"

using namespace s02e;
using json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  REQUIRE_MESSAGE(f.good(), "cannot open " << p.string());
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> c = build_corpus();
  return c;
}

}  // namespace

TEST_CASE("every corpus entry matches its declared verdict") {
  for (const CorpusEntry& e : corpus()) {
    const std::string verdict = validate_corpus_entry(e);
    CHECK_MESSAGE(verdict.empty(), e.file << ": " << verdict);
  }
}

TEST_CASE("the corpus covers every schema, every rule and every diagnostic") {
  std::set<std::string> axiom_ok, axiom_bad, rule_ok, rule_bad, categories;
  for (const CorpusEntry& e : corpus()) {
    if (e.kind == "axiom") (e.expect == "accept" ? axiom_ok : axiom_bad).insert(e.name);
    if (e.kind == "rule") (e.expect == "accept" ? rule_ok : rule_bad).insert(e.name);
    if (e.expect == "reject") categories.insert(e.category);
  }
  for (const std::string& name : axiom_names()) {
    CHECK_MESSAGE(axiom_ok.count(name) == 1, "no accepted instance for schema " << name);
    CHECK_MESSAGE(axiom_bad.count(name) == 1, "no near-miss for schema " << name);
  }
  for (std::size_t i = 0; i < 21; ++i) {
    const std::string name = rule_name(static_cast<RuleTag>(i));
    CHECK_MESSAGE(rule_ok.count(name) == 1, "no accepted proof for rule " << name);
    CHECK_MESSAGE(rule_bad.count(name) == 1, "no rejected proof for rule " << name);
  }
  for (const char* cat :
       {"rule-shape", "premise-count", "not-atomic", "axiom-mismatch", "instantiation-mismatch",
        "eigenvariable", "not-one-form", "free-var-normal-form", "unknown-axiom"}) {
    CHECK_MESSAGE(categories.count(cat) == 1, "no rejection exercising category " << cat);
  }
  CHECK(corpus().size() >= 40);
}

TEST_CASE("the committed corpus files are exactly the generated ones") {
  const fs::path dir = S02E_CORPUS_DIR;
  REQUIRE_MESSAGE(fs::exists(dir / "manifest.json"),
                  "bundled corpus missing; run the make-corpus subcommand");
  std::set<std::string> expected_files{"manifest.json"};
  for (const CorpusEntry& e : corpus()) {
    expected_files.insert(e.file);
    CHECK_MESSAGE(slurp(dir / e.file) == e.text, e.file << " differs from the generator output");
  }
  std::set<std::string> actual_files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    actual_files.insert(entry.path().filename().string());
  }
  CHECK(actual_files == expected_files);
}

TEST_CASE("the manifest lists every file with its verdict") {
  const fs::path dir = S02E_CORPUS_DIR;
  const json manifest = json::parse(slurp(dir / "manifest.json"));
  REQUIRE(manifest.is_array());
  REQUIRE(manifest.size() == corpus().size());
  std::map<std::string, const CorpusEntry*> by_file;
  for (const CorpusEntry& e : corpus()) by_file.emplace(e.file, &e);
  for (const json& item : manifest) {
    REQUIRE(item.contains("file"));
    const auto it = by_file.find(item["file"].get<std::string>());
    REQUIRE(it != by_file.end());
    const CorpusEntry& e = *it->second;
    CHECK(item["kind"] == e.kind);
    CHECK(item["name"] == e.name);
    CHECK(item["expect"] == e.expect);
    if (e.expect == "reject") {
      CHECK(item["category"] == e.category);
    } else {
      CHECK_FALSE(item.contains("category"));
    }
  }
}

TEST_CASE("corpus regeneration is deterministic") {
  const fs::path tmp = fs::temp_directory_path() / "s02e_corpus_regen";
  fs::remove_all(tmp);
  write_corpus(tmp.string());
  const fs::path committed = S02E_CORPUS_DIR;
  for (const auto& entry : fs::directory_iterator(committed)) {
    const fs::path name = entry.path().filename();
    CHECK_MESSAGE(slurp(tmp / name) == slurp(entry.path()),
                  name.string() << " regenerates differently");
  }
  fs::remove_all(tmp);
}

TEST_CASE("rejected corpus proofs report the advertised diagnostic") {
  for (const CorpusEntry& e : corpus()) {
    if (e.expect != "reject") continue;
    const CheckResult r = check_proof(parse_proof(e.text));
    CHECK_FALSE(r.ok);
    CHECK_MESSAGE(check_error_category_name(r.category) == e.category,
                  e.file << ": expected " << e.category << ", got "
                         << check_error_category_name(r.category));
  }
}

TEST_CASE("report schemas are well-formed and pin the documented keys") {
  const fs::path dir = S02E_SCHEMA_DIR;
  const std::map<std::string, std::set<std::string>> required = {
      {"check_report.json", {"file", "accepted", "endSequent", "nodes"}},
      {"soundness_report.json", {"file", "accepted"}},
      {"fuzz_report.json",
       {"count", "seed", "u", "attempted", "accepted", "rejected", "validRejected",
        "emptyEndsequentAccepted", "soundnessFailures", "notes", "clean"}},
  };
  for (const auto& [file, keys] : required) {
    const json schema = json::parse(slurp(dir / file));
    CHECK(schema["type"] == "object");
    REQUIRE(schema.contains("properties"));
    REQUIRE(schema.contains("required"));
    std::set<std::string> declared;
    for (const json& k : schema["required"]) declared.insert(k.get<std::string>());
    CHECK(declared == keys);
    // Everything required is described.
    for (const std::string& k : declared) CHECK(schema["properties"].contains(k));
  }
}

TEST_CASE("a short fuzz run is clean and reproducible") {
  FuzzOptions opts;
  opts.count = 60;
  opts.seed = 99;
  const FuzzReport a = run_fuzz(opts);
  const FuzzReport b = run_fuzz(opts);
  CHECK(a.attempted == 60);
  CHECK(fuzz_clean(a));
  CHECK(a.accepted == b.accepted);
  CHECK(a.rejected == b.rejected);
  CHECK(a.accepted + a.rejected == a.attempted);
  CHECK(a.accepted > 0);
  CHECK(a.rejected > 0);
}
