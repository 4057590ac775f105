#pragma once

#include <string>
#include <vector>

#include "s02e/proof.hpp"

namespace s02e {

// One bundled proof file: `text` is the proof in text form, `expect` is
// "accept" or "reject", and `category` names the expected diagnostic for
// rejections (empty otherwise).
struct CorpusEntry {
  std::string file;
  std::string kind;  // "axiom" | "rule" | "extra"
  std::string name;  // schema name, rule name, or showcase label
  std::string expect;
  std::string category;
  std::string text;
};

// Deterministic corpus: per axiom schema one accepted instance and one
// near-miss, per rule one minimal accepted proof and one shape violation,
// plus extras (an inequality fact, a 12-node showcase, a discipline
// violation).
std::vector<CorpusEntry> build_corpus();

// "" when the checker's verdict matches the entry's expectation, else a
// description of the disagreement.
std::string validate_corpus_entry(const CorpusEntry& e);

// Writes every entry plus manifest.json into dir (created if missing).
// Throws std::runtime_error when an entry fails validation or a file can
// not be written.
void write_corpus(const std::string& dir);

}  // namespace s02e
