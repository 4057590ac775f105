#pragma once

#include <cstddef>
#include <vector>

#include "s02e/formula.hpp"
#include "s02e/nat.hpp"
#include "s02e/term.hpp"

namespace s02e {

// Codes are naturals read most-significant-bit first: a sentinel 1 bit
// followed by the payload. The sentinel keeps leading payload zeros, so
// bitlength(code) = payload length + 1 and every code is >= 1.
//
// Payload fields, in order per constructor:
//   * a 6-bit constructor tag,
//   * numbers in a prefix-free form: bitlength(n) ones, one zero, then the
//     binary digits of n most-significant first (0 encodes as a single 0),
//   * child objects embedded as their raw payloads (self-delimiting by the
//     grammar).
//
// Consequences relied on elsewhere:
//   * injective and decodable;
//   * each syntactic node contributes at least 6 payload bits, so an object
//     with code c has at most (bitlength(c) - 1) / 6 nodes;
//   * a proper sub-object's code is at least 6 bits shorter than (hence
//     strictly less than) its parent's.

class BitWriter {
 public:
  void bit(bool b) { bits_.push_back(b); }

  void tag(unsigned t);           // fixed-width 6 bits
  void number(const Nat& n);      // prefix-free length-led form
  void number(std::size_t n) { number(Nat(static_cast<unsigned long>(n))); }

  std::size_t size() const { return bits_.size(); }
  Nat finish() const;             // sentinel + payload as a natural

 private:
  std::vector<bool> bits_;
};

class BitReader {
 public:
  explicit BitReader(const Nat& code);

  bool bit();
  unsigned tag();
  Nat number();
  bool at_end() const { return idx_ == 0; }
  void expect_end() const;        // throws DecodeError on trailing bits

 private:
  Nat n_;
  std::size_t idx_;               // bits remaining (next bit at idx_-1)
};

// Constructor tags, shared across all object kinds.
enum : unsigned {
  TAG_ZERO = 0,
  TAG_VAR = 1,
  TAG_SUCC = 2,
  TAG_HALF = 3,
  TAG_LEN = 4,
  TAG_S0 = 5,
  TAG_S1 = 6,
  TAG_PARITY = 7,
  TAG_PLUS = 8,
  TAG_TIMES = 9,
  TAG_SMASH = 10,
  TAG_BOXPLUS = 11,
  TAG_COND = 12,
  TAG_ATOM_LE = 16,
  TAG_ATOM_EQ = 17,
  TAG_ATOM_E = 18,
  TAG_AND = 19,
  TAG_OR = 20,
  TAG_ALL = 21,
  TAG_EX = 22,
  TAG_SEQ = 28,
  TAG_PROOF = 32,
  TAG_VAL_NODE = 36,
  TAG_TRUTH_NODE = 37,
};

// Payload emitters, used by composite encoders (sequents inside proofs,
// subterm codes inside valuation nodes, ...).
void write_term(BitWriter& w, const TermPtr& t);
void write_formula(BitWriter& w, const FormulaPtr& f);
void write_sequent(BitWriter& w, const Sequent& s);

TermPtr read_term(BitReader& r);
FormulaPtr read_formula(BitReader& r);
Sequent read_sequent(BitReader& r);

Nat encode_term(const TermPtr& t);
Nat encode_formula(const FormulaPtr& f);
Nat encode_sequent(const Sequent& s);

TermPtr decode_term(const Nat& code);
FormulaPtr decode_formula(const Nat& code);
Sequent decode_sequent(const Nat& code);

}  // namespace s02e
