#include "s02e/codec.hpp"

#include <limits>

#include "s02e/errors.hpp"

namespace s02e {

void BitWriter::tag(unsigned t) {
  for (int i = 5; i >= 0; --i) bit((t >> i) & 1u);
}

void BitWriter::number(const Nat& n) {
  const std::size_t len = bitlength(n);
  for (std::size_t i = 0; i < len; ++i) bit(true);
  bit(false);
  for (std::size_t i = len; i-- > 0;) bit(test_bit(n, i));
}

Nat BitWriter::finish() const {
  Nat code;
  mpz_setbit(code.get_mpz_t(), bits_.size());  // sentinel above the payload
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) mpz_setbit(code.get_mpz_t(), bits_.size() - 1 - i);
  }
  return code;
}

BitReader::BitReader(const Nat& code) : n_(code), idx_(bitlength(code)) {
  if (idx_ == 0) throw DecodeError("code must be a positive natural");
  --idx_;  // skip the sentinel bit
}

bool BitReader::bit() {
  if (idx_ == 0) throw DecodeError("truncated code");
  --idx_;
  return test_bit(n_, idx_);
}

unsigned BitReader::tag() {
  unsigned t = 0;
  for (int i = 0; i < 6; ++i) t = (t << 1) | (bit() ? 1u : 0u);
  return t;
}

Nat BitReader::number() {
  std::size_t len = 0;
  while (bit()) ++len;
  Nat v = 0;
  for (std::size_t i = 0; i < len; ++i) {
    v <<= 1;
    if (bit()) v |= 1;
  }
  if (len > 0 && !test_bit(v, len - 1)) {
    throw DecodeError("number field has a leading zero digit");
  }
  return v;
}

void BitReader::expect_end() const {
  if (idx_ != 0) throw DecodeError("trailing bits after object");
}

namespace {

unsigned number_as_var_index(BitReader& r) {
  Nat v = r.number();
  if (v == 0 || v > Nat(1000000000)) throw DecodeError("variable index out of range");
  return static_cast<unsigned>(v.get_ui());
}

unsigned term_tag(const TermPtr& t) {
  switch (t->kind) {
    case Term::Kind::Zero: return TAG_ZERO;
    case Term::Kind::Var: return TAG_VAR;
    case Term::Kind::Unary:
      switch (t->uop) {
        case UnaryOp::Succ: return TAG_SUCC;
        case UnaryOp::Half: return TAG_HALF;
        case UnaryOp::Len: return TAG_LEN;
        case UnaryOp::S0: return TAG_S0;
        case UnaryOp::S1: return TAG_S1;
        case UnaryOp::Parity: return TAG_PARITY;
      }
      break;
    case Term::Kind::Binary:
      switch (t->bop) {
        case BinaryOp::Plus: return TAG_PLUS;
        case BinaryOp::Times: return TAG_TIMES;
        case BinaryOp::Smash: return TAG_SMASH;
        case BinaryOp::BoxPlus: return TAG_BOXPLUS;
      }
      break;
    case Term::Kind::Cond: return TAG_COND;
  }
  throw ContractViolation("term_tag: unreachable");
}

}  // namespace

void write_term(BitWriter& w, const TermPtr& t) {
  w.tag(term_tag(t));
  switch (t->kind) {
    case Term::Kind::Zero:
      break;
    case Term::Kind::Var:
      w.number(Nat(static_cast<unsigned long>(t->var)));
      break;
    case Term::Kind::Unary:
      write_term(w, t->a);
      break;
    case Term::Kind::Binary:
      write_term(w, t->a);
      write_term(w, t->b);
      break;
    case Term::Kind::Cond:
      write_term(w, t->a);
      write_term(w, t->b);
      write_term(w, t->c);
      break;
  }
}

TermPtr read_term(BitReader& r) {
  const unsigned tg = r.tag();
  switch (tg) {
    case TAG_ZERO: return t_zero();
    case TAG_VAR: return t_var(number_as_var_index(r));
    case TAG_SUCC: return t_unary(UnaryOp::Succ, read_term(r));
    case TAG_HALF: return t_unary(UnaryOp::Half, read_term(r));
    case TAG_LEN: return t_unary(UnaryOp::Len, read_term(r));
    case TAG_S0: return t_unary(UnaryOp::S0, read_term(r));
    case TAG_S1: return t_unary(UnaryOp::S1, read_term(r));
    case TAG_PARITY: return t_unary(UnaryOp::Parity, read_term(r));
    case TAG_PLUS:
    case TAG_TIMES:
    case TAG_SMASH:
    case TAG_BOXPLUS: {
      TermPtr a = read_term(r);
      TermPtr b = read_term(r);
      BinaryOp op = tg == TAG_PLUS    ? BinaryOp::Plus
                    : tg == TAG_TIMES ? BinaryOp::Times
                    : tg == TAG_SMASH ? BinaryOp::Smash
                                      : BinaryOp::BoxPlus;
      return t_binary(op, a, b);
    }
    case TAG_COND: {
      TermPtr a = read_term(r);
      TermPtr b = read_term(r);
      TermPtr c = read_term(r);
      return t_cond(a, b, c);
    }
    default:
      throw DecodeError("unknown term tag " + std::to_string(tg));
  }
}

void write_formula(BitWriter& w, const FormulaPtr& f) {
  switch (f->kind) {
    case Formula::Kind::Atom:
      switch (f->pred) {
        case Pred::Le:
          w.tag(TAG_ATOM_LE);
          w.bit(f->neg);
          write_term(w, f->t1);
          write_term(w, f->t2);
          break;
        case Pred::Eq:
          w.tag(TAG_ATOM_EQ);
          w.bit(f->neg);
          write_term(w, f->t1);
          write_term(w, f->t2);
          break;
        case Pred::E:
          w.tag(TAG_ATOM_E);
          w.bit(f->neg);
          write_term(w, f->t1);
          break;
      }
      break;
    case Formula::Kind::And:
    case Formula::Kind::Or:
      w.tag(f->kind == Formula::Kind::And ? TAG_AND : TAG_OR);
      write_formula(w, f->lhs);
      write_formula(w, f->rhs);
      break;
    case Formula::Kind::All:
    case Formula::Kind::Ex:
      w.tag(f->kind == Formula::Kind::All ? TAG_ALL : TAG_EX);
      w.number(Nat(static_cast<unsigned long>(f->var)));
      write_term(w, f->bound);
      write_formula(w, f->body);
      break;
  }
}

FormulaPtr read_formula(BitReader& r) {
  const unsigned tg = r.tag();
  switch (tg) {
    case TAG_ATOM_LE: {
      bool neg = r.bit();
      TermPtr a = read_term(r);
      TermPtr b = read_term(r);
      FormulaPtr f = f_le(a, b);
      return neg ? f_neg(f) : f;
    }
    case TAG_ATOM_EQ: {
      bool neg = r.bit();
      TermPtr a = read_term(r);
      TermPtr b = read_term(r);
      FormulaPtr f = f_eq(a, b);
      return neg ? f_neg(f) : f;
    }
    case TAG_ATOM_E: {
      bool neg = r.bit();
      TermPtr a = read_term(r);
      FormulaPtr f = f_e(a);
      return neg ? f_neg(f) : f;
    }
    case TAG_AND:
    case TAG_OR: {
      FormulaPtr a = read_formula(r);
      FormulaPtr b = read_formula(r);
      return tg == TAG_AND ? f_and(a, b) : f_or(a, b);
    }
    case TAG_ALL:
    case TAG_EX: {
      unsigned var = number_as_var_index(r);
      TermPtr bound = read_term(r);
      FormulaPtr body = read_formula(r);
      return tg == TAG_ALL ? f_all(var, bound, body) : f_ex(var, bound, body);
    }
    default:
      throw DecodeError("unknown formula tag " + std::to_string(tg));
  }
}

void write_sequent(BitWriter& w, const Sequent& s) {
  w.tag(TAG_SEQ);
  w.number(s.ants.size());
  for (const FormulaPtr& f : s.ants) write_formula(w, f);
  w.number(s.sucs.size());
  for (const FormulaPtr& f : s.sucs) write_formula(w, f);
}

namespace {

std::size_t number_as_count(BitReader& r) {
  Nat v = r.number();
  if (v > Nat(1000000)) throw DecodeError("list length out of range");
  return static_cast<std::size_t>(v.get_ui());
}

}  // namespace

Sequent read_sequent(BitReader& r) {
  if (r.tag() != TAG_SEQ) throw DecodeError("expected sequent tag");
  Sequent s;
  const std::size_t na = number_as_count(r);
  s.ants.reserve(na);
  for (std::size_t i = 0; i < na; ++i) s.ants.push_back(read_formula(r));
  const std::size_t ns = number_as_count(r);
  s.sucs.reserve(ns);
  for (std::size_t i = 0; i < ns; ++i) s.sucs.push_back(read_formula(r));
  return s;
}

Nat encode_term(const TermPtr& t) {
  BitWriter w;
  write_term(w, t);
  return w.finish();
}

Nat encode_formula(const FormulaPtr& f) {
  BitWriter w;
  write_formula(w, f);
  return w.finish();
}

Nat encode_sequent(const Sequent& s) {
  BitWriter w;
  write_sequent(w, s);
  return w.finish();
}

TermPtr decode_term(const Nat& code) {
  BitReader r(code);
  TermPtr t = read_term(r);
  r.expect_end();
  return t;
}

FormulaPtr decode_formula(const Nat& code) {
  BitReader r(code);
  FormulaPtr f = read_formula(r);
  r.expect_end();
  return f;
}

Sequent decode_sequent(const Nat& code) {
  BitReader r(code);
  Sequent s = read_sequent(r);
  r.expect_end();
  return s;
}

}  // namespace s02e
