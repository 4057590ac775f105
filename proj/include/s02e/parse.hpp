#pragma once

#include <string_view>

#include "s02e/formula.hpp"
#include "s02e/sexpr.hpp"
#include "s02e/term.hpp"

namespace s02e {

// Grammar (whitespace-insensitive):
//   term    := 0 | x<k> | (S t) | (half t) | (len t) | (s0 t) | (s1 t)
//            | (parity t) | (+ t t) | (* t t) | (# t t) | (bp t t)
//            | (cond t t t)
//   formula := (<= t t) | (= t t) | (E t) | (not atom)
//            | (and f f) | (or f f) | (all x<k> (len t) f) | (ex x<k> t f)
//   sequent := (seq (ants f*) (sucs f*))
// Errors carry byte offsets. Negation nests on positive atoms only, and a
// universal bound must be written (len ...).
TermPtr parse_term(std::string_view input);
FormulaPtr parse_formula(std::string_view input);
Sequent parse_sequent(std::string_view input);

// SExpr-level entry points shared with the proof parser.
TermPtr term_from_sexpr(const SExpr& e);
FormulaPtr formula_from_sexpr(const SExpr& e);
Sequent sequent_from_sexpr(const SExpr& e);
unsigned variable_from_sexpr(const SExpr& e);

}  // namespace s02e
