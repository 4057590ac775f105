#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <random>

namespace s02e {

// Natural numbers of unbounded size. Every kernel quantity (term value,
// convergence bound, Goedel code) is a natural; negatives never arise.
using Nat = mpz_class;

// Number of binary digits: bitlength(0) = 0, bitlength(1) = 1, bitlength(6) = 3.
inline std::size_t bitlength(const Nat& n) {
  if (n == 0) return 0;
  return mpz_sizeinbase(n.get_mpz_t(), 2);
}

inline Nat pow2(std::size_t k) {
  Nat r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(k));
  return r;
}

inline Nat shift_left(const Nat& n, std::size_t k) {
  Nat r;
  mpz_mul_2exp(r.get_mpz_t(), n.get_mpz_t(), static_cast<mp_bitcnt_t>(k));
  return r;
}

inline Nat shift_right(const Nat& n, std::size_t k) {
  Nat r;
  mpz_fdiv_q_2exp(r.get_mpz_t(), n.get_mpz_t(), static_cast<mp_bitcnt_t>(k));
  return r;
}

inline bool test_bit(const Nat& n, std::size_t i) {
  return mpz_tstbit(n.get_mpz_t(), static_cast<mp_bitcnt_t>(i)) != 0;
}

// Uniform draw from [0, bound], by rejection on bitlength(bound)-bit blocks.
// Deterministic for a fixed engine state on every platform.
Nat uniform_nat(std::mt19937_64& rng, const Nat& bound);

}  // namespace s02e
