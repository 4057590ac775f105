#include "s02e/nat.hpp"

namespace s02e {

Nat uniform_nat(std::mt19937_64& rng, const Nat& bound) {
  if (bound == 0) return Nat(0);
  const std::size_t k = bitlength(bound);
  for (;;) {
    Nat v = 0;
    std::size_t remaining = k;
    while (remaining > 0) {
      const unsigned take = remaining >= 64 ? 64 : static_cast<unsigned>(remaining);
      std::uint64_t word = rng();
      if (take < 64) word &= (std::uint64_t{1} << take) - 1;
      v = shift_left(v, take);
      v += Nat(static_cast<unsigned long>(word));
      remaining -= take;
    }
    if (v <= bound) return v;
  }
}

}  // namespace s02e
