#pragma once

#include <array>

#include "latspec/generator.hpp"

namespace latspec {

enum class McgType { type3, type5, none };

struct MultiplierClass {
  int residue_mod8 = 0;
  McgType mcg_type = McgType::none;
  bool full_period_lcg_capable = false;  // a = 1 (mod 4), with odd c
  bool max_potency = false;              // a = 5 (mod 8)
};

MultiplierClass classify(const Int& a);

// Minimum s with (a-1)^s = 0 (mod 2^e). With a-1 = 2^k * odd this is
// ceil(e/k). Rejects a = 1 (degenerate) and even a.
unsigned potency(unsigned e, const Int& a);

// The four multipliers {a, a^-1, m-a, m-a^-1} mod 2^e sharing the same
// MCG figures of merit; two are type 5 and two type 3 (fewer distinct
// values when a is self-inverse).
std::array<Int, 4> related_multipliers(unsigned e, const Int& a);

// Durst equivalence of LCG constants for a maximum-potency multiplier:
// c2 and c generate the same sequence up to an additive constant iff
// c2 - c is divisible by gcd(a-1, 2^e); allowing a sign flip as well,
// c2 + c may satisfy the divisibility instead.
bool constants_equivalent(unsigned e, const Int& a, const Int& c, const Int& c2,
                          bool allow_sign);

}  // namespace latspec
