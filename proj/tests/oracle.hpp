#pragma once

// Test-only brute-force shortest-vector oracle, independent of the
// lattice module: exhaustive search over the dual congruence
//   w_0 + a*w_1 + ... + a^(d-1)*w_(d-1) = 0 (mod 2^ee)
// with w_1..w_(d-1) enumerated in zigzag order under a shrinking norm
// bound and w_0 the centered representative forced by the congruence.
// Feasible for ee <= 14, d <= 4.

#include <vector>

#include "latspec/numeric.hpp"

namespace latspec::testing {

inline Int brute_force_nu_sq(const Int& a, unsigned ee, unsigned d) {
  const Int m = Int(1) << ee;
  std::vector<Int> pow(d);
  pow[0] = 1;
  for (unsigned i = 1; i < d; i++) pow[i] = mod_pow2(pow[i - 1] * a, ee);

  Int best = mod_pow2(a, ee) * mod_pow2(a, ee) + 1;  // witness (-a, 1, 0, ...)
  std::vector<Int> w(d, 0);

  // enumerate w[level] for level = d-1 .. 1; at level 0 the congruence
  // pins w_0 up to a multiple of m, and only the centered value matters
  auto descend = [&](auto&& self, unsigned level, const Int& partial_norm,
                     const Int& partial_sum) -> void {
    if (level == 0) {
      Int w0 = mod_pow2(-partial_sum, ee);  // in [0, m)
      for (int rep = 0; rep < 2; rep++) {
        Int norm = partial_norm + w0 * w0;
        if (norm < best && (norm != 0)) best = norm;
        w0 -= m;  // the other near-zero representative
      }
      return;
    }
    for (Int t = 0;; t++) {
      for (Int v : {Int(t), Int(-t)}) {
        Int norm = partial_norm + v * v;
        if (norm >= best) {
          if (v == t) return;  // |v| only grows from here
          continue;
        }
        self(self, level - 1, norm, partial_sum + v * pow[level]);
        if (t == 0) break;  // +0 and -0 coincide
      }
    }
  };
  descend(descend, d - 1, 0, 0);
  return best;
}

}  // namespace latspec::testing
