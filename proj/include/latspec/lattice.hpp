#pragma once

#include <cstdint>
#include <vector>

#include "latspec/generator.hpp"

namespace latspec {

// Basis of the dual lattice of the d-dimensional point set of a
// congruential generator. Constructed lower-triangular:
//   row 0 = (M, 0, ..., 0)
//   row i = (-(a^i mod M), 0, ..., 1 at i, ..., 0)
// with M the effective modulus. |det| = M, preserved by reduction.
struct DualBasis {
  unsigned dim = 0;
  std::vector<std::vector<Int>> rows;
  Int effective_modulus;
};

struct ShortVector {
  std::vector<Int> coords;
  Int norm_sq;     // nu^2_d
  bool exact = false;  // certified by enumeration, not just LLL
};

inline constexpr unsigned kMinDim = 2;
inline constexpr unsigned kMaxDim = 32;
inline constexpr std::uint64_t kDefaultEnumBudget = 10'000'000;

// Dual basis for the generator with multiplier `multiplier` (already
// reduced mod M); used directly for lagged scores, where the lag-l
// subsequence is the congruential sequence with multiplier a^l mod M.
DualBasis dual_basis_for_multiplier(const Int& multiplier, unsigned effective_exponent,
                                    unsigned d);

DualBasis dual_basis(const GeneratorSpec& spec, unsigned d);

// delta-LLL reduction, exact arithmetic throughout (all-integer
// Gram-Schmidt bookkeeping). delta in (1/4, 1).
DualBasis lll_reduce(const DualBasis& basis, const Rat& delta);

inline Rat default_delta() { return Rat(999999999, 1000000000); }  // 1 - 10^-9

Int det_abs(const DualBasis& basis);

// Shortest nonzero vector. With exact=true runs Fincke-Pohst enumeration
// in Schnorr-Euchner order seeded by the LLL bound; if the node budget is
// exhausted, returns the best LLL row with exact=false. With exact=false
// returns the best LLL row directly.
ShortVector shortest_vector(const DualBasis& basis, bool exact,
                            std::uint64_t node_budget = kDefaultEnumBudget);

}  // namespace latspec
