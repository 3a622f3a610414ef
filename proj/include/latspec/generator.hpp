#pragma once

#include "latspec/numeric.hpp"

namespace latspec {

enum class Kind { LCG, MCG };

inline const char* kind_name(Kind k) { return k == Kind::LCG ? "lcg" : "mcg"; }

// A congruential generator with power-of-two modulus m = 2^e and
// multiplier a, 1 <= a < 2^e. The additive constant of an LCG plays no
// role in the lattice structure and is not stored here.
struct GeneratorSpec {
  Kind kind = Kind::LCG;
  unsigned e = 64;
  Int a;

  Int modulus() const { return Int(1) << e; }

  // Modulus of the lattice correspondence: 2^e for LCGs, 2^(e-2) for
  // maximum-period MCGs (whose upper bits behave like an LCG mod m/4).
  unsigned effective_exponent() const { return kind == Kind::LCG ? e : e - 2; }
  Int effective_modulus() const { return Int(1) << effective_exponent(); }

  void validate() const {
    if (e < 1) throw std::invalid_argument("modulus exponent must be >= 1");
    if (a < 1 || a >= modulus()) throw std::invalid_argument("multiplier out of range [1, 2^e)");
    if (kind == Kind::MCG) {
      if (e < 4) throw std::invalid_argument("MCG requires e >= 4");
      if (a % 8 != 5) throw std::invalid_argument("MCG multiplier must be of type 5 (a = 5 mod 8)");
    }
  }
};

}  // namespace latspec
