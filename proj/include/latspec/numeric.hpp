#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace latspec {

// Arbitrary-precision signed integer; magnitudes reach 2^257 (products of
// 2^128-scale lattice entries).
using Int = boost::multiprecision::cpp_int;

// Exact rational, always normalized (gcd 1, positive denominator).
using Rat = boost::multiprecision::cpp_rational;

// 113-bit mantissa float, wide enough to convert 2^257-scale integers
// without losing the digits we print.
using Quad = boost::multiprecision::cpp_bin_float_quad;

// Smallest b with n < 2^b; bit_length(0) == 0.
inline unsigned bit_length(const Int& n) {
  if (n == 0) return 0;
  if (n < 0) throw std::invalid_argument("bit_length: negative argument");
  return static_cast<unsigned>(boost::multiprecision::msb(n)) + 1;
}

// base^exp mod 2^e (e >= 1). All modulus arithmetic in this project is
// specialized to powers of two: reduction is a mask.
Int mod_pow(const Int& base, unsigned long exp, unsigned e);

// Reduce n modulo 2^e into [0, 2^e).
Int mod_pow2(const Int& n, unsigned e);

// Inverse of odd a modulo 2^e.
Int inverse_mod_pow2(const Int& a, unsigned e);

// Canonical multiplier representation: lowercase hex with 0x prefix.
std::string to_hex(const Int& n);
Int from_hex(const std::string& s);

}  // namespace latspec
