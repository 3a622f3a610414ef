#include "latspec/numeric.hpp"

#include <algorithm>
#include <cctype>

namespace latspec {

Int mod_pow2(const Int& n, unsigned e) {
  Int mask = (Int(1) << e) - 1;
  Int r = n & mask;  // cpp_int bitand on negatives works on the value, not two's complement
  if (r < 0) r += Int(1) << e;
  return r;
}

Int mod_pow(const Int& base, unsigned long exp, unsigned e) {
  if (e < 1) throw std::invalid_argument("mod_pow: modulus exponent must be >= 1");
  Int mask = (Int(1) << e) - 1;
  Int result = 1;
  Int b = mod_pow2(base, e);
  while (exp > 0) {
    if (exp & 1) result = (result * b) & mask;
    b = (b * b) & mask;
    exp >>= 1;
  }
  return result;
}

Int inverse_mod_pow2(const Int& a, unsigned e) {
  if ((a & 1) == 0) throw std::invalid_argument("inverse_mod_pow2: even argument");
  // Newton iteration: x <- x(2 - ax), doubling correct bits each round.
  Int mask = (Int(1) << e) - 1;
  Int x = 1;
  for (unsigned bits = 1; bits < e; bits *= 2) x = (x * (2 - ((a * x) & mask))) & mask;
  return x & mask;
}

std::string to_hex(const Int& n) {
  if (n < 0) return "-" + to_hex(-n);
  std::string s = n.str(0, std::ios_base::hex);
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return "0x" + s;
}

Int from_hex(const std::string& s) {
  std::string t = s;
  bool neg = false;
  if (!t.empty() && t[0] == '-') {
    neg = true;
    t = t.substr(1);
  }
  if (t.size() < 3 || t[0] != '0' || (t[1] != 'x' && t[1] != 'X'))
    throw std::invalid_argument("from_hex: expected 0x prefix: " + s);
  for (size_t i = 2; i < t.size(); i++)
    if (!std::isxdigit(static_cast<unsigned char>(t[i])))
      throw std::invalid_argument("from_hex: bad digit in " + s);
  Int n(t);
  return neg ? -n : n;
}

}  // namespace latspec
