#include "latspec/genspec.hpp"

namespace latspec {

MultiplierClass classify(const Int& a) {
  if (a <= 0) throw std::invalid_argument("classify: multiplier must be positive");
  MultiplierClass c;
  c.residue_mod8 = static_cast<int>(a % 8);
  c.mcg_type = c.residue_mod8 == 3   ? McgType::type3
               : c.residue_mod8 == 5 ? McgType::type5
                                     : McgType::none;
  c.full_period_lcg_capable = (c.residue_mod8 % 4) == 1;
  c.max_potency = c.residue_mod8 == 5;
  return c;
}

unsigned potency(unsigned e, const Int& a) {
  if (e < 1) throw std::invalid_argument("potency: e must be >= 1");
  if (a <= 1) throw std::invalid_argument("potency: requires a > 1");
  if ((a & 1) == 0) throw std::invalid_argument("potency: requires odd a");
  Int t = a - 1;
  unsigned k = static_cast<unsigned>(boost::multiprecision::lsb(t));
  return (e + k - 1) / k;  // ceil(e/k)
}

std::array<Int, 4> related_multipliers(unsigned e, const Int& a) {
  if ((a & 1) == 0) throw std::invalid_argument("related_multipliers: requires odd a");
  int r = static_cast<int>(a % 8);
  if (r != 3 && r != 5)
    throw std::invalid_argument("related_multipliers: requires a = 3 or 5 (mod 8)");
  Int m = Int(1) << e;
  Int inv = inverse_mod_pow2(a, e);
  return {a, inv, m - a, m - inv};
}

bool constants_equivalent(unsigned e, const Int& a, const Int& c, const Int& c2,
                          bool allow_sign) {
  if (a % 8 != 5) throw std::invalid_argument("constants_equivalent: requires a = 5 (mod 8)");
  if ((c & 1) == 0 || (c2 & 1) == 0)
    throw std::invalid_argument("constants_equivalent: constants must be odd (full period)");
  // gcd(a-1, 2^e) = 2^min(k, e) with a-1 = 2^k * odd.
  unsigned k = static_cast<unsigned>(boost::multiprecision::lsb(Int(a - 1)));
  Int g = Int(1) << std::min(k, e);
  if (mod_pow2(c2 - c, e) % g == 0) return true;
  if (allow_sign && mod_pow2(c2 + c, e) % g == 0) return true;
  return false;
}

}  // namespace latspec
