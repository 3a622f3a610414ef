#include "latspec/hdtest.hpp"

#include <cmath>

namespace latspec {

namespace {

constexpr double kAtan2 = 1.1071487177940904;  // atan(2)

// ln of the standard normal upper tail.
double log_norm_sf(double z) {
  if (z < 10.0) return std::log(0.5 * std::erfc(z / std::sqrt(2.0)));
  double z2 = z * z;
  return -0.5 * z2 - 0.5 * std::log(2.0 * M_PI) - std::log(z) +
         std::log1p(-1.0 / z2 + 3.0 / (z2 * z2));
}

// ln Q(s, x) by the continued fraction (valid for x > s + 1).
double log_gamma_q_cf(double s, double x) {
  const double tiny = 1e-300;
  double b = x + 1.0 - s;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 10000; i++) {
    double an = -double(i) * (double(i) - s);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < 1e-16) break;
  }
  return -x + s * std::log(x) - std::lgamma(s) + std::log(h);
}

// Lower regularized gamma P(s, x) by the series (valid for x < s + 1).
double gamma_p_series(double s, double x) {
  double ap = s;
  double sum = 1.0 / s;
  double del = sum;
  for (int i = 0; i < 10000; i++) {
    ap += 1.0;
    del *= x / ap;
    sum += del;
    if (std::fabs(del) < std::fabs(sum) * 1e-17) break;
  }
  return sum * std::exp(-x + s * std::log(x) - std::lgamma(s));
}

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t x = (state += 0x9e3779b97f4a7c15ULL);
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

template <typename State>
struct CongruentialStream {
  State a, c, state, mask;
  unsigned e;

  double next() {
    state = (a * state + c) & mask;
    if (e >= 53) return double(std::uint64_t(state >> (e - 53))) * 0x1p-53;
    return double(std::uint64_t(state)) * std::ldexp(1.0, -int(e));
  }
};

template <typename Stream>
HdResult run_hd(Stream& stream, const HdConfig& config) {
  std::vector<std::uint64_t> counts(config.slots, 0);
  HdResult result;
  double inv_g0 = 1.0;  // envelope: density mode g(0) = 1
  for (unsigned batch = 1; batch <= config.max_batches; batch++) {
    for (std::uint64_t i = 0; i < config.batch_samples; i++) {
      double u1 = stream.next();
      double u2 = stream.next();
      double x = -2.0 + 4.0 * u1;
      if (u2 * (1.0 + x * x) <= inv_g0) {
        counts[slot_of(x, config.slots)]++;
        result.total_accepted++;
      }
    }
    double expected = double(result.total_accepted) / config.slots;
    double stat = 0.0;
    for (std::uint64_t n : counts) {
      double diff = double(n) - expected;
      stat += diff * diff / expected;
    }
    result.final_log_p = chi_square_log_p(stat, config.slots - 1);
    if (result.final_log_p <= config.log_p_fail) {
      result.batches_to_fail = batch;
      break;
    }
  }
  return result;
}

}  // namespace

unsigned slot_of(double x, unsigned slots) {
  if (x < -2.0 || x >= 2.0) throw std::invalid_argument("slot_of: x out of [-2, 2)");
  double cdf = (std::atan(x) + kAtan2) / (2.0 * kAtan2);
  auto idx = static_cast<long long>(std::floor(cdf * slots));
  if (idx < 0) idx = 0;
  if (idx >= static_cast<long long>(slots)) idx = slots - 1;
  return static_cast<unsigned>(idx);
}

double chi_square_log_p(double x, std::uint64_t df) {
  if (df < 1) throw std::invalid_argument("chi_square_log_p: df must be >= 1");
  if (x <= 0.0) return 0.0;
  if (df > 1'000'000) {
    // Wilson-Hilferty cube-root normal approximation
    double nd = double(df);
    double t = std::cbrt(x / nd);
    double mu = 1.0 - 2.0 / (9.0 * nd);
    double sigma = std::sqrt(2.0 / (9.0 * nd));
    return log_norm_sf((t - mu) / sigma);
  }
  double s = double(df) / 2.0;
  double xx = x / 2.0;
  if (xx < s + 1.0) {
    double p = gamma_p_series(s, xx);
    return std::log1p(-p);
  }
  return log_gamma_q_cf(s, xx);
}

double chi_square_log_p(const std::vector<std::uint64_t>& counts, double expected) {
  if (counts.size() < 2) throw std::invalid_argument("chi_square_log_p: need >= 2 slots");
  if (expected <= 0.0) throw std::invalid_argument("chi_square_log_p: expected must be > 0");
  double stat = 0.0;
  for (std::uint64_t n : counts) {
    double diff = double(n) - expected;
    stat += diff * diff / expected;
  }
  return chi_square_log_p(stat, counts.size() - 1);
}

HdResult hd_resilience(const GeneratorSpec& spec, const Int& c, const HdConfig& config) {
  spec.validate();
  config.validate();
  if (spec.e > 128) throw std::invalid_argument("hdtest: e > 128 not supported");
  if (spec.a % 8 != 5) throw std::invalid_argument("hdtest: multiplier must be 5 (mod 8)");
  if (spec.kind == Kind::LCG && (c & 1) == 0)
    throw std::invalid_argument("hdtest: LCG constant must be odd (full period)");
  Int seed = mod_pow2(config.seed_state, spec.e);
  if (spec.kind == Kind::MCG) seed |= 1;  // maximum-period orbits have odd state
  if (spec.e <= 64) {
    CongruentialStream<std::uint64_t> stream{
        spec.a.convert_to<std::uint64_t>(),
        spec.kind == Kind::LCG ? mod_pow2(c, spec.e).convert_to<std::uint64_t>() : 0,
        seed.convert_to<std::uint64_t>(),
        spec.e == 64 ? ~0ULL : (1ULL << spec.e) - 1, spec.e};
    return run_hd(stream, config);
  }
  using u128 = unsigned __int128;
  auto to_u128 = [](const Int& v) {
    return (u128((v >> 64).convert_to<std::uint64_t>()) << 64) |
           (v & 0xffffffffffffffffULL).convert_to<std::uint64_t>();
  };
  u128 mask = spec.e == 128 ? ~u128(0) : (u128(1) << spec.e) - 1;
  CongruentialStream<u128> stream{
      to_u128(spec.a),
      spec.kind == Kind::LCG ? to_u128(mod_pow2(c, spec.e)) : u128(0),
      to_u128(seed), mask, spec.e};
  return run_hd(stream, config);
}

HdResult hd_resilience_reference(std::uint64_t seed, const HdConfig& config) {
  config.validate();
  struct RefStream {
    std::uint64_t state;
    double next() { return double(splitmix64(state) >> 11) * 0x1p-53; }
  } stream{seed};
  return run_hd(stream, config);
}

}  // namespace latspec
