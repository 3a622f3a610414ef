#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "latspec/generator.hpp"

namespace latspec {

struct HdConfig {
  unsigned slots = 10'000;              // reference runs used 10^8
  std::uint64_t batch_samples = 1'000'000;  // proposal trials per batch
  double log_p_fail = -34.538776394910684;  // ln 10^-15
  unsigned max_batches = 500;
  Int seed_state = 1;

  void validate() const {
    if (slots < 2) throw std::invalid_argument("hdtest: slots must be >= 2");
    if (batch_samples < slots)
      throw std::invalid_argument("hdtest: batch_samples must be >= slots");
  }
};

struct HdResult {
  std::optional<unsigned> batches_to_fail;  // empty: survived max_batches
  double final_log_p = 0.0;
  std::uint64_t total_accepted = 0;
};

// Slot index under the truncated-Cauchy CDF on [-2, 2):
// F(x) = (atan x + atan 2) / (2 atan 2); index = floor(slots * F(x)),
// clamped to [0, slots-1].
unsigned slot_of(double x, unsigned slots);

// ln of the upper-tail chi^2 probability for statistic x at df degrees
// of freedom; accurate for log p down to about -10^6 (regularized
// incomplete gamma in the log domain, Wilson-Hilferty above df = 10^6).
double chi_square_log_p(double x, std::uint64_t df);

double chi_square_log_p(const std::vector<std::uint64_t>& counts, double expected);

// Resilience of a generator against rejection sampling of a truncated
// Cauchy: consecutive output pairs (u1, u2) drive proposal x = -2 + 4*u1,
// accepted iff u2 <= 1/(1+x^2); after each batch a chi^2 test on the
// cumulative equal-mass slot counts yields a log p-value, and the run
// stops at the first batch at or below log_p_fail.
// LCG: c must be odd (full period); MCG: seed forced odd. e <= 128.
HdResult hd_resilience(const GeneratorSpec& spec, const Int& c, const HdConfig& config);

// The same harness fed by a high-quality reference generator
// (splitmix64); null case for calibration.
HdResult hd_resilience_reference(std::uint64_t seed, const HdConfig& config);

}  // namespace latspec
