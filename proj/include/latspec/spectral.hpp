#pragma once

#include <optional>
#include <string>
#include <vector>

#include "latspec/lattice.hpp"

namespace latspec {

// Hermite constant gamma_d: exact for 2 <= d <= 8; for 9 <= d <= 32 the
// value of the densest known (laminated) lattice. Only the 0.5 threshold
// filter on f_9..f_32 consumes the tabulated values, so the small gap to
// the best bounds is immaterial there.
Quad hermite_constant(unsigned d);

// nu^2 = a^2 + 1 whenever a < M^(1/d) (no shorter vector can satisfy the
// congruence); empty when the bound does not apply and the lattice path
// must be used.
std::optional<Int> closed_form_nu(const GeneratorSpec& spec, unsigned d);

struct MeritResult {
  Int nu_sq;
  double f = 0.0;
  bool exact = false;
};

// f_d = nu_d / (gamma_d^(1/2) * M^(1/d)) for the lag-l subsequence, which
// is the congruential sequence with multiplier a^l mod M (Entacher's
// characterization). exact_svp requests certified enumeration; otherwise
// the best LLL row is used.
MeritResult figure_of_merit(const GeneratorSpec& spec, unsigned d, unsigned lag = 1,
                            bool exact_svp = true,
                            std::uint64_t node_budget = kDefaultEnumBudget);

// Score from a known nu^2 (shared by the closed-form and lattice paths).
double merit_from_nu_sq(const Int& nu_sq, unsigned effective_exponent, unsigned d);

// lambda = sqrt(a^2+1) / sqrt(M): the length of the short lattice vector
// nearly parallel to an axis, relative to the small-multiplier threshold.
double lambda_merit(const GeneratorSpec& spec);

struct SpectralReport {
  GeneratorSpec spec;
  unsigned d_max = 8;
  unsigned lag_max = 8;
  // indexed [d-2][lag-1]
  std::vector<std::vector<Int>> nu_sq;
  std::vector<std::vector<double>> f;
  std::vector<std::vector<bool>> exact;
  // f_9..f_32, indexed [d-9]; empty unless requested
  std::vector<double> high_f;
  std::vector<bool> high_exact;
  double lambda = 0.0;
  double min_score = 0.0;   // min of f[2..d_max], lag 1
  double harm_score = 0.0;  // harmonic spectral score, lag 1
};

double minimum_score(const std::vector<double>& f_by_dim, unsigned d_max);
double harmonic_score(const std::vector<double>& f_by_dim, unsigned d_max);

struct ReportOptions {
  unsigned d_max = 8;
  unsigned lag_max = 8;
  bool high_dims = false;
  bool exact_high_dims = false;  // enumeration above d=8 is LLL-only by default
  std::uint64_t node_budget = kDefaultEnumBudget;
};

SpectralReport spectral_report(const GeneratorSpec& spec, const ReportOptions& opt = {});

// Display conventions: scores as 6-digit fixed point; lambda with two
// fractional digits below 100 and scientific notation above.
std::string format_score(double f);
std::string format_lambda(double lambda);

}  // namespace latspec
