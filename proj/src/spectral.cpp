#include "latspec/spectral.hpp"

#include <cmath>
#include <cstdio>

namespace latspec {

namespace {

// Center density of the densest known lattice packing as delta =
// 2^(p/2) * 3^(q/2); gamma_d = 4 * delta^(2/d). Exact for d <= 8 and
// d = 24 (Leech); laminated-lattice values elsewhere (Conway & Sloane,
// "Sphere Packings, Lattices and Groups", ch. 6), with the Kappa_{11..13}
// improvements in dimensions 11-13.
struct DensityExp {
  int p, q;
};
constexpr DensityExp kDensity[kMaxDim + 1] = {
    {0, 0},  {0, 0},                                            // unused (d < 2)
    {-2, -1}, {-5, 0}, {-6, 0}, {-7, 0}, {-6, -1}, {-8, 0},     // 2..7
    {-8, 0},  {-9, 0}, {-8, -1}, {-2, -5}, {0, -6}, {-2, -5},   // 8..13
    {-8, -1}, {-9, 0}, {-8, 0}, {-8, 0}, {-6, -1}, {-7, 0},     // 14..19
    {-6, 0},  {-5, 0}, {-2, -1}, {-2, 0}, {0, 0},  {-1, 0},     // 20..25
    {0, -1},  {-2, 0}, {-2, 0}, {-2, 0}, {0, -1},  {-1, 0},     // 26..31
    {0, 0},                                                     // 32
};

Int pow_int(const Int& a, unsigned d) {
  Int r = 1;
  for (unsigned i = 0; i < d; i++) r *= a;
  return r;
}

}  // namespace

Quad hermite_constant(unsigned d) {
  if (d < kMinDim || d > kMaxDim)
    throw std::invalid_argument("hermite_constant: dimension out of range [2, 32]");
  const auto [p, q] = kDensity[d];
  return pow(Quad(2), Quad(2) + Quad(p) / d) * pow(Quad(3), Quad(q) / d);
}

std::optional<Int> closed_form_nu(const GeneratorSpec& spec, unsigned d) {
  spec.validate();
  if (d < kMinDim || d > kMaxDim)
    throw std::invalid_argument("closed_form_nu: dimension out of range [2, 32]");
  if (pow_int(spec.a, d) < spec.effective_modulus()) return spec.a * spec.a + 1;
  return std::nullopt;
}

double merit_from_nu_sq(const Int& nu_sq, unsigned effective_exponent, unsigned d) {
  using std::log;
  Quad ln_f = log(Quad(nu_sq)) / 2 - Quad(effective_exponent) / d * log(Quad(2)) -
              log(hermite_constant(d)) / 2;
  return static_cast<double>(exp(ln_f));
}

MeritResult figure_of_merit(const GeneratorSpec& spec, unsigned d, unsigned lag,
                            bool exact_svp, std::uint64_t node_budget) {
  spec.validate();
  if (lag < 1) throw std::invalid_argument("figure_of_merit: lag must be >= 1");
  unsigned ee = spec.effective_exponent();
  Int mult = mod_pow(spec.a, lag, ee);
  MeritResult r;
  // The shortest-vector bound applies to the lagged multiplier as well.
  if (pow_int(mult, d) < (Int(1) << ee)) {
    r.nu_sq = mult * mult + 1;
    r.exact = true;
  } else {
    ShortVector sv = shortest_vector(dual_basis_for_multiplier(mult, ee, d),
                                     exact_svp, node_budget);
    r.nu_sq = sv.norm_sq;
    r.exact = sv.exact;
  }
  r.f = merit_from_nu_sq(r.nu_sq, ee, d);
  return r;
}

double lambda_merit(const GeneratorSpec& spec) {
  spec.validate();
  Quad len = sqrt(Quad(spec.a * spec.a + 1));
  return static_cast<double>(len / pow(Quad(2), Quad(spec.effective_exponent()) / 2));
}

double minimum_score(const std::vector<double>& f_by_dim, unsigned d_max) {
  if (d_max < 2 || f_by_dim.size() < d_max - 1)
    throw std::invalid_argument("minimum_score: scores f_2..f_d_max required");
  double m = f_by_dim[0];
  for (unsigned d = 3; d <= d_max; d++) m = std::min(m, f_by_dim[d - 2]);
  return m;
}

double harmonic_score(const std::vector<double>& f_by_dim, unsigned d_max) {
  if (d_max < 2 || f_by_dim.size() < d_max - 1)
    throw std::invalid_argument("harmonic_score: scores f_2..f_d_max required");
  double sum = 0.0, h = 0.0;
  for (unsigned d = 2; d <= d_max; d++) {
    sum += f_by_dim[d - 2] / (d - 1);
    h += 1.0 / (d - 1);
  }
  return sum / h;
}

SpectralReport spectral_report(const GeneratorSpec& spec, const ReportOptions& opt) {
  spec.validate();
  if (opt.d_max < kMinDim || opt.d_max > 8)
    throw std::invalid_argument("spectral_report: d_max must be in [2, 8]");
  if (opt.lag_max < 1) throw std::invalid_argument("spectral_report: lag_max must be >= 1");
  SpectralReport rep;
  rep.spec = spec;
  rep.d_max = opt.d_max;
  rep.lag_max = opt.lag_max;
  unsigned nd = opt.d_max - 1;
  rep.nu_sq.assign(nd, std::vector<Int>(opt.lag_max));
  rep.f.assign(nd, std::vector<double>(opt.lag_max));
  rep.exact.assign(nd, std::vector<bool>(opt.lag_max));
  for (unsigned d = 2; d <= opt.d_max; d++) {
    for (unsigned lag = 1; lag <= opt.lag_max; lag++) {
      MeritResult m = figure_of_merit(spec, d, lag, true, opt.node_budget);
      rep.nu_sq[d - 2][lag - 1] = m.nu_sq;
      rep.f[d - 2][lag - 1] = m.f;
      rep.exact[d - 2][lag - 1] = m.exact;
    }
  }
  if (opt.high_dims) {
    for (unsigned d = 9; d <= kMaxDim; d++) {
      MeritResult m = figure_of_merit(spec, d, 1, opt.exact_high_dims, opt.node_budget);
      rep.high_f.push_back(m.f);
      rep.high_exact.push_back(m.exact);
    }
  }
  rep.lambda = lambda_merit(spec);
  std::vector<double> lag1;
  for (unsigned d = 2; d <= opt.d_max; d++) lag1.push_back(rep.f[d - 2][0]);
  rep.min_score = minimum_score(lag1, opt.d_max);
  rep.harm_score = harmonic_score(lag1, opt.d_max);
  return rep;
}

std::string format_score(double f) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", f);
  return buf;
}

std::string format_lambda(double lambda) {
  char buf[32];
  if (lambda < 1000.0) {
    std::snprintf(buf, sizeof buf, "%.2f", lambda);
    return buf;
  }
  std::snprintf(buf, sizeof buf, "%.1e", lambda);
  // 3.5e+09 -> 3.5e9
  std::string s = buf;
  auto e = s.find('e');
  std::string mant = s.substr(0, e);
  int ex = std::atoi(s.c_str() + e + 1);
  return mant + "e" + std::to_string(ex);
}

}  // namespace latspec
