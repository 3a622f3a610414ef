#include "latspec/select.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace latspec {

namespace {

double grid_min(const CandidateRecord& rec) {
  double m = rec.lag_grid[0][0];
  for (const auto& row : rec.lag_grid)
    for (double f : row) m = std::min(m, f);
  return m;
}

}  // namespace

void extend_records(std::vector<CandidateRecord>& records, const SelectionConfig& config,
                    bool want_lag_grid, bool want_high_dims) {
  for (auto& rec : records) {
    GeneratorSpec spec{rec.kind, rec.e, rec.a};
    if (want_lag_grid && rec.lag_grid.empty()) {
      ReportOptions opt;
      opt.node_budget = config.node_budget;
      SpectralReport rep = spectral_report(spec, opt);
      rec.lag_grid = rep.f;
    }
    if (want_high_dims && rec.high_f.empty()) {
      for (unsigned d = 9; d <= kMaxDim; d++)
        rec.high_f.push_back(figure_of_merit(spec, d, 1, false).f);
    }
  }
}

std::vector<CandidateRecord> lag_quartile_filter(std::vector<CandidateRecord> records,
                                                 const SelectionConfig& config) {
  config.validate();
  if (records.empty()) throw std::invalid_argument("lag_quartile_filter: empty input");
  extend_records(records, config, true, false);
  // quantile per stratum: mixing pools for different (kind, e, bits)
  // would compare incomparable distributions
  using Stratum = std::tuple<Kind, unsigned, unsigned>;
  std::map<Stratum, std::vector<double>> minima;
  for (const auto& rec : records)
    minima[{rec.kind, rec.e, rec.mult_bits}].push_back(grid_min(rec));
  std::map<Stratum, double> cutoff;
  for (auto& [stratum, values] : minima) {
    std::sort(values.begin(), values.end());
    size_t idx = static_cast<size_t>(std::floor(config.lag_quartile * values.size()));
    if (idx >= values.size()) idx = values.size() - 1;
    cutoff[stratum] = values[idx];
  }
  std::vector<CandidateRecord> kept;
  for (auto& rec : records)
    if (grid_min(rec) >= cutoff[{rec.kind, rec.e, rec.mult_bits}])
      kept.push_back(std::move(rec));
  return kept;
}

std::vector<CandidateRecord> high_dim_filter(std::vector<CandidateRecord> records,
                                             const SelectionConfig& config) {
  config.validate();
  extend_records(records, config, false, true);
  std::vector<CandidateRecord> kept;
  for (auto& rec : records) {
    bool ok = true;
    for (double f : rec.high_f)
      if (f < config.high_dim_threshold) ok = false;
    if (ok) kept.push_back(std::move(rec));
  }
  return kept;
}

CandidateRecord millile_select(const std::vector<CandidateRecord>& records,
                               const SelectionConfig& config) {
  config.validate();
  if (records.empty()) throw std::invalid_argument("millile_select: empty input");
  std::vector<double> mins;
  mins.reserve(records.size());
  for (const auto& rec : records) mins.push_back(rec.min_score);
  std::sort(mins.begin(), mins.end(), std::greater<>());
  size_t rank = static_cast<size_t>(std::ceil(config.millile * mins.size()));
  if (rank < 1) rank = 1;
  double cutoff = mins[rank - 1];
  const CandidateRecord* best = nullptr;
  for (const auto& rec : records) {
    if (rec.min_score < cutoff) continue;
    if (!best || rec.harm_score > best->harm_score ||
        (rec.harm_score == best->harm_score && rec.a < best->a))
      best = &rec;
  }
  return *best;
}

std::vector<CandidateRecord> pareto_front(const std::vector<CandidateRecord>& records) {
  std::vector<size_t> order(records.size());
  for (size_t i = 0; i < order.size(); i++) order[i] = i;
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    if (records[a].min_score != records[b].min_score)
      return records[a].min_score > records[b].min_score;
    return records[a].harm_score > records[b].harm_score;
  });
  std::vector<CandidateRecord> front;
  double best_harm_above = -1.0;  // best harmonic among strictly larger min scores
  size_t i = 0;
  while (i < order.size()) {
    size_t j = i;
    double group_min = records[order[i]].min_score;
    double group_best_harm = records[order[i]].harm_score;
    while (j < order.size() && records[order[j]].min_score == group_min) j++;
    for (size_t k = i; k < j; k++) {
      const auto& rec = records[order[k]];
      // dominated by a strictly better min score with harm at least as
      // good, or by an equal min score with strictly better harm
      if (best_harm_above >= rec.harm_score) continue;
      if (rec.harm_score < group_best_harm) continue;
      front.push_back(rec);
    }
    best_harm_above = std::max(best_harm_above, group_best_harm);
    i = j;
  }
  return front;
}

}  // namespace latspec
