#pragma once

#include "latspec/search.hpp"

namespace latspec {

struct SelectionConfig {
  double lag_quartile = 0.25;
  double high_dim_threshold = 0.5;
  double millile = 0.001;
  unsigned d_max = 8;
  std::uint64_t node_budget = kDefaultEnumBudget;

  void validate() const {
    if (lag_quartile <= 0 || lag_quartile >= 1 || millile <= 0 || millile >= 1)
      throw std::invalid_argument("selection: fractions must be in (0,1)");
  }
};

// Fill in the 7x8 lag grid and/or f_9..f_32 for records missing them
// (lag grid with certified enumeration, high dimensions LLL-only).
void extend_records(std::vector<CandidateRecord>& records, const SelectionConfig& config,
                    bool want_lag_grid, bool want_high_dims);

// Keep records whose minimum over the whole lag grid reaches the
// empirical first quartile of that statistic within their stratum
// (kind, e, bits). Ties at the boundary survive.
std::vector<CandidateRecord> lag_quartile_filter(std::vector<CandidateRecord> records,
                                                 const SelectionConfig& config);

// Keep records with no f_9..f_32 below the threshold.
std::vector<CandidateRecord> high_dim_filter(std::vector<CandidateRecord> records,
                                             const SelectionConfig& config);

// Among records whose minimum score lies in the top millile (at least
// one always qualifies), the one with the best harmonic score; ties
// break toward the smallest multiplier.
CandidateRecord millile_select(const std::vector<CandidateRecord>& records,
                               const SelectionConfig& config);

// Records not dominated in (min score, harmonic score).
std::vector<CandidateRecord> pareto_front(const std::vector<CandidateRecord>& records);

}  // namespace latspec
