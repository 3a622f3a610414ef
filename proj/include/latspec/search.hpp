#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "latspec/spectral.hpp"

namespace latspec {

enum class SearchMode { exhaustive, sample };

struct SearchConfig {
  Kind kind = Kind::LCG;
  unsigned e = 64;
  unsigned mult_bits = 32;
  bool require_second_msb = false;
  SearchMode mode = SearchMode::sample;
  std::uint64_t sample_count = 0;
  std::uint64_t rng_seed = 0;
  double min_score_threshold = 0.70;
  unsigned worker_count = 1;
  std::uint64_t exhaustive_cap = std::uint64_t(1) << 28;
  std::uint64_t node_budget = kDefaultEnumBudget;
};

struct CandidateRecord {
  Kind kind = Kind::LCG;
  unsigned e = 0;
  Int a;
  unsigned mult_bits = 0;
  double lambda = 0.0;
  std::vector<double> f;  // f_2..f_8, lag 1
  double min_score = 0.0;
  double harm_score = 0.0;
  bool exact = true;
  // optional extensions (select pipeline): 7x8 lag grid and f_9..f_32
  std::vector<std::vector<double>> lag_grid;  // [d-2][lag-1]
  std::vector<double> high_f;                 // [d-9]
};

// Candidates are a = 5 (mod 8) in [2^(b-1), 2^b), optionally restricted
// to a >= 3*2^(b-2) (second-most-significant bit set).
struct CandidateWindow {
  Int first;               // smallest admissible value
  unsigned __int128 count; // number of admissible values

  Int at(unsigned __int128 index) const { return first + Int(std::uint64_t(index >> 64)) * (Int(8) << 64) + Int(std::uint64_t(index)) * 8; }
};

CandidateWindow candidate_window(const SearchConfig& config);

// Deterministic candidate stream: ascending over the window in
// exhaustive mode; in sample mode, a uniform sample without replacement
// driven by a seeded bijective permutation of the index space.
std::vector<Int> enumerate_candidates(const SearchConfig& config);

// Scores a candidate (f_2..f_8 with certified enumeration) and returns a
// record iff its minimum score reaches the threshold. Dimensions are
// scored in increasing order and evaluation stops as soon as one falls
// below the threshold.
std::optional<CandidateRecord> evaluate_candidate(const Int& a, const SearchConfig& config);

// Full search over the configured stream; appends survivors to `out` in
// completion order through a single serializer. Returns the number of
// records written.
std::uint64_t run_search(const SearchConfig& config, std::ostream& out,
                         const std::function<void(const CandidateRecord&)>& on_record = {});

// Candidate database (UTF-8 TSV, '#'-prefixed header). Extension columns
// f{d}_lag{l} and f{d} are written when present on every record.
std::string db_header(bool extended);
std::string db_line(const CandidateRecord& rec);
std::vector<CandidateRecord> read_db(std::istream& in);
void write_db(std::ostream& out, const std::vector<CandidateRecord>& records);

}  // namespace latspec
