#include "latspec/search.hpp"

#include <atomic>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

namespace latspec {

namespace {

using u128 = unsigned __int128;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Seeded bijective permutation of [0, 2^k): alternating unbalanced
// Feistel network over the two halves of the index. Sampling without
// replacement walks j = 0, 1, 2, ... through the permutation, skipping
// images outside [0, count) (cycle walking).
struct FeistelPermutation {
  unsigned kl, kr;  // half widths, kl + kr = k
  std::uint64_t seed;
  u128 domain;

  explicit FeistelPermutation(u128 count, std::uint64_t s) : seed(s) {
    unsigned k = 1;
    while ((u128(1) << k) < count) k++;
    if (k < 2) k = 2;
    kl = k / 2;
    kr = k - kl;
    domain = u128(1) << k;
  }

  u128 apply(u128 x) const {
    std::uint64_t l = std::uint64_t(x >> kr);
    std::uint64_t r = std::uint64_t(x & ((u128(1) << kr) - 1));
    for (unsigned round = 0; round < 8; round++) {
      if (round % 2 == 0)
        l ^= splitmix64(r ^ seed ^ (0x1000000001ULL * round)) & ((1ULL << kl) - 1);
      else
        r ^= splitmix64(l ^ ~seed ^ (0x2000000003ULL * round)) & ((1ULL << kr) - 1);
    }
    return (u128(l) << kr) | r;
  }
};

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

}  // namespace

CandidateWindow candidate_window(const SearchConfig& config) {
  unsigned b = config.mult_bits;
  if (b < 4) throw std::invalid_argument("search: mult_bits must be >= 4");
  if (b > config.e) throw std::invalid_argument("search: mult_bits exceeds modulus exponent");
  if (b > 126) throw std::invalid_argument("search: mult_bits above 126 not supported");
  Int lo = Int(1) << (b - 1);
  if (config.require_second_msb) lo = Int(3) << (b - 2);
  Int hi = Int(1) << b;
  // first value = 5 (mod 8) at or above lo
  Int first = lo + ((5 - lo % 8) % 8 + 8) % 8;
  Int count = (hi - first + 7) / 8;
  CandidateWindow w;
  w.first = first;
  w.count = (u128((count >> 64).convert_to<std::uint64_t>()) << 64) |
            (count & 0xffffffffffffffffULL).convert_to<std::uint64_t>();
  return w;
}

std::vector<Int> enumerate_candidates(const SearchConfig& config) {
  CandidateWindow w = candidate_window(config);
  std::vector<Int> out;
  if (config.mode == SearchMode::exhaustive) {
    if (w.count > config.exhaustive_cap)
      throw std::invalid_argument("search: window too large for exhaustive mode");
    out.reserve(std::uint64_t(w.count));
    for (u128 i = 0; i < w.count; i++) out.push_back(w.at(i));
    return out;
  }
  if (u128(config.sample_count) > w.count)
    throw std::invalid_argument("search: sample_count exceeds admissible set size");
  FeistelPermutation perm(w.count, config.rng_seed);
  out.reserve(config.sample_count);
  for (u128 j = 0; out.size() < config.sample_count; j++) {
    u128 image = perm.apply(j);
    if (image < w.count) out.push_back(w.at(image));
  }
  return out;
}

std::optional<CandidateRecord> evaluate_candidate(const Int& a, const SearchConfig& config) {
  GeneratorSpec spec{config.kind, config.e, a};
  spec.validate();
  CandidateRecord rec;
  rec.kind = config.kind;
  rec.e = config.e;
  rec.a = a;
  rec.mult_bits = bit_length(a);
  rec.lambda = lambda_merit(spec);
  rec.exact = true;
  for (unsigned d = 2; d <= 8; d++) {
    MeritResult m = figure_of_merit(spec, d, 1, true, config.node_budget);
    if (m.f < config.min_score_threshold) return std::nullopt;
    rec.f.push_back(m.f);
    rec.exact = rec.exact && m.exact;
  }
  rec.min_score = minimum_score(rec.f, 8);
  rec.harm_score = harmonic_score(rec.f, 8);
  return rec;
}

std::uint64_t run_search(const SearchConfig& config, std::ostream& out,
                         const std::function<void(const CandidateRecord&)>& on_record) {
  std::vector<Int> candidates = enumerate_candidates(config);
  out << db_header(false) << '\n';
  std::uint64_t written = 0;
  std::mutex write_mutex;
  auto emit = [&](const CandidateRecord& rec) {
    std::lock_guard<std::mutex> lock(write_mutex);
    out << db_line(rec) << '\n';
    out.flush();
    written++;
    if (on_record) on_record(rec);
  };
  unsigned workers = std::max(1u, config.worker_count);
  if (workers == 1) {
    for (const Int& a : candidates)
      if (auto rec = evaluate_candidate(a, config)) emit(*rec);
    return written;
  }
  std::vector<std::thread> pool;
  std::atomic<size_t> next{0};
  for (unsigned t = 0; t < workers; t++) {
    pool.emplace_back([&] {
      for (size_t i = next.fetch_add(1); i < candidates.size(); i = next.fetch_add(1))
        if (auto rec = evaluate_candidate(candidates[i], config)) emit(*rec);
    });
  }
  for (auto& th : pool) th.join();
  return written;
}

std::string db_header(bool extended) {
  std::string h = "# kind\te\tmultiplier_hex\tbits\tlambda";
  for (unsigned d = 2; d <= 8; d++) h += "\tf" + std::to_string(d);
  h += "\tmin8\tharm8\texact";
  if (extended) {
    for (unsigned d = 2; d <= 8; d++)
      for (unsigned l = 1; l <= 8; l++)
        h += "\tf" + std::to_string(d) + "_lag" + std::to_string(l);
    for (unsigned d = 9; d <= 32; d++) h += "\tf" + std::to_string(d);
  }
  return h;
}

std::string db_line(const CandidateRecord& rec) {
  std::ostringstream os;
  os << kind_name(rec.kind) << '\t' << rec.e << '\t' << to_hex(rec.a) << '\t'
     << rec.mult_bits << '\t' << fixed6(rec.lambda);
  for (double f : rec.f) os << '\t' << fixed6(f);
  os << '\t' << fixed6(rec.min_score) << '\t' << fixed6(rec.harm_score) << '\t'
     << (rec.exact ? 1 : 0);
  for (const auto& row : rec.lag_grid)
    for (double f : row) os << '\t' << fixed6(f);
  for (double f : rec.high_f) os << '\t' << fixed6(f);
  return os.str();
}

std::vector<CandidateRecord> read_db(std::istream& in) {
  std::vector<CandidateRecord> records;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream is(line);
    std::string kind_str, hex;
    CandidateRecord rec;
    int exact_flag = 1;
    is >> kind_str >> rec.e >> hex >> rec.mult_bits >> rec.lambda;
    if (!is) throw std::runtime_error("candidate database: malformed line: " + line);
    rec.kind = kind_str == "mcg" ? Kind::MCG : Kind::LCG;
    rec.a = from_hex(hex);
    rec.f.resize(7);
    for (double& f : rec.f) is >> f;
    is >> rec.min_score >> rec.harm_score >> exact_flag;
    if (!is) throw std::runtime_error("candidate database: malformed line: " + line);
    rec.exact = exact_flag != 0;
    // optional extension columns: 56-cell lag grid, then f9..f32
    std::vector<double> rest;
    double v;
    while (is >> v) rest.push_back(v);
    if (!rest.empty()) {
      if (rest.size() != 56 && rest.size() != 80)
        throw std::runtime_error("candidate database: unexpected extension column count");
      rec.lag_grid.assign(7, std::vector<double>(8));
      size_t idx = 0;
      for (auto& row : rec.lag_grid)
        for (double& f : row) f = rest[idx++];
      while (idx < rest.size()) rec.high_f.push_back(rest[idx++]);
    }
    records.push_back(std::move(rec));
  }
  return records;
}

void write_db(std::ostream& out, const std::vector<CandidateRecord>& records) {
  bool extended = !records.empty() && !records.front().lag_grid.empty();
  out << db_header(extended) << '\n';
  for (const auto& rec : records) out << db_line(rec) << '\n';
}

}  // namespace latspec
