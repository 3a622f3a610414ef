#include <doctest.h>

#include <algorithm>
#include <random>

#include "latspec/select.hpp"

using namespace latspec;

namespace {

CandidateRecord make_record(unsigned id, double min8, double harm8,
                            double high_floor = 0.6) {
  CandidateRecord rec;
  rec.kind = Kind::LCG;
  rec.e = 64;
  rec.a = Int(id) * 8 + 5;
  rec.mult_bits = 64;
  rec.f.assign(7, min8);
  rec.min_score = min8;
  rec.harm_score = harm8;
  rec.lag_grid.assign(7, std::vector<double>(8, min8));
  rec.high_f.assign(24, high_floor);
  return rec;
}

std::vector<CandidateRecord> quadratic_pareto(const std::vector<CandidateRecord>& recs) {
  std::vector<CandidateRecord> front;
  for (const auto& r : recs) {
    bool dominated = false;
    for (const auto& s : recs)
      if (s.min_score >= r.min_score && s.harm_score >= r.harm_score &&
          (s.min_score > r.min_score || s.harm_score > r.harm_score))
        dominated = true;
    if (!dominated) front.push_back(r);
  }
  return front;
}

}  // namespace

TEST_CASE("lag quartile filter") {
  SelectionConfig config;
  std::vector<CandidateRecord> four = {make_record(0, 0.1, 0.5), make_record(1, 0.2, 0.5),
                                       make_record(2, 0.3, 0.5),
                                       make_record(3, 0.4, 0.5)};
  auto kept = lag_quartile_filter(four, config);
  CHECK(kept.size() == 3);
  for (const auto& r : kept) CHECK(r.min_score >= 0.2);

  // all identical: ties at the boundary survive
  std::vector<CandidateRecord> same(10, make_record(7, 0.5, 0.5));
  CHECK(lag_quartile_filter(same, config).size() == 10);

  // 2000 distinct minima: exactly the top 1500 survive
  std::vector<CandidateRecord> pool;
  for (unsigned i = 0; i < 2000; i++)
    pool.push_back(make_record(i, 0.5 + i * 1e-4, 0.5));
  kept = lag_quartile_filter(pool, config);
  CHECK(kept.size() == 1500);
  double cutoff = 0.5 + 500 * 1e-4;
  for (const auto& r : kept) CHECK(r.min_score >= cutoff);

  CHECK_THROWS(lag_quartile_filter({}, config));
}

TEST_CASE("quartile strata are independent") {
  SelectionConfig config;
  std::vector<CandidateRecord> pool;
  for (unsigned i = 0; i < 8; i++) pool.push_back(make_record(i, 0.1 * (i + 1), 0.5));
  for (unsigned i = 0; i < 8; i++) {
    CandidateRecord r = make_record(100 + i, 0.1 * (i + 1), 0.5);
    r.mult_bits = 32;  // different stratum
    pool.push_back(r);
  }
  auto kept = lag_quartile_filter(pool, config);
  size_t small = 0, large = 0;
  for (const auto& r : kept) (r.mult_bits == 32 ? small : large)++;
  CHECK(small == 6);  // each stratum keeps its own top 6 of 8
  CHECK(large == 6);
}

TEST_CASE("high dim filter") {
  SelectionConfig config;
  CandidateRecord bad = make_record(1, 0.7, 0.8);
  bad.high_f[17 - 9] = 0.49;
  CandidateRecord good = make_record(2, 0.7, 0.8);
  for (auto& f : good.high_f) f = 0.6 + 0.2 * (&f - good.high_f.data()) / 24.0;
  auto kept = high_dim_filter({bad, good}, config);
  CHECK(kept.size() == 1);
  CHECK(kept[0].a == good.a);
  CHECK(high_dim_filter({}, config).empty());
}

TEST_CASE("millile_select") {
  SelectionConfig config;
  // §9 pair: both in the millile, harmonic decides
  CandidateRecord first = make_record(0, 0.766073, 0.782507);
  first.a = from_hex("0xe2e19bb27190da6d");
  CandidateRecord second = make_record(1, 0.766043, 0.877164);
  second.a = from_hex("0xe73d20db8e96d2cd");
  config.millile = 0.9;  // rank ceil(0.9*2) = 2: both qualify
  CHECK(millile_select({first, second}, config).a == second.a);

  // 1000 distinct minima at the default millile: top 1 only
  config.millile = 0.001;
  std::vector<CandidateRecord> pool;
  for (unsigned i = 0; i < 1000; i++)
    pool.push_back(make_record(i, 0.70 + i * 1e-5, 1.0 - i * 1e-5));
  CHECK(millile_select(pool, config).a == pool.back().a);

  CHECK(millile_select({first}, config).a == first.a);
  CHECK_THROWS(millile_select({}, config));

  // deterministic tie-break: smallest multiplier
  CandidateRecord t1 = make_record(5, 0.75, 0.8), t2 = make_record(3, 0.75, 0.8);
  config.millile = 0.9;
  CHECK(millile_select({t1, t2}, config).a == t2.a);
}

TEST_CASE("pareto front") {
  std::vector<CandidateRecord> recs = {make_record(0, 0.7, 0.8), make_record(1, 0.7, 0.9),
                                       make_record(2, 0.8, 0.7)};
  auto front = pareto_front(recs);
  REQUIRE(front.size() == 2);
  std::vector<Int> got = {front[0].a, front[1].a};
  std::sort(got.begin(), got.end());
  CHECK(got == std::vector<Int>{recs[1].a, recs[2].a});

  CHECK(pareto_front({recs[0]}).size() == 1);

  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> uni(0.6, 0.9);
  std::vector<CandidateRecord> random_pool;
  for (unsigned i = 0; i < 100; i++)
    random_pool.push_back(make_record(i, uni(rng), uni(rng)));
  auto fast = pareto_front(random_pool);
  auto slow = quadratic_pareto(random_pool);
  auto key = [](const CandidateRecord& r) { return r.a; };
  std::vector<Int> kf, ks;
  for (const auto& r : fast) kf.push_back(key(r));
  for (const auto& r : slow) ks.push_back(key(r));
  std::sort(kf.begin(), kf.end());
  std::sort(ks.begin(), ks.end());
  CHECK(kf == ks);
}

TEST_CASE("pipeline stages are idempotent subsets") {
  SelectionConfig config;
  std::mt19937_64 rng(123);
  std::uniform_real_distribution<double> uni(0.55, 0.85);
  std::vector<CandidateRecord> pool;
  for (unsigned i = 0; i < 400; i++)
    pool.push_back(make_record(i, uni(rng), uni(rng), uni(rng)));
  auto q1 = lag_quartile_filter(pool, config);
  CHECK(q1.size() >= pool.size() * 3 / 4);
  CHECK(q1.size() <= pool.size());
  auto q2 = lag_quartile_filter(q1, config);
  // a second pass re-quantiles the survivors; it must stay a subset
  CHECK(q2.size() <= q1.size());
  auto h1 = high_dim_filter(q1, config);
  CHECK(high_dim_filter(h1, config).size() == h1.size());
}
