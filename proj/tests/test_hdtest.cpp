#include <doctest.h>

#include <cmath>

#include "latspec/hdtest.hpp"

using namespace latspec;

TEST_CASE("slot_of") {
  CHECK(slot_of(0.0, 2) == 1);   // F(0) = 0.5
  CHECK(slot_of(-2.0, 2) == 0);
  CHECK(slot_of(-2.0, 10000) == 0);
  // F(x) = 0.25 exactly at x = tan(-0.5 atan 2)
  double boundary = std::tan(-0.5 * std::atan(2.0));
  CHECK(slot_of(boundary, 4) == 1);
  CHECK(slot_of(boundary - 1e-9, 4) == 0);
  CHECK(slot_of(1.9999999, 4) == 3);
  CHECK_THROWS(slot_of(2.0, 4));
  CHECK_THROWS(slot_of(-2.0000001, 4));
}

TEST_CASE("chi_square_log_p") {
  // all counts equal to expectation: X = 0, p = 1
  CHECK(chi_square_log_p(std::vector<std::uint64_t>(10, 100), 100.0) == 0.0);
  // df=1, X=3.841: p = erfc(sqrt(X/2)) = 0.0500137
  CHECK(std::fabs(chi_square_log_p(3.841, 1) - std::log(0.05001368376)) < 1e-6);
  // X = df: p ~ 0.5 for large df
  CHECK(std::fabs(std::exp(chi_square_log_p(9999.0, 9999)) - 0.5) < 0.005);
  // deep tail stays finite and monotone
  double tail1 = chi_square_log_p(5e4, 9999);
  double tail2 = chi_square_log_p(6e4, 9999);
  CHECK(tail1 < -1000.0);
  CHECK(tail2 < tail1);
  // Wilson-Hilferty branch (df > 10^6) agrees with p ~ 0.5 at the mean
  CHECK(std::fabs(std::exp(chi_square_log_p(2e6, 2000000)) - 0.5) < 0.01);
  CHECK_THROWS(chi_square_log_p(1.0, 0));
  CHECK_THROWS(chi_square_log_p({1, 2, 3}, 0.0));
}

TEST_CASE("acceptance fraction matches atan(2)/2") {
  HdConfig config;
  config.slots = 100;
  config.batch_samples = 200000;
  config.max_batches = 1;
  HdResult res = hd_resilience_reference(42, config);
  double p = std::atan(2.0) / 2.0;  // 0.5536
  double frac = double(res.total_accepted) / double(config.batch_samples);
  double sigma = std::sqrt(p * (1 - p) / double(config.batch_samples));
  CHECK(std::fabs(frac - p) < 3 * sigma);
}

TEST_CASE("reference source survives a short run") {
  HdConfig config;
  config.slots = 100;
  config.batch_samples = 50000;
  config.max_batches = 20;
  HdResult res = hd_resilience_reference(7, config);
  CHECK_FALSE(res.batches_to_fail.has_value());
  CHECK(res.final_log_p > std::log(1e-6));
}

TEST_CASE("a catastrophically short multiplier fails fast") {
  // a = 5: lambda tiny, the pair structure collapses to a few lines
  HdConfig config;
  config.slots = 100;
  config.batch_samples = 10000;
  config.max_batches = 50;
  HdResult res = hd_resilience({Kind::LCG, 32, 5}, 1, config);
  REQUIRE(res.batches_to_fail.has_value());
  CHECK(*res.batches_to_fail <= 5);
}

TEST_CASE("parameter validation") {
  HdConfig config;
  CHECK_THROWS(hd_resilience({Kind::LCG, 32, 12}, 1, config));      // a != 5 mod 8
  CHECK_THROWS(hd_resilience({Kind::LCG, 32, 13}, 2, config));      // even constant
  HdConfig bad;
  bad.slots = 1;
  CHECK_THROWS(hd_resilience({Kind::LCG, 32, 13}, 1, bad));
}
