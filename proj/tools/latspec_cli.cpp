// Command-line surface: score | search | select | hdtest | verify.
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "latspec/hdtest.hpp"
#include "latspec/search.hpp"
#include "latspec/select.hpp"
#include "latspec/tables.hpp"

using namespace latspec;
using nlohmann::json;

namespace {

std::uint64_t env_node_budget() {
  if (const char* v = std::getenv("LATSPEC_ENUM_BUDGET")) return std::strtoull(v, nullptr, 10);
  return kDefaultEnumBudget;
}

Kind parse_kind(const std::string& s) {
  if (s == "lcg") return Kind::LCG;
  if (s == "mcg") return Kind::MCG;
  throw CLI::ValidationError("--kind must be lcg or mcg");
}

int cmd_score(const std::string& kind, unsigned e, const std::string& mult_hex,
              unsigned max_dim, unsigned lags, bool high_dims, bool exact_high,
              bool as_json) {
  GeneratorSpec spec{parse_kind(kind), e, from_hex(mult_hex)};
  ReportOptions opt;
  opt.d_max = max_dim;
  opt.lag_max = lags;
  opt.high_dims = high_dims;
  opt.exact_high_dims = exact_high;
  opt.node_budget = env_node_budget();
  SpectralReport rep = spectral_report(spec, opt);
  if (as_json) {
    json j{{"kind", kind_name(spec.kind)},
           {"e", spec.e},
           {"multiplier", to_hex(spec.a)},
           {"lambda", format_lambda(rep.lambda)},
           {"min8", format_score(rep.min_score)},
           {"harm8", format_score(rep.harm_score)}};
    json cells = json::array();
    for (unsigned d = 2; d <= rep.d_max; d++)
      for (unsigned lag = 1; lag <= rep.lag_max; lag++)
        cells.push_back({{"d", d},
                         {"lag", lag},
                         {"nu_sq", rep.nu_sq[d - 2][lag - 1].str()},
                         {"f", format_score(rep.f[d - 2][lag - 1])},
                         {"exact", bool(rep.exact[d - 2][lag - 1])}});
    j["cells"] = std::move(cells);
    if (high_dims) {
      json hd = json::array();
      for (unsigned d = 9; d <= kMaxDim; d++)
        hd.push_back({{"d", d},
                      {"f", format_score(rep.high_f[d - 9])},
                      {"exact", bool(rep.high_exact[d - 9])}});
      j["high_dims"] = std::move(hd);
    }
    std::cout << j.dump() << '\n';
    return 0;
  }
  std::cout << "# kind\te\tmultiplier_hex\tlambda\tmin" << rep.d_max << "\tharm"
            << rep.d_max << '\n';
  std::cout << kind_name(spec.kind) << '\t' << spec.e << '\t' << to_hex(spec.a) << '\t'
            << format_lambda(rep.lambda) << '\t' << format_score(rep.min_score) << '\t'
            << format_score(rep.harm_score) << '\n';
  std::cout << "# d\tlag\tnu_sq\tf\texact\n";
  for (unsigned d = 2; d <= rep.d_max; d++)
    for (unsigned lag = 1; lag <= rep.lag_max; lag++)
      std::cout << d << '\t' << lag << '\t' << rep.nu_sq[d - 2][lag - 1] << '\t'
                << format_score(rep.f[d - 2][lag - 1]) << '\t'
                << (rep.exact[d - 2][lag - 1] ? 1 : 0) << '\n';
  if (high_dims)
    for (unsigned d = 9; d <= kMaxDim; d++)
      std::cout << d << "\t1\t-\t" << format_score(rep.high_f[d - 9]) << '\t'
                << (rep.high_exact[d - 9] ? 1 : 0) << '\n';
  return 0;
}

int cmd_verify(const std::string& which) {
  bool all_pass = true;
  for (const auto& table : reference_tables()) {
    if (which != "all" && which != table.name) continue;
    for (const auto& cell : verify_table(table, env_node_budget())) {
      std::cout << (cell.pass ? "PASS" : "FAIL") << '\t' << cell.table << '\t'
                << cell.multiplier << '\t' << cell.cell << "\texpected=" << cell.expected
                << "\tcomputed=" << cell.computed << '\n';
      all_pass = all_pass && cell.pass;
    }
  }
  std::cout << (all_pass ? "ALL PASS" : "VERIFICATION FAILED") << '\n';
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lattice quality of congruential generator multipliers"};
  app.require_subcommand(1);

  std::string kind = "lcg", mult_hex, db_path, table = "all", out_path;
  unsigned e = 64, max_dim = 8, lags = 8, mult_bits = 32, workers = 1, max_batches = 500;
  unsigned slots = 10000;
  bool high_dims = false, exact_high = false, as_json = false;
  bool exhaustive = false, second_msb = false, pareto = false;
  std::uint64_t samples = 0, seed = 0, batch_samples = 1000000;
  double min_score = 0.70, quartile = 0.25, high_thresh = 0.5, millile = 0.001;
  std::string constant_hex = "0x1", seed_hex = "0x1";

  auto* score = app.add_subcommand("score", "Spectral report for one multiplier");
  score->add_option("--kind", kind, "lcg or mcg")->required();
  score->add_option("--modulus-bits", e, "modulus exponent e (m = 2^e)")->required();
  score->add_option("--multiplier", mult_hex, "multiplier, hex")->required();
  score->add_option("--max-dim", max_dim, "highest dimension of the lag grid");
  score->add_option("--lags", lags, "number of lags");
  score->add_flag("--high-dims", high_dims, "also compute f_9..f_32");
  score->add_flag("--exact-high", exact_high, "certify high dimensions by enumeration");
  score->add_flag("--json", as_json, "JSON output");

  auto* search = app.add_subcommand("search", "Search a bit window for good multipliers");
  search->add_option("--kind", kind)->required();
  search->add_option("--modulus-bits", e)->required();
  search->add_option("--mult-bits", mult_bits)->required();
  search->add_flag("--exhaustive", exhaustive, "scan the whole window");
  search->add_option("--samples", samples, "sample size (without replacement)");
  search->add_option("--seed", seed, "sampling seed");
  search->add_option("--min-score", min_score, "recording threshold on the minimum score");
  search->add_flag("--require-second-msb", second_msb);
  search->add_option("--workers", workers);
  search->add_option("--out", db_path, "candidate database (TSV, appended)")->required();

  auto* select = app.add_subcommand("select", "Run the selection pipeline over a database");
  select->add_option("--in", db_path)->required();
  select->add_option("--quartile", quartile);
  select->add_option("--high-dim-threshold", high_thresh);
  select->add_option("--millile", millile);
  select->add_flag("--pareto", pareto, "print the Pareto front instead of the single pick");

  auto* hd = app.add_subcommand("hdtest", "Rejection-test resilience of a multiplier");
  hd->add_option("--kind", kind)->required();
  hd->add_option("--modulus-bits", e)->required();
  hd->add_option("--multiplier", mult_hex)->required();
  hd->add_option("--slots", slots);
  hd->add_option("--batch-samples", batch_samples);
  hd->add_option("--max-batches", max_batches);
  hd->add_option("--constant", constant_hex, "LCG additive constant, hex (odd)");
  hd->add_option("--seed-state", seed_hex, "initial state, hex");

  auto* verify = app.add_subcommand("verify", "Recompute the embedded reference tables");
  verify->add_option("--table", table, "all or a table name");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    app.exit(err);
    return err.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    if (score->parsed())
      return cmd_score(kind, e, mult_hex, max_dim, lags, high_dims, exact_high, as_json);
    if (search->parsed()) {
      SearchConfig config;
      config.kind = parse_kind(kind);
      config.e = e;
      config.mult_bits = mult_bits;
      config.require_second_msb = second_msb;
      config.mode = exhaustive ? SearchMode::exhaustive : SearchMode::sample;
      config.sample_count = samples;
      config.rng_seed = seed;
      config.min_score_threshold = min_score;
      config.worker_count = workers;
      config.node_budget = env_node_budget();
      if (!exhaustive && samples == 0)
        throw std::invalid_argument("search: --samples required unless --exhaustive");
      std::ofstream out(db_path, std::ios::app);
      if (!out) throw std::runtime_error("cannot open " + db_path);
      std::uint64_t n = run_search(config, out);
      std::cerr << "recorded " << n << " candidates\n";
      return 0;
    }
    if (select->parsed()) {
      std::ifstream in(db_path);
      if (!in) throw std::runtime_error("cannot open " + db_path);
      auto records = read_db(in);
      SelectionConfig config;
      config.lag_quartile = quartile;
      config.high_dim_threshold = high_thresh;
      config.millile = millile;
      config.node_budget = env_node_budget();
      records = lag_quartile_filter(std::move(records), config);
      records = high_dim_filter(std::move(records), config);
      if (pareto) {
        write_db(std::cout, pareto_front(records));
      } else {
        CandidateRecord best = millile_select(records, config);
        write_db(std::cout, {best});
      }
      return 0;
    }
    if (hd->parsed()) {
      GeneratorSpec spec{parse_kind(kind), e, from_hex(mult_hex)};
      HdConfig config;
      config.slots = slots;
      config.batch_samples = batch_samples;
      config.max_batches = max_batches;
      config.seed_state = from_hex(seed_hex);
      HdResult res = hd_resilience(spec, from_hex(constant_hex), config);
      std::cout << "# multiplier_hex\tslots\tbatch_samples\tbatches_to_fail\tfinal_log_p\n";
      std::cout << to_hex(spec.a) << '\t' << slots << '\t' << batch_samples << '\t'
                << (res.batches_to_fail ? std::to_string(*res.batches_to_fail)
                                        : std::string("survived"))
                << '\t' << res.final_log_p << '\n';
      return 0;
    }
    if (verify->parsed()) return cmd_verify(table);
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 2;
  }
  return 2;
}
