#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <fstream>
#include <sstream>

#include "latspec/genspec.hpp"
#include "latspec/hdtest.hpp"
#include "latspec/search.hpp"
#include "latspec/select.hpp"
#include "latspec/tables.hpp"

namespace py = pybind11;
using namespace latspec;

namespace {

// Multipliers cross the boundary as arbitrary-precision python ints
// (decimal string in the middle; exact in both directions).
Int to_int(const py::object& obj) {
  return Int(py::str(obj).cast<std::string>());
}

py::object to_py(const Int& v) {
  std::ostringstream s;
  s << v;
  return py::int_(py::str(s.str()));
}

Kind to_kind(const std::string& s) {
  if (s == "lcg") return Kind::LCG;
  if (s == "mcg") return Kind::MCG;
  throw std::invalid_argument("kind must be 'lcg' or 'mcg'");
}

GeneratorSpec make_spec(const std::string& kind, unsigned e, const py::object& a) {
  GeneratorSpec spec{to_kind(kind), e, to_int(a)};
  spec.validate();
  return spec;
}

py::dict record_to_dict(const CandidateRecord& rec) {
  py::dict d;
  d["kind"] = kind_name(rec.kind);
  d["e"] = rec.e;
  d["a"] = to_py(rec.a);
  d["a_hex"] = to_hex(rec.a);
  d["bits"] = rec.mult_bits;
  d["lambda"] = rec.lambda;
  d["f"] = rec.f;
  d["min8"] = rec.min_score;
  d["harm8"] = rec.harm_score;
  d["exact"] = rec.exact;
  return d;
}

}  // namespace

PYBIND11_MODULE(_latspec, m) {
  m.doc() = "Lattice quality of congruential generator multipliers";

  m.def("hermite_constant", [](unsigned d) { return double(hermite_constant(d)); },
        py::arg("d"));

  m.def(
      "figure_of_merit",
      [](const std::string& kind, unsigned e, const py::object& a, unsigned d,
         unsigned lag, bool exact) {
        MeritResult r = figure_of_merit(make_spec(kind, e, a), d, lag, exact);
        py::dict out;
        out["nu_sq"] = to_py(r.nu_sq);
        out["f"] = r.f;
        out["exact"] = r.exact;
        return out;
      },
      py::arg("kind"), py::arg("e"), py::arg("a"), py::arg("d"), py::arg("lag") = 1,
      py::arg("exact") = true);

  m.def(
      "lambda_merit",
      [](const std::string& kind, unsigned e, const py::object& a) {
        return lambda_merit(make_spec(kind, e, a));
      },
      py::arg("kind"), py::arg("e"), py::arg("a"));

  m.def("minimum_score", &minimum_score, py::arg("f_by_dim"), py::arg("d_max") = 8);
  m.def("harmonic_score", &harmonic_score, py::arg("f_by_dim"), py::arg("d_max") = 8);

  m.def(
      "score",
      [](const std::string& kind, unsigned e, const py::object& a, unsigned d_max,
         unsigned lag_max, bool high_dims) {
        ReportOptions opt;
        opt.d_max = d_max;
        opt.lag_max = lag_max;
        opt.high_dims = high_dims;
        SpectralReport rep = spectral_report(make_spec(kind, e, a), opt);
        py::dict out;
        out["lambda"] = rep.lambda;
        out["min8"] = rep.min_score;
        out["harm8"] = rep.harm_score;
        py::list f;
        for (const auto& row : rep.f) f.append(py::cast(row));
        out["f"] = f;
        out["high_f"] = rep.high_f;
        return out;
      },
      py::arg("kind"), py::arg("e"), py::arg("a"), py::arg("d_max") = 8,
      py::arg("lag_max") = 8, py::arg("high_dims") = false);

  m.def(
      "classify",
      [](const py::object& a) {
        MultiplierClass c = classify(to_int(a));
        py::dict out;
        out["residue_mod8"] = c.residue_mod8;
        out["mcg_type"] = c.mcg_type == McgType::type5   ? 5
                          : c.mcg_type == McgType::type3 ? 3
                                                         : 0;
        out["full_period_lcg_capable"] = c.full_period_lcg_capable;
        out["max_potency"] = c.max_potency;
        return out;
      },
      py::arg("a"));

  m.def(
      "potency", [](unsigned e, const py::object& a) { return potency(e, to_int(a)); },
      py::arg("e"), py::arg("a"));

  m.def(
      "related_multipliers",
      [](unsigned e, const py::object& a) {
        py::list out;
        for (const Int& r : related_multipliers(e, to_int(a))) out.append(to_py(r));
        return out;
      },
      py::arg("e"), py::arg("a"));

  m.def(
      "constants_equivalent",
      [](unsigned e, const py::object& a, const py::object& c, const py::object& c2,
         bool allow_sign) {
        return constants_equivalent(e, to_int(a), to_int(c), to_int(c2), allow_sign);
      },
      py::arg("e"), py::arg("a"), py::arg("c"), py::arg("c2"),
      py::arg("allow_sign") = false);

  m.def("chi_square_log_p",
        py::overload_cast<double, std::uint64_t>(&chi_square_log_p), py::arg("x"),
        py::arg("df"));

  m.def(
      "hd_resilience",
      [](const std::string& kind, unsigned e, const py::object& a, const py::object& c,
         unsigned slots, std::uint64_t batch_samples, unsigned max_batches) {
        HdConfig config;
        config.slots = slots;
        config.batch_samples = batch_samples;
        config.max_batches = max_batches;
        HdResult r = hd_resilience(make_spec(kind, e, a), to_int(c), config);
        py::dict out;
        out["batches_to_fail"] = r.batches_to_fail
                                     ? py::cast(*r.batches_to_fail)
                                     : py::object(py::none());
        out["final_log_p"] = r.final_log_p;
        out["total_accepted"] = r.total_accepted;
        return out;
      },
      py::arg("kind"), py::arg("e"), py::arg("a"), py::arg("c") = 1,
      py::arg("slots") = 10000, py::arg("batch_samples") = 1000000,
      py::arg("max_batches") = 500);

  m.def(
      "search",
      [](const std::string& kind, unsigned e, unsigned mult_bits, std::uint64_t samples,
         std::uint64_t seed, double min_score, bool exhaustive, bool second_msb,
         unsigned workers) {
        SearchConfig config;
        config.kind = to_kind(kind);
        config.e = e;
        config.mult_bits = mult_bits;
        config.mode = exhaustive ? SearchMode::exhaustive : SearchMode::sample;
        config.sample_count = samples;
        config.rng_seed = seed;
        config.min_score_threshold = min_score;
        config.require_second_msb = second_msb;
        config.worker_count = workers;
        std::ostringstream sink;
        py::list out;
        run_search(config, sink,
                   [&](const CandidateRecord& rec) { out.append(record_to_dict(rec)); });
        return out;
      },
      py::arg("kind"), py::arg("e"), py::arg("mult_bits"), py::arg("samples") = 0,
      py::arg("seed") = 0, py::arg("min_score") = 0.70, py::arg("exhaustive") = false,
      py::arg("second_msb") = false, py::arg("workers") = 1);

  m.def(
      "select_from_db",
      [](const std::string& path, double quartile, double high_dim_threshold,
         double millile, bool pareto) {
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot open " + path);
        auto records = read_db(in);
        SelectionConfig config;
        config.lag_quartile = quartile;
        config.high_dim_threshold = high_dim_threshold;
        config.millile = millile;
        records = lag_quartile_filter(std::move(records), config);
        records = high_dim_filter(std::move(records), config);
        if (pareto) {
          py::list out;
          for (const auto& rec : pareto_front(records)) out.append(record_to_dict(rec));
          return py::object(out);
        }
        return py::object(record_to_dict(millile_select(records, config)));
      },
      py::arg("path"), py::arg("quartile") = 0.25, py::arg("high_dim_threshold") = 0.5,
      py::arg("millile") = 0.001, py::arg("pareto") = false);

  m.def("verify_tables", [](const std::string& which) {
    py::list out;
    for (const auto& table : reference_tables()) {
      if (which != "all" && which != table.name) continue;
      for (const auto& cell : verify_table(table)) {
        py::dict d;
        d["table"] = cell.table;
        d["multiplier"] = cell.multiplier;
        d["cell"] = cell.cell;
        d["expected"] = cell.expected;
        d["computed"] = cell.computed;
        d["pass"] = cell.pass;
        out.append(d);
      }
    }
    return out;
  }, py::arg("which") = "all");
}
