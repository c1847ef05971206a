#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "cdlp/benchmark.hpp"
#include "cdlp/pipeline.hpp"

namespace cdlp {

enum class Family { kGn, kLfr };
enum class Method { kBaseline1, kBaseline2Cn, kCdlp };

std::string family_name(Family f);
std::string method_name(Method m);

// One experiment sweep: generate R benchmark instances per sweep value and
// run each requested method on them. The sweep value is z_out for GN and mu
// for LFR; all other generator parameters come from `gn` / `lfr`.
struct ExperimentSpec {
  Family family = Family::kGn;
  std::vector<double> sweep;
  int instances = 10;
  std::vector<Method> methods;
  double p_d = 0.05;
  double p_a = 0.05;
  bool include_raw = false;
  SelectionMetric selection = SelectionMetric::kModularity;
  std::uint64_t master_seed = 0;
  GnConfig gn;
  LfrConfig lfr;
};

// Parses the key = value spec format ('#' comments; lists are
// whitespace/comma separated). Unknown keys are errors.
ExperimentSpec parse_experiment_spec(std::istream& in, const std::string& name = "<stream>");
ExperimentSpec parse_experiment_spec(const std::filesystem::path& path);

struct ResultRow {
  Family family = Family::kGn;
  double sweep_value = 0.0;
  Method method = Method::kBaseline1;
  int instance = 0;
  std::uint64_t seed = 0;
  bool ok = false;
  double nmi = 0.0;
  double q = 0.0;
  std::string chosen_stage;
  double wall_seconds = 0.0;  // monotonic-clock; excluded from determinism
  std::string error;
};

struct ExperimentOutcome {
  std::vector<ResultRow> rows;  // canonical (sweep, method, instance) order
  bool any_failed = false;
};

// Benchmark-instance seed. Shared across methods so they are compared on
// identical networks; pure in its inputs, so execution order is irrelevant.
std::uint64_t instance_seed(std::uint64_t master_seed, Family family, double sweep_value,
                            int instance);

// Runs every cell, optionally on `jobs` worker threads. Failures become
// failed rows; the sweep continues.
ExperimentOutcome run_experiment(const ExperimentSpec& spec, int jobs = 1);

// Raw per-instance rows. Wall time is deliberately left out so reruns are
// byte-identical; request it separately via write_timing_csv.
void write_results_csv(std::ostream& out, const std::vector<ResultRow>& rows);
void write_results_csv(const std::filesystem::path& path, const std::vector<ResultRow>& rows);

// Mean/sample-std aggregates per (sweep value, method) over the ok rows.
void write_summary_csv(std::ostream& out, const std::vector<ResultRow>& rows);
void write_summary_csv(const std::filesystem::path& path, const std::vector<ResultRow>& rows);

void write_timing_csv(std::ostream& out, const std::vector<ResultRow>& rows);
void write_timing_csv(const std::filesystem::path& path, const std::vector<ResultRow>& rows);

}  // namespace cdlp
