#include "cdlp/experiment.hpp"

#include <atomic>
#include <chrono>
#include <cstring>
#include <fstream>
#include <sstream>
#include <thread>

#include "cdlp/errors.hpp"
#include "cdlp/evaluation.hpp"
#include "cdlp/io.hpp"
#include "cdlp/rng.hpp"

namespace cdlp {

std::string family_name(Family f) {
  return f == Family::kGn ? "gn" : "lfr";
}

std::string method_name(Method m) {
  switch (m) {
    case Method::kBaseline1: return "baseline1";
    case Method::kBaseline2Cn: return "baseline2-cn";
    case Method::kCdlp: return "cdlp";
  }
  return "?";
}

namespace {

std::vector<std::string> split_list(const std::string& value) {
  std::string normalized = value;
  for (char& c : normalized) {
    if (c == ',') c = ' ';
  }
  std::istringstream in(normalized);
  std::vector<std::string> out;
  std::string token;
  while (in >> token) out.push_back(token);
  return out;
}

double parse_real(const std::string& value, const std::string& key) {
  try {
    std::size_t used = 0;
    const double v = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw InputError("key '" + key + "': cannot parse real value '" + value + "'");
  }
}

std::int64_t parse_int(const std::string& value, const std::string& key) {
  try {
    std::size_t used = 0;
    const std::int64_t v = std::stoll(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw InputError("key '" + key + "': cannot parse integer value '" + value + "'");
  }
}

bool parse_bool(const std::string& value, const std::string& key) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  throw InputError("key '" + key + "': cannot parse boolean value '" + value + "'");
}

Method parse_method(const std::string& token) {
  if (token == "baseline1") return Method::kBaseline1;
  if (token == "baseline2" || token == "baseline2-cn") return Method::kBaseline2Cn;
  if (token == "cdlp") return Method::kCdlp;
  throw InputError("unknown method '" + token + "'");
}

void validate_spec(const ExperimentSpec& spec) {
  if (spec.sweep.empty()) throw InputError("experiment spec needs a non-empty sweep");
  if (spec.instances < 1) throw InputError("instances must be >= 1");
  if (spec.methods.empty()) throw InputError("experiment spec needs at least one method");
  for (double v : spec.sweep) {
    if (spec.family == Family::kGn && (v < 0.0 || v > spec.gn.avg_degree)) {
      throw InputError("sweep value " + format_double(v) + " outside [0, avg_degree]");
    }
    if (spec.family == Family::kLfr && (v < 0.0 || v >= 1.0)) {
      throw InputError("sweep value " + format_double(v) + " outside [0, 1)");
    }
  }
}

}  // namespace

ExperimentSpec parse_experiment_spec(std::istream& in, const std::string& name) {
  ExperimentSpec spec;
  spec.methods = {Method::kBaseline1, Method::kBaseline2Cn, Method::kCdlp};

  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    const auto eq = line.find('=');
    if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
    if (eq == std::string::npos) {
      throw InputError(name + ":" + std::to_string(line_no) + ": expected 'key = value'");
    }
    auto trim = [](std::string s) {
      const auto first = s.find_first_not_of(" \t\r\n");
      const auto last = s.find_last_not_of(" \t\r\n");
      return first == std::string::npos ? std::string() : s.substr(first, last - first + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) {
      throw InputError(name + ":" + std::to_string(line_no) + ": empty key or value");
    }

    if (key == "family") {
      if (value == "gn") {
        spec.family = Family::kGn;
      } else if (value == "lfr") {
        spec.family = Family::kLfr;
      } else {
        throw InputError("unknown family '" + value + "'");
      }
    } else if (key == "sweep") {
      spec.sweep.clear();
      for (const auto& token : split_list(value)) {
        spec.sweep.push_back(parse_real(token, key));
      }
    } else if (key == "instances") {
      spec.instances = static_cast<int>(parse_int(value, key));
    } else if (key == "methods") {
      spec.methods.clear();
      for (const auto& token : split_list(value)) spec.methods.push_back(parse_method(token));
    } else if (key == "p_d") {
      spec.p_d = parse_real(value, key);
    } else if (key == "p_a") {
      spec.p_a = parse_real(value, key);
    } else if (key == "include_raw") {
      spec.include_raw = parse_bool(value, key);
    } else if (key == "selection") {
      if (value == "modularity") {
        spec.selection = SelectionMetric::kModularity;
      } else if (value == "nmi") {
        spec.selection = SelectionMetric::kNmiOracle;
      } else {
        throw InputError("unknown selection metric '" + value + "'");
      }
    } else if (key == "master_seed") {
      spec.master_seed = static_cast<std::uint64_t>(parse_int(value, key));
    } else if (key == "gn_n") {
      spec.gn.n = static_cast<int>(parse_int(value, key));
    } else if (key == "gn_groups") {
      spec.gn.groups = static_cast<int>(parse_int(value, key));
    } else if (key == "gn_group_size") {
      spec.gn.group_size = static_cast<int>(parse_int(value, key));
    } else if (key == "gn_avg_degree") {
      spec.gn.avg_degree = parse_real(value, key);
    } else if (key == "lfr_n") {
      spec.lfr.n = static_cast<int>(parse_int(value, key));
    } else if (key == "lfr_k_avg") {
      spec.lfr.k_avg = parse_real(value, key);
    } else if (key == "lfr_k_max") {
      spec.lfr.k_max = static_cast<int>(parse_int(value, key));
    } else if (key == "lfr_gamma") {
      spec.lfr.gamma = parse_real(value, key);
    } else if (key == "lfr_beta") {
      spec.lfr.beta = parse_real(value, key);
    } else {
      throw InputError(name + ":" + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
  }
  validate_spec(spec);
  return spec;
}

ExperimentSpec parse_experiment_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string() + " for reading");
  return parse_experiment_spec(in, path.string());
}

std::uint64_t instance_seed(std::uint64_t master_seed, Family family, double sweep_value,
                            int instance) {
  std::uint64_t h = mix64(master_seed);
  h = Rng::derive(h, hash_str64(family_name(family)));
  std::uint64_t sweep_bits = 0;
  static_assert(sizeof(sweep_bits) == sizeof(sweep_value));
  std::memcpy(&sweep_bits, &sweep_value, sizeof(sweep_bits));
  h = Rng::derive(h, sweep_bits);
  h = Rng::derive(h, static_cast<std::uint64_t>(instance));
  return h;
}

namespace {

ResultRow run_cell(const ExperimentSpec& spec, double sweep_value, Method method,
                   int instance) {
  ResultRow row;
  row.family = spec.family;
  row.sweep_value = sweep_value;
  row.method = method;
  row.instance = instance;
  row.seed = instance_seed(spec.master_seed, spec.family, sweep_value, instance);

  const auto started = std::chrono::steady_clock::now();
  try {
    GeneratedNetwork network;
    if (spec.family == Family::kGn) {
      GnConfig cfg = spec.gn;
      cfg.z_out = sweep_value;
      network = generate_gn(cfg, row.seed);
    } else {
      LfrConfig cfg = spec.lfr;
      cfg.mu = sweep_value;
      network = generate_lfr(cfg, row.seed);
    }

    PipelineConfig cfg;
    cfg.p_d = spec.p_d;
    cfg.p_a = spec.p_a;
    cfg.include_raw = spec.include_raw;
    cfg.selection = spec.selection;

    PipelineResult result;
    switch (method) {
      case Method::kBaseline1:
        result = run_baseline1(network.graph, &network.partition);
        break;
      case Method::kBaseline2Cn:
        result = run_baseline2_cn(network.graph, cfg, &network.partition);
        break;
      case Method::kCdlp:
        result = run_cdlp(network.graph, cfg, &network.partition);
        break;
    }
    const StageRecord& chosen = result.chosen();
    row.ok = true;
    row.nmi = chosen.nmi.value();
    row.q = chosen.q;
    row.chosen_stage = stage_name(result.chosen_stage);
  } catch (const std::exception& ex) {
    row.ok = false;
    row.error = ex.what();
  }
  row.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return row;
}

}  // namespace

ExperimentOutcome run_experiment(const ExperimentSpec& spec, int jobs) {
  validate_spec(spec);

  struct Cell {
    double sweep_value;
    Method method;
    int instance;
  };
  std::vector<Cell> cells;
  for (double sweep_value : spec.sweep) {
    for (Method method : spec.methods) {
      for (int instance = 0; instance < spec.instances; ++instance) {
        cells.push_back({sweep_value, method, instance});
      }
    }
  }

  ExperimentOutcome outcome;
  outcome.rows.resize(cells.size());
  const int workers = std::max(1, jobs);
  if (workers == 1) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      outcome.rows[i] = run_cell(spec, cells[i].sweep_value, cells[i].method, cells[i].instance);
    }
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
      while (true) {
        const std::size_t i = next.fetch_add(1);
        if (i >= cells.size()) break;
        outcome.rows[i] =
            run_cell(spec, cells[i].sweep_value, cells[i].method, cells[i].instance);
      }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  for (const auto& row : outcome.rows) {
    if (!row.ok) outcome.any_failed = true;
  }
  return outcome;
}

void write_results_csv(std::ostream& out, const std::vector<ResultRow>& rows) {
  out << "# cdlp-results v1\n";
  out << "family,sweep_value,method,instance,seed,status,nmi,q,chosen_stage\n";
  for (const auto& row : rows) {
    out << family_name(row.family) << ',' << format_double(row.sweep_value) << ','
        << method_name(row.method) << ',' << row.instance << ',' << row.seed << ',';
    if (row.ok) {
      out << "ok," << format_double(row.nmi) << ',' << format_double(row.q) << ','
          << row.chosen_stage << '\n';
    } else {
      out << "failed,,," << '\n';
    }
  }
}

void write_results_csv(const std::filesystem::path& path, const std::vector<ResultRow>& rows) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot open " + path.string() + " for writing");
  write_results_csv(out, rows);
}

void write_summary_csv(std::ostream& out, const std::vector<ResultRow>& rows) {
  out << "# cdlp-summary v1\n";
  out << "family,sweep_value,method,count,nmi_mean,nmi_std,q_mean,q_std\n";

  // Rows arrive in canonical order; group by (sweep value, method) runs.
  std::size_t i = 0;
  while (i < rows.size()) {
    std::size_t j = i;
    std::vector<double> nmis;
    std::vector<double> qs;
    while (j < rows.size() && rows[j].sweep_value == rows[i].sweep_value &&
           rows[j].method == rows[i].method) {
      if (rows[j].ok) {
        nmis.push_back(rows[j].nmi);
        qs.push_back(rows[j].q);
      }
      ++j;
    }
    out << family_name(rows[i].family) << ',' << format_double(rows[i].sweep_value) << ','
        << method_name(rows[i].method) << ',' << nmis.size() << ',';
    if (nmis.empty()) {
      out << ",,,\n";
    } else {
      const Aggregate nmi_agg = aggregate(nmis);
      const Aggregate q_agg = aggregate(qs);
      out << format_double(nmi_agg.mean) << ',' << format_double(nmi_agg.stddev) << ','
          << format_double(q_agg.mean) << ',' << format_double(q_agg.stddev) << '\n';
    }
    i = j;
  }
}

void write_summary_csv(const std::filesystem::path& path, const std::vector<ResultRow>& rows) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot open " + path.string() + " for writing");
  write_summary_csv(out, rows);
}

void write_timing_csv(std::ostream& out, const std::vector<ResultRow>& rows) {
  out << "# cdlp-timing v1 (wall times; not covered by determinism guarantees)\n";
  out << "family,sweep_value,method,instance,wall_seconds\n";
  for (const auto& row : rows) {
    out << family_name(row.family) << ',' << format_double(row.sweep_value) << ','
        << method_name(row.method) << ',' << row.instance << ','
        << format_double(row.wall_seconds) << '\n';
  }
}

void write_timing_csv(const std::filesystem::path& path, const std::vector<ResultRow>& rows) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot open " + path.string() + " for writing");
  write_timing_csv(out, rows);
}

}  // namespace cdlp
