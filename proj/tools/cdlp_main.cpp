#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cdlp/benchmark.hpp"
#include "cdlp/community.hpp"
#include "cdlp/errors.hpp"
#include "cdlp/evaluation.hpp"
#include "cdlp/experiment.hpp"
#include "cdlp/io.hpp"
#include "cdlp/pipeline.hpp"
#include "cdlp/rng.hpp"

namespace {

using cdlp::Family;
using cdlp::Graph;
using cdlp::Partition;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitContract = 2;
constexpr int kExitPartialFailure = 3;

struct GenerateOptions {
  std::string family = "gn";
  std::uint64_t seed = 0;
  std::string out;
  cdlp::GnConfig gn;
  cdlp::LfrConfig lfr;
};

struct PipelineOptions {
  std::string graph_path;
  double p_d = 0.05;
  double p_a = 0.05;
  bool include_raw = false;
  std::string selection = "modularity";
  std::string truth_path;
  std::string out;
};

struct ExperimentOptions {
  std::string spec_path;
  std::string out = "experiment";
  std::string timing_path;
  int jobs = 1;
};

std::string q_fixed(double q) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.6f", q);
  return buffer;
}

int cmd_generate(const GenerateOptions& opt) {
  cdlp::GeneratedNetwork network;
  ordered_json meta;
  meta["family"] = opt.family;
  meta["seed"] = opt.seed;
  meta["rng"] = std::string(cdlp::Rng::kAlgorithmId);

  if (opt.family == "gn") {
    network = cdlp::generate_gn(opt.gn, opt.seed);
    meta["config"] = {{"z_out", opt.gn.z_out},
                      {"n", opt.gn.n},
                      {"groups", opt.gn.groups},
                      {"group_size", opt.gn.group_size},
                      {"avg_degree", opt.gn.avg_degree}};
  } else if (opt.family == "lfr") {
    cdlp::LfrDiagnostics diag;
    network = cdlp::generate_lfr(opt.lfr, opt.seed, &diag);
    meta["config"] = {{"mu", opt.lfr.mu},     {"n", opt.lfr.n},
                      {"k_avg", opt.lfr.k_avg}, {"k_max", opt.lfr.k_max},
                      {"gamma", opt.lfr.gamma}, {"beta", opt.lfr.beta}};
    meta["derived"] = {{"degree_cutoff", diag.degree_cutoff},
                       {"min_community_size", diag.min_community_size},
                       {"max_community_size", diag.max_community_size},
                       {"mixing_sweeps", diag.mixing_sweeps}};
  } else {
    throw cdlp::InputError("unknown family '" + opt.family + "'");
  }

  const Graph& g = network.graph;
  double degree_sum = 0.0;
  for (cdlp::NodeId v = 0; v < g.node_count(); ++v) degree_sum += g.degree(v);
  meta["realized"] = {
      {"nodes", g.node_count()},
      {"edges", g.edge_count()},
      {"mean_degree", degree_sum / g.node_count()},
      {"communities", network.partition.community_count()},
      {"mixing", g.edge_count() > 0 ? cdlp::realized_mixing(g, network.partition) : 0.0}};

  cdlp::write_edge_list(opt.out + ".edges", g);
  cdlp::write_community_file(opt.out + ".communities", network.partition);
  std::ofstream meta_out(opt.out + ".meta.json");
  if (!meta_out) throw cdlp::InputError("cannot open " + opt.out + ".meta.json for writing");
  meta_out << meta.dump(2) << '\n';

  std::cout << "wrote " << opt.out << ".edges (" << g.edge_count() << " edges), " << opt.out
            << ".communities, " << opt.out << ".meta.json\n";
  return kExitOk;
}

int cmd_detect(const std::string& graph_path, const std::string& out) {
  const Graph g = cdlp::read_edge_list(graph_path);
  const cdlp::FastGreedyResult result = cdlp::fast_greedy(g);
  if (!out.empty()) cdlp::write_community_file(out, result.partition);
  std::cout << "Q = " << q_fixed(result.q) << '\n';
  return kExitOk;
}

int cmd_pipeline(const PipelineOptions& opt, bool community_aware) {
  const Graph g = cdlp::read_edge_list(opt.graph_path);

  std::optional<Partition> truth;
  if (!opt.truth_path.empty()) {
    truth = cdlp::read_community_file(opt.truth_path);
    if (truth->node_count() != g.node_count()) {
      throw cdlp::InputError("ground truth covers " + std::to_string(truth->node_count()) +
                             " nodes but the graph has " + std::to_string(g.node_count()));
    }
  }

  cdlp::PipelineConfig cfg;
  cfg.p_d = opt.p_d;
  cfg.p_a = opt.p_a;
  cfg.include_raw = opt.include_raw;
  if (opt.selection == "nmi") {
    cfg.selection = cdlp::SelectionMetric::kNmiOracle;
  } else if (opt.selection != "modularity") {
    throw cdlp::InputError("unknown selection metric '" + opt.selection + "'");
  }

  const Partition* truth_ptr = truth ? &*truth : nullptr;
  const cdlp::PipelineResult result =
      community_aware ? cdlp::run_cdlp(g, cfg, truth_ptr)
                      : cdlp::run_baseline2_cn(g, cfg, truth_ptr);

  for (const auto& record : result.stages) {
    std::cout << "stage " << cdlp::stage_name(record.stage) << ": edges="
              << record.graph.edge_count() << " Q=" << q_fixed(record.q);
    if (record.nmi) std::cout << " NMI=" << q_fixed(*record.nmi);
    std::cout << '\n';
  }
  std::cout << "chosen stage: " << cdlp::stage_name(result.chosen_stage) << '\n';
  if (!opt.out.empty()) cdlp::write_community_file(opt.out, result.chosen_partition);
  return kExitOk;
}

int cmd_experiment(const ExperimentOptions& opt) {
  const cdlp::ExperimentSpec spec = cdlp::parse_experiment_spec(opt.spec_path);
  const cdlp::ExperimentOutcome outcome = cdlp::run_experiment(spec, opt.jobs);

  cdlp::write_results_csv(opt.out + ".results.csv", outcome.rows);
  cdlp::write_summary_csv(opt.out + ".summary.csv", outcome.rows);
  if (!opt.timing_path.empty()) cdlp::write_timing_csv(opt.timing_path, outcome.rows);

  std::size_t failed = 0;
  for (const auto& row : outcome.rows) {
    if (!row.ok) ++failed;
  }
  std::cout << "wrote " << opt.out << ".results.csv (" << outcome.rows.size() << " rows, "
            << failed << " failed) and " << opt.out << ".summary.csv\n";
  if (outcome.any_failed) {
    std::cerr << "warning: " << failed << " instance(s) failed\n";
    return kExitPartialFailure;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Community detection with link prediction (CDLP) toolkit"};
  app.require_subcommand(1);

  GenerateOptions gen;
  auto* generate = app.add_subcommand("generate", "Generate a GN or LFR benchmark network");
  generate->add_option("--family", gen.family, "Benchmark family: gn or lfr")
      ->check(CLI::IsMember({"gn", "lfr"}))
      ->required();
  generate->add_option("--seed", gen.seed, "RNG seed")->required();
  generate->add_option("--out", gen.out, "Output file prefix")->required();
  generate->add_option("--z-out", gen.gn.z_out, "GN: expected external degree");
  generate->add_option("--n", gen.gn.n, "GN: node count");
  generate->add_option("--groups", gen.gn.groups, "GN: number of planted groups");
  generate->add_option("--group-size", gen.gn.group_size, "GN: nodes per group");
  generate->add_option("--avg-degree", gen.gn.avg_degree, "GN: expected total degree");
  generate->add_option("--mu", gen.lfr.mu, "LFR: external mixing fraction");
  generate->add_option("--lfr-n", gen.lfr.n, "LFR: node count");
  generate->add_option("--k-avg", gen.lfr.k_avg, "LFR: mean degree");
  generate->add_option("--k-max", gen.lfr.k_max, "LFR: maximum degree");
  generate->add_option("--gamma", gen.lfr.gamma, "LFR: degree power-law exponent");
  generate->add_option("--beta", gen.lfr.beta, "LFR: community-size power-law exponent");

  std::string detect_graph;
  std::string detect_out;
  auto* detect = app.add_subcommand("detect", "Fast-greedy community detection");
  detect->add_option("graph", detect_graph, "Edge-list file")->required();
  detect->add_option("--out", detect_out, "Partition output file");

  PipelineOptions cdlp_opt;
  auto* cdlp_cmd = app.add_subcommand("cdlp", "Three-stage D/A/D link-prediction pipeline");
  PipelineOptions b2_opt;
  auto* baseline2 = app.add_subcommand("baseline2", "CN-index link-prediction pipeline");
  for (auto [cmd, opt] : {std::pair{cdlp_cmd, &cdlp_opt}, std::pair{baseline2, &b2_opt}}) {
    cmd->add_option("graph", opt->graph_path, "Edge-list file")->required();
    cmd->add_option("--p-d", opt->p_d, "Fraction of edges removed per removal stage");
    cmd->add_option("--p-a", opt->p_a, "Fraction of edges added in the addition stage");
    cmd->add_flag("--include-raw", opt->include_raw, "Let the raw network compete in selection");
    cmd->add_option("--selection", opt->selection, "Stage-selection metric")
        ->check(CLI::IsMember({"modularity", "nmi"}));
    cmd->add_option("--truth", opt->truth_path, "Ground-truth community file");
    cmd->add_option("--out", opt->out, "Partition output file");
  }

  ExperimentOptions exp;
  auto* experiment = app.add_subcommand("experiment", "Run a sweep described by a spec file");
  experiment->add_option("spec", exp.spec_path, "Experiment spec file")->required();
  experiment->add_option("--out", exp.out, "Output CSV prefix");
  experiment->add_option("--jobs", exp.jobs, "Worker threads");
  experiment->add_option("--timing", exp.timing_path,
                         "Also write per-instance wall times (non-deterministic)");

  try {
    app.parse(argc, argv);
    if (generate->parsed()) return cmd_generate(gen);
    if (detect->parsed()) return cmd_detect(detect_graph, detect_out);
    if (cdlp_cmd->parsed()) return cmd_pipeline(cdlp_opt, /*community_aware=*/true);
    if (baseline2->parsed()) return cmd_pipeline(b2_opt, /*community_aware=*/false);
    if (experiment->parsed()) return cmd_experiment(exp);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  } catch (const cdlp::ContractError& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return kExitContract;
  } catch (const cdlp::InputError& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return kExitInput;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return kExitContract;
  }
  return kExitOk;
}
