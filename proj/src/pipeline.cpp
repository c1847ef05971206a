#include "cdlp/pipeline.hpp"

#include <cmath>

#include "cdlp/community.hpp"
#include "cdlp/errors.hpp"
#include "cdlp/evaluation.hpp"

namespace cdlp {

std::string stage_name(StageId stage) {
  switch (stage) {
    case StageId::kRaw: return "G";
    case StageId::kStage1: return "G1";
    case StageId::kStage2: return "G2";
    case StageId::kStage3: return "G3";
  }
  return "?";
}

std::int64_t round_count(double value) {
  return static_cast<std::int64_t>(std::floor(value + 0.5));
}

const StageRecord& PipelineResult::chosen() const {
  for (const auto& record : stages) {
    if (record.stage == chosen_stage) return record;
  }
  throw ContractError("pipeline result has no record for its chosen stage");
}

namespace {

void validate_config(const PipelineConfig& cfg, const Partition* truth) {
  if (cfg.p_d < 0.0 || cfg.p_d >= 1.0 || cfg.p_a < 0.0 || cfg.p_a >= 1.0) {
    throw InputError("p_d and p_a must lie in [0,1)");
  }
  if (cfg.selection == SelectionMetric::kNmiOracle && truth == nullptr) {
    throw ContractError("nmi-oracle selection requires a ground-truth partition");
  }
}

StageRecord detect_stage(StageId stage, Graph graph, const Partition* truth) {
  if (graph.edge_count() < 1) {
    throw DegenerateStageError(stage_name(stage),
                               "stage " + stage_name(stage) + " lost all edges");
  }
  StageRecord record;
  record.stage = stage;
  FastGreedyResult detected = fast_greedy(graph);
  record.graph = std::move(graph);
  record.partition = std::move(detected.partition);
  record.q = detected.q;
  if (truth != nullptr) record.nmi = nmi(*truth, record.partition);
  return record;
}

PipelineResult select_stage(std::vector<StageRecord> stages, const PipelineConfig& cfg) {
  PipelineResult result;
  result.stages = std::move(stages);

  const StageRecord* best = nullptr;
  for (const auto& record : result.stages) {
    if (record.stage == StageId::kRaw && !cfg.include_raw && result.stages.size() > 1) {
      continue;
    }
    const double value = cfg.selection == SelectionMetric::kNmiOracle ? *record.nmi : record.q;
    const double best_value =
        best == nullptr ? 0.0
                        : (cfg.selection == SelectionMetric::kNmiOracle ? *best->nmi : best->q);
    if (best == nullptr || value > best_value) best = &record;
  }
  result.chosen_stage = best->stage;
  result.chosen_partition = best->partition;
  return result;
}

// Shared staging for run_cdlp and run_baseline2_cn; `community_aware`
// switches between the D/A indices and the CN baseline.
PipelineResult run_staged(const Graph& g, const PipelineConfig& cfg, const Partition* truth,
                          bool community_aware) {
  validate_config(cfg, truth);
  if (g.edge_count() < 1) {
    throw ContractError("pipeline requires a graph with at least one edge");
  }
  const auto removal = community_aware ? RemovalIndex::kD : RemovalIndex::kCommonNeighbors;
  const auto addition = community_aware ? AdditionIndex::kA : AdditionIndex::kCommonNeighbors;

  std::vector<StageRecord> stages;
  stages.push_back(detect_stage(StageId::kRaw, g, truth));

  // Stage 1: remove round(p_d * M) lowest-ranked edges.
  {
    const StageRecord& prev = stages.back();
    MutationPlan plan = plan_removals(prev.graph, prev.partition, removal,
                                      round_count(cfg.p_d * static_cast<double>(prev.graph.edge_count())));
    EdgeList to_remove;
    for (const auto& sp : plan.removals) to_remove.emplace_back(sp.a, sp.b);
    stages.push_back(detect_stage(StageId::kStage1, prev.graph.with_edges_removed(to_remove), truth));
  }

  // Stage 2: add round(p_a * M1) highest-ranked candidate edges.
  {
    const StageRecord& prev = stages.back();
    MutationPlan plan = plan_additions(prev.graph, prev.partition, addition,
                                       round_count(cfg.p_a * static_cast<double>(prev.graph.edge_count())));
    EdgeList to_add;
    for (const auto& sp : plan.additions) to_add.emplace_back(sp.a, sp.b);
    stages.push_back(detect_stage(StageId::kStage2, prev.graph.with_edges_added(to_add), truth));
  }

  // Stage 3: remove round(p_d * M2) lowest-ranked edges.
  {
    const StageRecord& prev = stages.back();
    MutationPlan plan = plan_removals(prev.graph, prev.partition, removal,
                                      round_count(cfg.p_d * static_cast<double>(prev.graph.edge_count())));
    EdgeList to_remove;
    for (const auto& sp : plan.removals) to_remove.emplace_back(sp.a, sp.b);
    stages.push_back(detect_stage(StageId::kStage3, prev.graph.with_edges_removed(to_remove), truth));
  }

  return select_stage(std::move(stages), cfg);
}

}  // namespace

PipelineResult run_cdlp(const Graph& g, const PipelineConfig& cfg, const Partition* truth) {
  return run_staged(g, cfg, truth, /*community_aware=*/true);
}

PipelineResult run_baseline1(const Graph& g, const Partition* truth) {
  if (g.edge_count() < 1) {
    throw ContractError("pipeline requires a graph with at least one edge");
  }
  PipelineConfig cfg;
  cfg.include_raw = true;
  std::vector<StageRecord> stages;
  stages.push_back(detect_stage(StageId::kRaw, g, truth));
  return select_stage(std::move(stages), cfg);
}

PipelineResult run_baseline2_cn(const Graph& g, const PipelineConfig& cfg,
                                const Partition* truth) {
  return run_staged(g, cfg, truth, /*community_aware=*/false);
}

}  // namespace cdlp
