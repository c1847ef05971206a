#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cdlp/graph.hpp"
#include "cdlp/link_prediction.hpp"

namespace cdlp {

enum class SelectionMetric { kModularity, kNmiOracle };

// G is the raw network; G1..G3 are the remove/add/remove prediction stages.
enum class StageId { kRaw, kStage1, kStage2, kStage3 };

std::string stage_name(StageId stage);

struct PipelineConfig {
  double p_d = 0.0;  // fraction of the current edge count removed per D stage
  double p_a = 0.0;  // fraction of the current edge count added in the A stage
  bool include_raw = false;               // let stage G compete in selection
  SelectionMetric selection = SelectionMetric::kModularity;
};

struct StageRecord {
  StageId stage = StageId::kRaw;
  Graph graph;
  Partition partition;
  double q = 0.0;
  std::optional<double> nmi;  // set when ground truth was supplied
};

struct PipelineResult {
  std::vector<StageRecord> stages;  // in execution order, G first
  StageId chosen_stage = StageId::kRaw;
  Partition chosen_partition;

  const StageRecord& chosen() const;
};

// Runs the three-stage remove(D)/add(A)/remove(D) pipeline around fast-greedy
// detection and selects the stage with the best metric (earliest on ties).
// Stage G competes only when cfg.include_raw is set. An NMI-oracle selection
// requires `truth`; a stage graph losing all edges raises
// DegenerateStageError.
PipelineResult run_cdlp(const Graph& g, const PipelineConfig& cfg,
                        const Partition* truth = nullptr);

// Plain fast-greedy on the raw network; single stage, no mutation.
PipelineResult run_baseline1(const Graph& g, const Partition* truth = nullptr);

// Same staging as run_cdlp but community-agnostic: removals rank all edges
// and the addition stage ranks all non-edges by the CN score.
PipelineResult run_baseline2_cn(const Graph& g, const PipelineConfig& cfg,
                                const Partition* truth = nullptr);

// Half-up rounding used to size mutation plans from edge-count fractions.
std::int64_t round_count(double value);

}  // namespace cdlp
