#include <doctest.h>

#include "cdlp/benchmark.hpp"
#include "cdlp/community.hpp"
#include "cdlp/errors.hpp"
#include "cdlp/evaluation.hpp"
#include "cdlp/pipeline.hpp"
#include "oracles.hpp"

using namespace cdlp;

namespace {

Graph bridged_triangles() {
  return Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {2, 3}});
}

}  // namespace

TEST_CASE("round_count is half-up") {
  CHECK(round_count(0.0) == 0);
  CHECK(round_count(0.49) == 0);
  CHECK(round_count(0.5) == 1);
  CHECK(round_count(2.5) == 3);
  CHECK(round_count(51.2) == 51);
}

TEST_CASE("no-op configuration equals baseline1 in all variants") {
  const Graph g = bridged_triangles();
  PipelineConfig cfg;  // p_d = p_a = 0

  const PipelineResult base = run_baseline1(g);
  const PipelineResult staged = run_cdlp(g, cfg);
  const PipelineResult staged_cn = run_baseline2_cn(g, cfg);

  CHECK(staged.chosen_partition == base.chosen_partition);
  CHECK(staged_cn.chosen_partition == base.chosen_partition);
  for (const auto& record : staged.stages) CHECK(record.graph == g);
}

TEST_CASE("stage 1 removes the planted cross edge and raises Q") {
  const Graph g = bridged_triangles();
  PipelineConfig cfg;
  cfg.p_d = 1.0 / 7.0;  // rounds to one edge
  const PipelineResult result = run_cdlp(g, cfg);

  REQUIRE(result.stages.size() == 4);
  const StageRecord& raw = result.stages[0];
  const StageRecord& stage1 = result.stages[1];
  CHECK(stage1.graph.edge_count() == 6);
  CHECK_FALSE(stage1.graph.has_edge(2, 3));
  CHECK(stage1.q > raw.q);
  CHECK(result.chosen_partition == Partition(std::vector<int>{0, 0, 0, 1, 1, 1}));
}

TEST_CASE("stage edge-count bookkeeping") {
  const GeneratedNetwork network = generate_gn({.z_out = 4.0}, 7);
  PipelineConfig cfg;
  cfg.p_d = 0.05;
  cfg.p_a = 0.05;
  const PipelineResult result = run_cdlp(network.graph, cfg, &network.partition);

  REQUIRE(result.stages.size() == 4);
  const auto m0 = result.stages[0].graph.edge_count();
  const auto m1 = result.stages[1].graph.edge_count();
  const auto m2 = result.stages[2].graph.edge_count();
  const auto m3 = result.stages[3].graph.edge_count();
  CHECK(m1 == m0 - round_count(cfg.p_d * static_cast<double>(m0)));
  CHECK(m2 <= m1 + round_count(cfg.p_a * static_cast<double>(m1)));
  CHECK(m3 == m2 - round_count(cfg.p_d * static_cast<double>(m2)));

  // Every stage's stored Q matches a fresh recomputation.
  for (const auto& record : result.stages) {
    CHECK(record.q == doctest::Approx(modularity(record.graph, record.partition)).epsilon(1e-12));
    REQUIRE(record.nmi.has_value());
  }

  // The chosen stage attains the metric maximum among competitors (G excluded).
  for (std::size_t s = 1; s < result.stages.size(); ++s) {
    CHECK(result.chosen().q >= result.stages[s].q);
  }
}

TEST_CASE("selection prefers the earliest stage on ties") {
  const Graph g = bridged_triangles();
  PipelineConfig cfg;  // all stages identical
  const PipelineResult result = run_cdlp(g, cfg);
  CHECK(result.chosen_stage == StageId::kStage1);

  cfg.include_raw = true;
  const PipelineResult with_raw = run_cdlp(g, cfg);
  CHECK(with_raw.chosen_stage == StageId::kRaw);
}

TEST_CASE("baseline2 ranks all edges by CN") {
  // Star with one leaf-leaf edge: the CN-0 spokes go first, lexicographically.
  const Graph g = Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}});
  const Partition p = Partition::single_community(5);
  const MutationPlan plan = plan_removals(g, p, RemovalIndex::kCommonNeighbors, 1);
  REQUIRE(plan.removals.size() == 1);
  CHECK(plan.removals[0].a == 0);
  CHECK(plan.removals[0].b == 3);
  CHECK(plan.removals[0].score == 0.0);
}

TEST_CASE("baseline2 with huge p_d hits a degenerate stage") {
  const Graph star = Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  PipelineConfig cfg;
  cfg.p_d = 0.99;
  CHECK_THROWS_AS(run_baseline2_cn(star, cfg), DegenerateStageError);
  try {
    run_baseline2_cn(star, cfg);
  } catch (const DegenerateStageError& ex) {
    CHECK(ex.stage() == "G1");
  }
}

TEST_CASE("pipeline rejects bad inputs") {
  const Graph empty = Graph::from_edges(3, {});
  PipelineConfig cfg;
  CHECK_THROWS_AS(run_cdlp(empty, cfg), ContractError);
  CHECK_THROWS_AS(run_baseline1(empty), ContractError);

  cfg.p_d = 1.0;
  CHECK_THROWS_AS(run_cdlp(bridged_triangles(), cfg), InputError);

  PipelineConfig oracle_cfg;
  oracle_cfg.selection = SelectionMetric::kNmiOracle;
  CHECK_THROWS_AS(run_cdlp(bridged_triangles(), oracle_cfg), ContractError);
}

TEST_CASE("nmi-oracle selection maximizes NMI instead of Q") {
  const GeneratedNetwork network = generate_gn({.z_out = 6.0}, 3);
  PipelineConfig cfg;
  cfg.p_d = 0.05;
  cfg.p_a = 0.05;
  cfg.selection = SelectionMetric::kNmiOracle;
  const PipelineResult result = run_cdlp(network.graph, cfg, &network.partition);
  for (std::size_t s = 1; s < result.stages.size(); ++s) {
    CHECK(*result.chosen().nmi >= *result.stages[s].nmi);
  }
}

TEST_CASE("easy GN networks are recovered almost perfectly") {
  for (double z_out : {1.0, 2.0}) {
    double nmi_total = 0.0;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const GeneratedNetwork network = generate_gn({.z_out = z_out}, seed);
      const PipelineResult result = run_baseline1(network.graph, &network.partition);
      nmi_total += result.chosen().nmi.value();
    }
    CHECK(nmi_total / 10.0 >= 0.99);
  }
}

TEST_CASE("CN staging beats plain fast-greedy on hard GN networks") {
  PipelineConfig cfg;
  cfg.p_d = 0.05;
  cfg.p_a = 0.05;
  double baseline_total = 0.0;
  double staged_total = 0.0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const GeneratedNetwork network = generate_gn({.z_out = 8.0}, seed);
    baseline_total += run_baseline1(network.graph, &network.partition).chosen().nmi.value();
    staged_total +=
        run_baseline2_cn(network.graph, cfg, &network.partition).chosen().nmi.value();
  }
  CHECK(staged_total > baseline_total);
}

TEST_CASE("pipeline runs are bit-identical across invocations") {
  const GeneratedNetwork network = generate_gn({.z_out = 8.0}, 11);
  PipelineConfig cfg;
  cfg.p_d = 0.1;
  cfg.p_a = 0.1;
  const PipelineResult a = run_cdlp(network.graph, cfg, &network.partition);
  const PipelineResult b = run_cdlp(network.graph, cfg, &network.partition);
  CHECK(a.chosen_stage == b.chosen_stage);
  CHECK(a.chosen_partition == b.chosen_partition);
  REQUIRE(a.stages.size() == b.stages.size());
  for (std::size_t s = 0; s < a.stages.size(); ++s) {
    CHECK(a.stages[s].graph == b.stages[s].graph);
    CHECK(a.stages[s].partition == b.stages[s].partition);
    CHECK(a.stages[s].q == b.stages[s].q);  // bitwise
  }
}
