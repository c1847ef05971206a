#include <doctest.h>

#include <cmath>

#include "cdlp/community.hpp"
#include "cdlp/errors.hpp"
#include "cdlp/rng.hpp"
#include "oracles.hpp"

using namespace cdlp;

namespace {

Graph two_triangles() {
  return Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
}

}  // namespace

TEST_CASE("modularity of the all-in-one partition is zero") {
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = testing::random_graph_with_edges(rng, 3 + rng.below_int(10), 0.35);
    CHECK(std::abs(modularity(g, Partition::single_community(g.node_count()))) < 1e-12);
  }
}

TEST_CASE("modularity worked values") {
  const Graph k3 = Graph::from_edges(3, {{0, 1}, {1, 2}, {2, 0}});
  CHECK(modularity(k3, Partition::singletons(3)) == doctest::Approx(-1.0 / 3.0).epsilon(1e-12));

  const Graph g = two_triangles();
  const Partition natural(std::vector<int>{0, 0, 0, 1, 1, 1});
  CHECK(modularity(g, natural) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("modularity matches the naive ordered-pair sum") {
  Rng rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = testing::random_graph_with_edges(rng, 4 + rng.below_int(8), 0.4);
    const Partition p = testing::random_partition(rng, g.node_count(), 4);
    CHECK(modularity(g, p) == doctest::Approx(testing::naive_modularity(g, p)).epsilon(1e-12));
  }
}

TEST_CASE("modularity is invariant under community relabeling") {
  Rng rng(31);
  const Graph g = testing::random_graph_with_edges(rng, 9, 0.4);
  std::vector<int> labels{2, 0, 1, 2, 1, 0, 2, 0, 1};
  std::vector<int> relabeled{7, 3, 5, 7, 5, 3, 7, 3, 5};
  CHECK(modularity(g, Partition(labels)) ==
        doctest::Approx(modularity(g, Partition(relabeled))).epsilon(1e-12));
}

TEST_CASE("modularity rejects edgeless graphs") {
  const Graph g = Graph::from_edges(3, {});
  CHECK_THROWS_AS(modularity(g, Partition::singletons(3)), ContractError);
  CHECK_THROWS_AS(fast_greedy(g), ContractError);
}

TEST_CASE("fast-greedy on K3 ends in one community") {
  const Graph k3 = Graph::from_edges(3, {{0, 1}, {1, 2}, {2, 0}});
  const FastGreedyResult result = fast_greedy(k3);
  CHECK(result.partition.community_count() == 1);
  CHECK(result.q == doctest::Approx(0.0).epsilon(1e-12));
  for (std::size_t s = 0; s + 1 < result.trace.steps.size(); ++s) {
    CHECK(result.trace.steps[s].q_after < 0.0);
  }
}

TEST_CASE("fast-greedy recovers two bridged triangles") {
  const Graph g = two_triangles().with_edges_added({{2, 3}});
  const FastGreedyResult result = fast_greedy(g);
  const Partition expected(std::vector<int>{0, 0, 0, 1, 1, 1});
  CHECK(result.partition == expected);

  // Brute force over every 6-node partition: the returned state is the best
  // reachable modularity overall.
  double best = -1.0;
  for (const auto& labels : testing::all_partitions(6)) {
    best = std::max(best, testing::naive_modularity(g, Partition(labels)));
  }
  CHECK(result.q == doctest::Approx(best).epsilon(1e-12));
}

TEST_CASE("fast-greedy trace bookkeeping") {
  const Graph g = two_triangles().with_edges_added({{2, 3}});
  const FastGreedyResult result = fast_greedy(g);
  CHECK(result.trace.steps.size() == 5);  // connected: N-1 merges
  CHECK(result.trace.best_step < result.trace.steps.size());
  const double best_q = result.trace.steps[result.trace.best_step].q_after;
  for (const auto& step : result.trace.steps) CHECK(step.q_after <= best_q + 1e-12);
  CHECK(result.q == doctest::Approx(best_q).epsilon(1e-12));
}

TEST_CASE("best step takes the earliest of tied trace maxima") {
  // C4: the trace reaches Q = 0 at step 1 and stays there.
  const Graph cycle = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  const FastGreedyResult result = fast_greedy(cycle);
  REQUIRE(result.trace.steps.size() == 3);
  CHECK(result.trace.steps[1].q_after == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(result.trace.steps[2].q_after == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(result.trace.best_step == 1);
  CHECK(result.partition == Partition(std::vector<int>{0, 0, 1, 1}));
}

TEST_CASE("fast-greedy returned q equals recomputed modularity") {
  Rng rng(47);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = testing::random_graph_with_edges(rng, 4 + rng.below_int(9), 0.35);
    const FastGreedyResult result = fast_greedy(g);
    CHECK(result.q == doctest::Approx(modularity(g, result.partition)).epsilon(1e-12));
  }
}

TEST_CASE("fast-greedy merge decisions match the naive oracle") {
  Rng rng(53);
  int checked_steps = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = testing::random_graph_with_edges(rng, 4 + rng.below_int(9), 0.4);
    const FastGreedyResult result = fast_greedy(g);

    std::vector<int> labels(g.node_count());
    for (int i = 0; i < g.node_count(); ++i) labels[i] = i;
    for (const auto& step : result.trace.steps) {
      const auto naive = testing::naive_best_merge(g, labels);
      REQUIRE(naive.has_value());
      CHECK(naive->community_a == step.community_a);
      CHECK(naive->community_b == step.community_b);
      CHECK(naive->q_after == doctest::Approx(step.q_after).epsilon(1e-12));
      for (int& l : labels) {
        if (l == step.community_b) l = step.community_a;
      }
      ++checked_steps;
    }
    // The oracle agrees the agglomeration is exhausted.
    CHECK_FALSE(testing::naive_best_merge(g, labels).has_value());
  }
  CHECK(checked_steps > 100);
}

TEST_CASE("isolated nodes stay singletons") {
  const Graph g = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 0}});  // nodes 3,4 isolated
  const FastGreedyResult result = fast_greedy(g);
  CHECK(result.partition.community_count() == 3);
  CHECK(result.partition.community_sizes() == std::vector<int>{3, 1, 1});
}

TEST_CASE("disconnected components never merge") {
  const Graph g = two_triangles();
  const FastGreedyResult result = fast_greedy(g);
  CHECK(result.trace.steps.size() == 4);  // two components: (3-1) merges each
  CHECK(result.partition == Partition(std::vector<int>{0, 0, 0, 1, 1, 1}));
  CHECK(result.q == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("merging unconnected communities never helps") {
  // delta-Q for a disconnected pair is -2*a_u*a_v < 0; check via the oracle
  // on a graph with two components.
  const Graph g = two_triangles();
  std::vector<int> labels{0, 0, 0, 3, 3, 3};
  const double before = testing::naive_modularity(g, Partition(labels));
  std::vector<int> merged{0, 0, 0, 0, 0, 0};
  CHECK(testing::naive_modularity(g, Partition(merged)) < before);
}
