#include <doctest.h>

#include <algorithm>

#include "cdlp/errors.hpp"
#include "cdlp/graph.hpp"
#include "cdlp/rng.hpp"
#include "oracles.hpp"

using namespace cdlp;

namespace {

void check_graph_invariants(const Graph& g) {
  std::int64_t degree_sum = 0;
  for (NodeId a = 0; a < g.node_count(); ++a) {
    degree_sum += g.degree(a);
    for (NodeId b : g.neighbors(a)) {
      CHECK(a != b);
      CHECK(g.has_edge(b, a));
    }
  }
  CHECK(degree_sum == 2 * g.edge_count());
}

}  // namespace

TEST_CASE("triangle build") {
  const Graph g = Graph::from_edges(3, {{0, 1}, {1, 2}, {2, 0}});
  CHECK(g.edge_count() == 3);
  for (NodeId a = 0; a < 3; ++a) CHECK(g.degree(a) == 2);
  check_graph_invariants(g);
}

TEST_CASE("reversed duplicate edges collapse") {
  const Graph g = Graph::from_edges(2, {{0, 1}, {1, 0}});
  CHECK(g.edge_count() == 1);
  CHECK(g.has_edge(0, 1));
}

TEST_CASE("worked-example graph has nine edges") {
  const Graph g = testing::example_graph();
  CHECK(g.node_count() == 7);
  CHECK(g.edge_count() == 9);
  check_graph_invariants(g);
}

TEST_CASE("build rejects bad input") {
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), InputError);
  CHECK_THROWS_AS(Graph::from_edges(3, {{-1, 0}}), InputError);
  CHECK_THROWS_AS(Graph::from_edges(3, {{1, 1}}), InputError);
  CHECK_THROWS_AS(Graph::from_edges(0, {}), InputError);
}

TEST_CASE("common neighbors") {
  const Graph triangle = Graph::from_edges(3, {{0, 1}, {1, 2}, {2, 0}});
  CHECK(triangle.common_neighbors(0, 1) == std::vector<NodeId>{2});

  const Graph path = Graph::from_edges(3, {{0, 1}, {1, 2}});
  CHECK(path.common_neighbors(0, 2) == std::vector<NodeId>{1});
  CHECK(path.common_neighbors(0, 1).empty());

  CHECK_THROWS_AS(path.common_neighbors(1, 1), InputError);
  CHECK_THROWS_AS(path.common_neighbors(0, 9), InputError);
}

TEST_CASE("common neighbors is symmetric") {
  Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = testing::random_graph(rng, 9, 0.4);
    for (NodeId a = 0; a < 9; ++a) {
      for (NodeId b = a + 1; b < 9; ++b) {
        CHECK(g.common_neighbors(a, b) == g.common_neighbors(b, a));
      }
    }
  }
}

TEST_CASE("edge mutation") {
  const Graph triangle = Graph::from_edges(3, {{0, 1}, {1, 2}, {2, 0}});

  SUBCASE("removal produces a path") {
    const Graph path = triangle.with_edges_removed({{0, 1}});
    CHECK(path.edge_count() == 2);
    CHECK_FALSE(path.has_edge(0, 1));
    CHECK(triangle.edge_count() == 3);  // source untouched
  }

  SUBCASE("addition closes a path") {
    const Graph path = Graph::from_edges(3, {{0, 1}, {1, 2}});
    CHECK(path.with_edges_added({{0, 2}}) == triangle);
  }

  SUBCASE("remove then re-add round-trips") {
    CHECK(triangle.with_edges_removed({{1, 2}}).with_edges_added({{2, 1}}) == triangle);
  }

  SUBCASE("contract violations") {
    CHECK_THROWS_AS(triangle.with_edges_added({{0, 1}}), ContractError);
    const Graph path = Graph::from_edges(3, {{0, 1}, {1, 2}});
    CHECK_THROWS_AS(path.with_edges_removed({{0, 2}}), ContractError);
  }
}

TEST_CASE("mutation keeps invariants and never aliases") {
  Rng rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = testing::random_graph(rng, 10, 0.3);
    const Graph snapshot = g;

    EdgeList edges = g.edges();
    EdgeList non_edges;
    for (NodeId a = 0; a < 10; ++a) {
      for (NodeId b = a + 1; b < 10; ++b) {
        if (!g.has_edge(a, b)) non_edges.emplace_back(a, b);
      }
    }

    if (!edges.empty()) {
      const Graph removed = g.with_edges_removed({edges[rng.below(edges.size())]});
      check_graph_invariants(removed);
      CHECK(removed.edge_count() == g.edge_count() - 1);
    }
    if (!non_edges.empty()) {
      const Graph added = g.with_edges_added({non_edges[rng.below(non_edges.size())]});
      check_graph_invariants(added);
      CHECK(added.edge_count() == g.edge_count() + 1);
    }
    CHECK(g == snapshot);
  }
}

TEST_CASE("partition normalization") {
  const Partition p(std::vector<int>{5, 5, 9, 5, 2});
  CHECK(p.community_count() == 3);
  CHECK(p.community_of(0) == 0);
  CHECK(p.community_of(2) == 1);
  CHECK(p.community_of(4) == 2);
  CHECK(p.community_sizes() == std::vector<int>{3, 1, 1});

  // Same grouping under different labels compares equal.
  CHECK(p == Partition(std::vector<int>{1, 1, 0, 1, 7}));
  CHECK(p != Partition(std::vector<int>{1, 1, 0, 0, 7}));

  CHECK(Partition::singletons(3).community_count() == 3);
  CHECK(Partition::single_community(3).community_count() == 1);
  CHECK_THROWS_AS(p.community_of(11), InputError);
}
