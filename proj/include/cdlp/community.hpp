#pragma once

#include <cstddef>
#include <vector>

#include "cdlp/graph.hpp"

namespace cdlp {

// Newman-Girvan modularity:
//   Q = (1/2M) * sum_ij (a_ij - k_i*k_j/(2M)) * delta(C_i, C_j)
// over ordered node pairs. Throws ContractError when the graph has no edges
// or the partition does not cover it.
double modularity(const Graph& g, const Partition& p);

// One agglomeration step: the two community labels merged (a < b, labels are
// the minimum node id of each group) and the modularity after the merge.
struct MergeStep {
  int community_a = 0;
  int community_b = 0;
  double q_after = 0.0;
};

struct MergeTrace {
  std::vector<MergeStep> steps;
  std::size_t best_step = 0;  // argmax of q_after; earliest wins ties
};

struct FastGreedyResult {
  Partition partition;
  double q = 0.0;
  MergeTrace trace;
};

// Agglomerative modularity optimization (CNM). Starts from singleton
// communities, repeatedly merges the edge-connected pair with maximal
// delta-Q (ties: lowest label pair), and returns the partition at the
// best-Q step of the trace. Isolated nodes stay singletons; components
// never merge with each other.
FastGreedyResult fast_greedy(const Graph& g);

}  // namespace cdlp
