#pragma once

#include <cstdint>
#include <vector>

#include "cdlp/graph.hpp"

namespace cdlp {

// Unordered node pair (a < b) with its similarity score.
struct ScoredPair {
  NodeId a = 0;
  NodeId b = 0;
  double score = 0.0;

  bool operator==(const ScoredPair&) const = default;
};

// Edges selected for mutation. Additions are sorted by decreasing score,
// removals by increasing score; ties fall back to canonical pair order.
struct MutationPlan {
  std::vector<ScoredPair> additions;
  std::vector<ScoredPair> removals;
};

enum class AdditionIndex { kA, kCommonNeighbors };
enum class RemovalIndex { kD, kCommonNeighbors };

// Number of common neighbors of a and b.
int cn_score(const Graph& g, NodeId a, NodeId b);

// Intra-community attachment score for a same-community non-edge (a,b):
//   A(a,b) = 2 * |{i in Γ(a,b) : C(i) = C(a)}| / (d(a) + d(b))
// Zero total degree scores 0. Preconditions (same community, non-edge)
// are contract errors.
double a_index(const Graph& g, const Partition& p, NodeId a, NodeId b);

// Cross-community support score for an existing edge (a,b) with
// C(a) != C(b):
//   D(a,b) = max(|{i in Γ(a,b) : C(i)=C(a)}|, |{i in Γ(a,b) : C(i)=C(b)}|) / |Γ(a,b)|
// An empty common neighborhood scores 0 (ranked most spurious).
double d_index(const Graph& g, const Partition& p, NodeId a, NodeId b);

// Top-`count` candidate edges to create. A-index candidates are the
// same-community non-edges; CN candidates are all non-edges.
MutationPlan plan_additions(const Graph& g, const Partition& p, AdditionIndex index,
                            std::int64_t count);

// Bottom-`count` existing edges to delete. D-index candidates are the
// cross-community edges; CN candidates are all edges.
MutationPlan plan_removals(const Graph& g, const Partition& p, RemovalIndex index,
                           std::int64_t count);

}  // namespace cdlp
