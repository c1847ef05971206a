#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace cdlp {

using NodeId = int;
using EdgeList = std::vector<std::pair<NodeId, NodeId>>;

// Returns the pair ordered so that first < second.
inline std::pair<NodeId, NodeId> canonical_pair(NodeId a, NodeId b) {
  return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
}

// Undirected simple graph over dense node ids 0..N-1. Immutable after
// construction; with_edges_added / with_edges_removed return fresh values so
// several stages of the same network can coexist.
class Graph {
 public:
  Graph() = default;

  // Deduplicates parallel and reversed edges. Throws InputError on
  // out-of-range ids or self-loops.
  static Graph from_edges(int node_count, const EdgeList& edges);

  int node_count() const { return static_cast<int>(adj_.size()); }
  std::int64_t edge_count() const { return edge_count_; }

  int degree(NodeId a) const;
  // Neighbor ids in ascending order.
  const std::vector<NodeId>& neighbors(NodeId a) const;
  bool has_edge(NodeId a, NodeId b) const;

  // adj(a) ∩ adj(b), ascending. Throws InputError if a == b or invalid.
  std::vector<NodeId> common_neighbors(NodeId a, NodeId b) const;

  // All edges as canonical pairs, sorted ascending.
  EdgeList edges() const;

  // Each pair must currently be a non-edge (added) or an edge (removed);
  // violations throw ContractError. The source graph is left untouched.
  Graph with_edges_added(const EdgeList& edges) const;
  Graph with_edges_removed(const EdgeList& edges) const;

  bool operator==(const Graph&) const = default;

 private:
  void check_node(NodeId a) const;

  std::vector<std::vector<NodeId>> adj_;
  std::int64_t edge_count_ = 0;
};

// Node -> community assignment with dense community ids 0..k-1. Labels are
// normalized by order of first appearance, so two partitions that induce the
// same grouping compare equal regardless of the input labels.
class Partition {
 public:
  Partition() = default;

  // `labels[node]` is an arbitrary community label; normalized on build.
  explicit Partition(const std::vector<int>& labels);

  static Partition singletons(int node_count);
  static Partition single_community(int node_count);

  int node_count() const { return static_cast<int>(assignment_.size()); }
  int community_count() const { return static_cast<int>(sizes_.size()); }
  int community_of(NodeId a) const;
  bool same_community(NodeId a, NodeId b) const {
    return community_of(a) == community_of(b);
  }
  const std::vector<int>& assignment() const { return assignment_; }
  const std::vector<int>& community_sizes() const { return sizes_; }

  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> assignment_;
  std::vector<int> sizes_;
};

}  // namespace cdlp
