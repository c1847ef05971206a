#include "cdlp/graph.hpp"

#include <algorithm>
#include <string>

#include "cdlp/errors.hpp"

namespace cdlp {

namespace {

std::string pair_str(NodeId a, NodeId b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

}  // namespace

void Graph::check_node(NodeId a) const {
  if (a < 0 || a >= node_count()) {
    throw InputError("node id " + std::to_string(a) + " out of range [0," +
                     std::to_string(node_count()) + ")");
  }
}

Graph Graph::from_edges(int node_count, const EdgeList& edges) {
  if (node_count < 1) {
    throw InputError("graph needs at least one node");
  }
  Graph g;
  g.adj_.resize(node_count);

  EdgeList canon;
  canon.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    if (a < 0 || a >= node_count || b < 0 || b >= node_count) {
      throw InputError("edge " + pair_str(a, b) + " references a node outside [0," +
                       std::to_string(node_count) + ")");
    }
    if (a == b) {
      throw InputError("self-loop " + pair_str(a, b) + " is not allowed");
    }
    canon.push_back(canonical_pair(a, b));
  }
  std::sort(canon.begin(), canon.end());
  canon.erase(std::unique(canon.begin(), canon.end()), canon.end());

  for (const auto& [a, b] : canon) {
    g.adj_[a].push_back(b);
    g.adj_[b].push_back(a);
  }
  for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());
  g.edge_count_ = static_cast<std::int64_t>(canon.size());
  return g;
}

int Graph::degree(NodeId a) const {
  check_node(a);
  return static_cast<int>(adj_[a].size());
}

const std::vector<NodeId>& Graph::neighbors(NodeId a) const {
  check_node(a);
  return adj_[a];
}

bool Graph::has_edge(NodeId a, NodeId b) const {
  check_node(a);
  check_node(b);
  if (a == b) return false;
  const auto& nbrs = adj_[a];
  return std::binary_search(nbrs.begin(), nbrs.end(), b);
}

std::vector<NodeId> Graph::common_neighbors(NodeId a, NodeId b) const {
  check_node(a);
  check_node(b);
  if (a == b) {
    throw InputError("common_neighbors requires two distinct nodes, got " + pair_str(a, b));
  }
  std::vector<NodeId> out;
  std::set_intersection(adj_[a].begin(), adj_[a].end(), adj_[b].begin(), adj_[b].end(),
                        std::back_inserter(out));
  return out;
}

EdgeList Graph::edges() const {
  EdgeList out;
  out.reserve(static_cast<std::size_t>(edge_count_));
  for (NodeId a = 0; a < node_count(); ++a) {
    for (NodeId b : adj_[a]) {
      if (a < b) out.emplace_back(a, b);
    }
  }
  return out;
}

Graph Graph::with_edges_added(const EdgeList& edges) const {
  Graph g = *this;
  for (const auto& [x, y] : edges) {
    check_node(x);
    check_node(y);
    if (x == y) throw ContractError("cannot add self-loop " + pair_str(x, y));
    if (g.has_edge(x, y)) {
      throw ContractError("cannot add existing edge " + pair_str(x, y));
    }
    auto [a, b] = canonical_pair(x, y);
    auto& na = g.adj_[a];
    auto& nb = g.adj_[b];
    na.insert(std::lower_bound(na.begin(), na.end(), b), b);
    nb.insert(std::lower_bound(nb.begin(), nb.end(), a), a);
    ++g.edge_count_;
  }
  return g;
}

Graph Graph::with_edges_removed(const EdgeList& edges) const {
  Graph g = *this;
  for (const auto& [x, y] : edges) {
    check_node(x);
    check_node(y);
    if (x == y || !g.has_edge(x, y)) {
      throw ContractError("cannot remove non-edge " + pair_str(x, y));
    }
    auto [a, b] = canonical_pair(x, y);
    auto& na = g.adj_[a];
    auto& nb = g.adj_[b];
    na.erase(std::lower_bound(na.begin(), na.end(), b));
    nb.erase(std::lower_bound(nb.begin(), nb.end(), a));
    --g.edge_count_;
  }
  return g;
}

Partition::Partition(const std::vector<int>& labels) {
  assignment_.resize(labels.size());
  std::vector<std::pair<int, int>> seen;  // (label, dense id), small k: linear scan
  for (std::size_t i = 0; i < labels.size(); ++i) {
    int dense = -1;
    for (const auto& [label, id] : seen) {
      if (label == labels[i]) {
        dense = id;
        break;
      }
    }
    if (dense < 0) {
      dense = static_cast<int>(sizes_.size());
      seen.emplace_back(labels[i], dense);
      sizes_.push_back(0);
    }
    assignment_[i] = dense;
    ++sizes_[dense];
  }
}

Partition Partition::singletons(int node_count) {
  Partition p;
  p.assignment_.resize(node_count);
  for (int i = 0; i < node_count; ++i) p.assignment_[i] = i;
  p.sizes_.assign(node_count, 1);
  return p;
}

Partition Partition::single_community(int node_count) {
  Partition p;
  p.assignment_.assign(node_count, 0);
  p.sizes_.assign(1, node_count);
  return p;
}

int Partition::community_of(NodeId a) const {
  if (a < 0 || a >= node_count()) {
    throw InputError("node id " + std::to_string(a) + " outside partition of " +
                     std::to_string(node_count()) + " nodes");
  }
  return assignment_[a];
}

}  // namespace cdlp
