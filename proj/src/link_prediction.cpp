#include "cdlp/link_prediction.hpp"

#include <algorithm>
#include <string>

#include "cdlp/errors.hpp"

namespace cdlp {

namespace {

std::string pair_str(NodeId a, NodeId b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

void sort_descending(std::vector<ScoredPair>& pairs) {
  std::sort(pairs.begin(), pairs.end(), [](const ScoredPair& x, const ScoredPair& y) {
    if (x.score != y.score) return x.score > y.score;
    return std::make_pair(x.a, x.b) < std::make_pair(y.a, y.b);
  });
}

void sort_ascending(std::vector<ScoredPair>& pairs) {
  std::sort(pairs.begin(), pairs.end(), [](const ScoredPair& x, const ScoredPair& y) {
    if (x.score != y.score) return x.score < y.score;
    return std::make_pair(x.a, x.b) < std::make_pair(y.a, y.b);
  });
}

void truncate(std::vector<ScoredPair>& pairs, std::int64_t count) {
  if (count < static_cast<std::int64_t>(pairs.size())) {
    pairs.resize(static_cast<std::size_t>(std::max<std::int64_t>(count, 0)));
  }
}

}  // namespace

int cn_score(const Graph& g, NodeId a, NodeId b) {
  return static_cast<int>(g.common_neighbors(a, b).size());
}

double a_index(const Graph& g, const Partition& p, NodeId a, NodeId b) {
  if (a == b || !p.same_community(a, b)) {
    throw ContractError("a_index requires two distinct nodes of one community, got " +
                        pair_str(a, b));
  }
  if (g.has_edge(a, b)) {
    throw ContractError("a_index scores non-edges only, " + pair_str(a, b) + " exists");
  }
  const int degree_total = g.degree(a) + g.degree(b);
  if (degree_total == 0) return 0.0;

  const int community = p.community_of(a);
  int shared = 0;
  for (NodeId i : g.common_neighbors(a, b)) {
    if (p.community_of(i) == community) ++shared;
  }
  return 2.0 * static_cast<double>(shared) / static_cast<double>(degree_total);
}

double d_index(const Graph& g, const Partition& p, NodeId a, NodeId b) {
  if (a == b || p.same_community(a, b)) {
    throw ContractError("d_index requires endpoints in different communities, got " +
                        pair_str(a, b));
  }
  if (!g.has_edge(a, b)) {
    throw ContractError("d_index scores existing edges only, " + pair_str(a, b) +
                        " is a non-edge");
  }
  const auto shared = g.common_neighbors(a, b);
  if (shared.empty()) return 0.0;

  int with_a = 0;
  int with_b = 0;
  for (NodeId i : shared) {
    if (p.community_of(i) == p.community_of(a)) ++with_a;
    if (p.community_of(i) == p.community_of(b)) ++with_b;
  }
  return static_cast<double>(std::max(with_a, with_b)) / static_cast<double>(shared.size());
}

MutationPlan plan_additions(const Graph& g, const Partition& p, AdditionIndex index,
                            std::int64_t count) {
  MutationPlan plan;
  if (count <= 0) return plan;
  for (NodeId a = 0; a < g.node_count(); ++a) {
    for (NodeId b = a + 1; b < g.node_count(); ++b) {
      if (g.has_edge(a, b)) continue;
      if (index == AdditionIndex::kA) {
        if (!p.same_community(a, b)) continue;
        plan.additions.push_back({a, b, a_index(g, p, a, b)});
      } else {
        plan.additions.push_back({a, b, static_cast<double>(cn_score(g, a, b))});
      }
    }
  }
  sort_descending(plan.additions);
  truncate(plan.additions, count);
  return plan;
}

MutationPlan plan_removals(const Graph& g, const Partition& p, RemovalIndex index,
                           std::int64_t count) {
  MutationPlan plan;
  if (count <= 0) return plan;
  for (const auto& [a, b] : g.edges()) {
    if (index == RemovalIndex::kD) {
      if (p.same_community(a, b)) continue;
      plan.removals.push_back({a, b, d_index(g, p, a, b)});
    } else {
      plan.removals.push_back({a, b, static_cast<double>(cn_score(g, a, b))});
    }
  }
  sort_ascending(plan.removals);
  truncate(plan.removals, count);
  return plan;
}

}  // namespace cdlp
