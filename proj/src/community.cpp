#include "cdlp/community.hpp"

#include <cstdint>
#include <map>
#include <numeric>
#include <string>

#include "cdlp/errors.hpp"

namespace cdlp {

namespace {

void check_detectable(const Graph& g, const char* op) {
  if (g.edge_count() < 1) {
    throw ContractError(std::string(op) + " undefined: graph has no edges");
  }
}

}  // namespace

double modularity(const Graph& g, const Partition& p) {
  check_detectable(g, "modularity");
  if (p.node_count() != g.node_count()) {
    throw ContractError("partition covers " + std::to_string(p.node_count()) +
                        " nodes but graph has " + std::to_string(g.node_count()));
  }
  const double m = static_cast<double>(g.edge_count());
  const int k = p.community_count();

  std::vector<std::int64_t> internal_edges(k, 0);
  std::vector<std::int64_t> degree_sum(k, 0);
  for (NodeId a = 0; a < g.node_count(); ++a) {
    const int ca = p.community_of(a);
    degree_sum[ca] += g.degree(a);
    for (NodeId b : g.neighbors(a)) {
      if (a < b && p.community_of(b) == ca) ++internal_edges[ca];
    }
  }

  double q = 0.0;
  for (int c = 0; c < k; ++c) {
    const double frac = static_cast<double>(degree_sum[c]) / (2.0 * m);
    q += static_cast<double>(internal_edges[c]) / m - frac * frac;
  }
  return q;
}

FastGreedyResult fast_greedy(const Graph& g) {
  check_detectable(g, "fast_greedy");
  const int n = g.node_count();
  const double m = static_cast<double>(g.edge_count());

  // Community label = minimum node id of the group. conn[u] maps a
  // neighboring label to the number of edges between the two groups.
  std::vector<std::map<int, std::int64_t>> conn(n);
  std::vector<std::int64_t> degree_sum(n);
  std::vector<bool> alive(n, true);
  for (NodeId a = 0; a < n; ++a) {
    degree_sum[a] = g.degree(a);
    for (NodeId b : g.neighbors(a)) conn[a][b] = 1;
  }

  // Q = sum_internal/M - sum_deg_sq/(4M^2), both aggregates kept in exact
  // integer arithmetic.
  std::int64_t sum_internal = 0;
  std::int64_t sum_deg_sq = 0;
  for (NodeId a = 0; a < n; ++a) sum_deg_sq += degree_sum[a] * degree_sum[a];

  MergeTrace trace;
  double best_q = 0.0;
  bool has_best = false;

  const std::int64_t m_int = g.edge_count();
  while (true) {
    // Scan connected label pairs in ascending (u,v) order. delta-Q compares
    // as the integer 2*M*E_uv - D_u*D_v (common positive denominator 2M^2),
    // so ties are exact and the lexicographically first pair wins.
    std::int64_t best_key = 0;
    int best_u = -1;
    int best_v = -1;
    for (int u = 0; u < n; ++u) {
      if (!alive[u] || conn[u].empty()) continue;
      for (auto it = conn[u].upper_bound(u); it != conn[u].end(); ++it) {
        const int v = it->first;
        const std::int64_t key = 2 * m_int * it->second - degree_sum[u] * degree_sum[v];
        if (best_u < 0 || key > best_key) {
          best_key = key;
          best_u = u;
          best_v = v;
        }
      }
    }
    if (best_u < 0) break;  // only disconnected groups remain

    // Merge v into u (u < v).
    const int u = best_u;
    const int v = best_v;
    sum_internal += conn[u][v];
    sum_deg_sq += 2 * degree_sum[u] * degree_sum[v];

    for (const auto& [x, count] : conn[v]) {
      if (x == u) continue;
      conn[u][x] += count;
      conn[x].erase(v);
      conn[x][u] = conn[u][x];
    }
    conn[u].erase(v);
    conn[v].clear();
    alive[v] = false;
    degree_sum[u] += degree_sum[v];

    const double q = static_cast<double>(sum_internal) / m -
                     static_cast<double>(sum_deg_sq) / (4.0 * m * m);
    trace.steps.push_back({u, v, q});
    if (!has_best || q > best_q) {
      has_best = true;
      best_q = q;
      trace.best_step = trace.steps.size() - 1;
    }
  }

  // Replay merges up to the best step to recover that state's labels.
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  for (std::size_t s = 0; s <= trace.best_step && s < trace.steps.size(); ++s) {
    parent[trace.steps[s].community_b] = trace.steps[s].community_a;
  }
  std::vector<int> labels(n);
  for (int i = 0; i < n; ++i) {
    int r = i;
    while (parent[r] != r) r = parent[r];
    labels[i] = r;
  }

  FastGreedyResult result;
  result.partition = Partition(labels);
  result.q = modularity(g, result.partition);
  result.trace = std::move(trace);
  return result;
}

}  // namespace cdlp
