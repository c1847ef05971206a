#include "cdlp/benchmark.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <string>

#include "cdlp/errors.hpp"
#include "cdlp/rng.hpp"

namespace cdlp {

GeneratedNetwork generate_gn(const GnConfig& cfg, std::uint64_t seed) {
  if (cfg.groups < 1 || cfg.group_size < 2 || cfg.groups * cfg.group_size != cfg.n) {
    throw InputError("GN config requires groups*group_size == n");
  }
  if (cfg.z_out < 0.0 || cfg.z_out > cfg.avg_degree) {
    throw InputError("GN config requires 0 <= z_out <= avg_degree");
  }
  const double z_in = cfg.avg_degree - cfg.z_out;
  const double p_in = z_in / static_cast<double>(cfg.group_size - 1);
  const double p_out = cfg.z_out / static_cast<double>(cfg.n - cfg.group_size);
  if (p_in < 0.0 || p_in > 1.0 || p_out < 0.0 || p_out > 1.0) {
    throw InputError("GN config yields an edge probability outside [0,1]");
  }

  Rng rng(seed);
  EdgeList edges;
  std::vector<int> labels(cfg.n);
  for (int i = 0; i < cfg.n; ++i) labels[i] = i / cfg.group_size;
  for (int i = 0; i < cfg.n; ++i) {
    for (int j = i + 1; j < cfg.n; ++j) {
      const double p = labels[i] == labels[j] ? p_in : p_out;
      if (rng.bernoulli(p)) edges.emplace_back(i, j);
    }
  }
  return {Graph::from_edges(cfg.n, edges), Partition(labels)};
}

double realized_mixing(const Graph& g, const Partition& p) {
  if (g.edge_count() < 1) {
    throw ContractError("realized_mixing undefined: graph has no edges");
  }
  std::int64_t cross = 0;
  for (const auto& [a, b] : g.edges()) {
    if (!p.same_community(a, b)) ++cross;
  }
  return static_cast<double>(cross) / static_cast<double>(g.edge_count());
}

namespace {

// ---- truncated power law on [low, high] -----------------------------------

double power_integral(double exponent, double low, double high) {
  if (std::abs(exponent + 1.0) < 1e-12) return std::log(high / low);
  return (std::pow(high, exponent + 1.0) - std::pow(low, exponent + 1.0)) / (exponent + 1.0);
}

double power_law_mean(double gamma, double low, double high) {
  return power_integral(1.0 - gamma, low, high) / power_integral(-gamma, low, high);
}

// Solves the lower cutoff so the continuous law has the requested mean.
double solve_degree_cutoff(double gamma, double k_avg, double k_max) {
  double lo = 1.0;
  double hi = k_max;
  if (power_law_mean(gamma, lo, k_max) > k_avg || k_avg >= k_max) {
    throw GenerationError("degree-distribution",
                          "no lower degree cutoff reaches mean " + std::to_string(k_avg) +
                              " with k_max " + std::to_string(k_max));
  }
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (power_law_mean(gamma, mid, k_max) < k_avg) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double sample_power_law(Rng& rng, double gamma, double low, double high) {
  const double u = rng.next_double();
  if (std::abs(gamma - 1.0) < 1e-12) {
    return low * std::pow(high / low, u);
  }
  const double e = 1.0 - gamma;
  return std::pow(std::pow(low, e) + u * (std::pow(high, e) - std::pow(low, e)), 1.0 / e);
}

std::int64_t round_half_up(double value) {
  return static_cast<std::int64_t>(std::floor(value + 0.5));
}

// ---- stub matching ---------------------------------------------------------

using PairKey = std::pair<NodeId, NodeId>;

// Swaps defective pairs ((a,b),(c,d) -> (a,d),(c,b)) until every edge is a
// simple one not present in `occupied`. Returns false when a pass makes no
// headway.
bool repair_edges(Rng& rng, std::vector<PairKey>& edges,
                  const std::map<PairKey, int>& occupied) {
  std::map<PairKey, int> counts = occupied;
  for (const auto& e : edges) {
    if (e.first != e.second) ++counts[canonical_pair(e.first, e.second)];
  }
  auto defective = [&counts](const PairKey& e) {
    if (e.first == e.second) return true;
    return counts.at(canonical_pair(e.first, e.second)) > 1;
  };

  const int kPasses = 60;
  for (int pass = 0; pass < kPasses; ++pass) {
    bool any_defect = false;
    bool progress = false;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (!defective(edges[i])) continue;
      any_defect = true;
      for (int trial = 0; trial < 40; ++trial) {
        const std::size_t j = rng.below(edges.size());
        if (j == i) continue;
        const PairKey e1{edges[i].first, edges[j].second};
        const PairKey e2{edges[j].first, edges[i].second};
        if (e1.first == e1.second || e2.first == e2.second) continue;
        const PairKey k1 = canonical_pair(e1.first, e1.second);
        const PairKey k2 = canonical_pair(e2.first, e2.second);
        if (k1 == k2) continue;
        if (counts.count(k1) && counts.at(k1) > 0) continue;
        if (counts.count(k2) && counts.at(k2) > 0) continue;
        if (edges[i].first != edges[i].second) {
          --counts[canonical_pair(edges[i].first, edges[i].second)];
        }
        if (edges[j].first != edges[j].second) {
          --counts[canonical_pair(edges[j].first, edges[j].second)];
        }
        ++counts[k1];
        ++counts[k2];
        edges[i] = e1;
        edges[j] = e2;
        progress = true;
        break;
      }
    }
    if (!any_defect) return true;
    if (!progress) return false;
  }
  return false;
}

// Deterministic simple-graph construction for a stub multiset; succeeds on
// every graphical sequence. Output pairs are canonical.
bool havel_hakimi(const std::vector<NodeId>& stubs, std::vector<PairKey>& out) {
  std::map<NodeId, int> remaining;
  for (NodeId node : stubs) ++remaining[node];
  std::vector<std::pair<int, NodeId>> seq;  // (remaining degree, node)
  seq.reserve(remaining.size());
  for (const auto& [node, d] : remaining) seq.emplace_back(d, node);

  while (true) {
    std::sort(seq.begin(), seq.end(), [](const auto& x, const auto& y) {
      if (x.first != y.first) return x.first > y.first;
      return x.second < y.second;
    });
    while (!seq.empty() && seq.back().first == 0) seq.pop_back();
    if (seq.empty()) return true;
    const auto [d, node] = seq.front();
    if (static_cast<std::size_t>(d) >= seq.size()) return false;  // not graphical
    for (int i = 1; i <= d; ++i) {
      if (seq[i].first == 0) return false;
      --seq[i].first;
      out.push_back(canonical_pair(node, seq[i].second));
    }
    seq.front().first = 0;
  }
}

// Degree-preserving double-edge swaps to decorrelate a deterministic wiring.
void randomize_edges(Rng& rng, std::vector<PairKey>& edges,
                     const std::map<PairKey, int>& occupied) {
  if (edges.size() < 2) return;
  std::map<PairKey, int> counts = occupied;
  for (const auto& e : edges) ++counts[e];
  const std::size_t proposals = 4 * edges.size();
  for (std::size_t step = 0; step < proposals; ++step) {
    const std::size_t i = rng.below(edges.size());
    const std::size_t j = rng.below(edges.size());
    if (i == j) continue;
    const PairKey e1{edges[i].first, edges[j].second};
    const PairKey e2{edges[j].first, edges[i].second};
    if (e1.first == e1.second || e2.first == e2.second) continue;
    const PairKey k1 = canonical_pair(e1.first, e1.second);
    const PairKey k2 = canonical_pair(e2.first, e2.second);
    if (k1 == k2) continue;
    if (counts.count(k1) && counts.at(k1) > 0) continue;
    if (counts.count(k2) && counts.at(k2) > 0) continue;
    --counts[edges[i]];
    --counts[edges[j]];
    ++counts[k1];
    ++counts[k2];
    edges[i] = k1;
    edges[j] = k2;
  }
}

// Pairs stubs into simple edges avoiding `occupied`. Uniform random matching
// with swap repair first; dense neighborhoods (internal degree close to
// community size) can stall that, so a Havel-Hakimi construction plus
// randomizing swaps backs it up.
bool match_stubs(Rng& rng, std::vector<NodeId> stubs, const std::map<PairKey, int>& occupied,
                 EdgeList& out) {
  if (stubs.size() % 2 != 0) return false;
  if (stubs.empty()) return true;

  const int kRestarts = 8;
  for (int attempt = 0; attempt < kRestarts; ++attempt) {
    rng.shuffle(stubs);
    std::vector<PairKey> edges;
    edges.reserve(stubs.size() / 2);
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
      edges.emplace_back(stubs[i], stubs[i + 1]);
    }
    if (repair_edges(rng, edges, occupied)) {
      for (const auto& e : edges) out.push_back(canonical_pair(e.first, e.second));
      return true;
    }
  }

  std::vector<PairKey> edges;
  if (!havel_hakimi(stubs, edges)) return false;
  if (!repair_edges(rng, edges, occupied)) return false;
  for (auto& e : edges) e = canonical_pair(e.first, e.second);
  randomize_edges(rng, edges, occupied);
  out.insert(out.end(), edges.begin(), edges.end());
  return true;
}

}  // namespace

GeneratedNetwork generate_lfr(const LfrConfig& cfg, std::uint64_t seed, LfrDiagnostics* diag) {
  if (cfg.n < 2 || cfg.k_avg < 1.0 || cfg.k_avg > cfg.k_max || cfg.k_max >= cfg.n ||
      cfg.gamma <= 1.0 || cfg.beta < 1.0 || cfg.mu < 0.0 || cfg.mu >= 1.0) {
    throw InputError("invalid LFR config");
  }
  Rng rng(seed);
  LfrDiagnostics local_diag;
  LfrDiagnostics& d = diag ? *diag : local_diag;

  // Degree sequence.
  const double cutoff = solve_degree_cutoff(cfg.gamma, cfg.k_avg, cfg.k_max);
  d.degree_cutoff = cutoff;
  std::vector<int> degree(cfg.n);
  for (int i = 0; i < cfg.n; ++i) {
    const double x = sample_power_law(rng, cfg.gamma, cutoff, cfg.k_max);
    degree[i] = static_cast<int>(std::clamp<std::int64_t>(round_half_up(x), 1, cfg.k_max));
  }
  if (std::accumulate(degree.begin(), degree.end(), std::int64_t{0}) % 2 != 0) {
    auto it = std::find_if(degree.begin(), degree.end(), [&](int k) { return k < cfg.k_max; });
    if (it != degree.end()) {
      ++*it;
    } else {
      --degree.front();
    }
  }
  d.min_degree = *std::min_element(degree.begin(), degree.end());
  d.max_degree = *std::max_element(degree.begin(), degree.end());

  // Per-node internal-degree targets.
  std::vector<int> internal(cfg.n);
  for (int i = 0; i < cfg.n; ++i) {
    internal[i] = static_cast<int>(
        std::clamp<std::int64_t>(round_half_up((1.0 - cfg.mu) * degree[i]), 0, degree[i]));
  }
  const int max_demand = *std::max_element(internal.begin(), internal.end());

  // Community sizes: power law on [size_min, size_max], summing exactly to N.
  const int size_min =
      std::max(2, static_cast<int>(std::ceil(cutoff * (1.0 - cfg.mu))) + 1);
  const int size_max = std::max(size_min, max_demand + 1);
  if (size_min > cfg.n) {
    throw GenerationError("community-sizes", "minimum community size exceeds node count");
  }
  std::vector<double> cumulative(size_max - size_min + 1);
  double acc = 0.0;
  for (int s = size_min; s <= size_max; ++s) {
    acc += std::pow(static_cast<double>(s), -cfg.beta);
    cumulative[s - size_min] = acc;
  }
  auto draw_size = [&]() {
    const double u = rng.next_double() * acc;
    const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    return size_min + static_cast<int>(std::min<std::ptrdiff_t>(
                          it - cumulative.begin(), cumulative.size() - 1));
  };

  std::vector<int> sizes;
  int assigned_total = 0;
  for (int guard = 0; assigned_total < cfg.n; ++guard) {
    if (guard > 100000) {
      throw GenerationError("community-sizes", "could not draw sizes summing to n");
    }
    const int s = draw_size();
    if (assigned_total + s <= cfg.n) {
      sizes.push_back(s);
      assigned_total += s;
      continue;
    }
    int rem = cfg.n - assigned_total;
    if (rem >= size_min) {
      sizes.push_back(rem);
      assigned_total = cfg.n;
      continue;
    }
    // Spread the remainder over already-drawn communities.
    for (int tries = 0; rem > 0 && tries < 1000; ++tries) {
      int& target = sizes[rng.below(sizes.size())];
      if (target < size_max) {
        ++target;
        --rem;
      }
    }
    for (std::size_t i = 0; rem > 0 && i < sizes.size(); ++i) {
      while (rem > 0 && sizes[i] < size_max) {
        ++sizes[i];
        --rem;
      }
    }
    if (rem > 0) {
      throw GenerationError("community-sizes", "community sizes cannot absorb all nodes");
    }
    assigned_total = cfg.n;
  }
  // The largest demand needs a community able to host it.
  {
    auto largest = std::max_element(sizes.begin(), sizes.end());
    int deficit = (max_demand + 1) - *largest;
    for (std::size_t i = 0; deficit > 0 && i < sizes.size(); ++i) {
      if (&sizes[i] == &*largest) continue;
      while (deficit > 0 && sizes[i] > size_min) {
        --sizes[i];
        ++*largest;
        --deficit;
      }
    }
    if (deficit > 0) {
      throw GenerationError("community-sizes",
                            "no community can host internal degree " + std::to_string(max_demand));
    }
  }
  d.community_count = static_cast<int>(sizes.size());
  d.min_community_size = *std::min_element(sizes.begin(), sizes.end());
  d.max_community_size = *std::max_element(sizes.begin(), sizes.end());

  // Assignment: highest demand first, uniformly among communities that still
  // have room and are large enough.
  std::vector<int> membership(cfg.n, -1);
  std::vector<int> free_slots = sizes;
  std::vector<std::vector<NodeId>> members(sizes.size());
  std::vector<NodeId> order(cfg.n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](NodeId a, NodeId b) { return internal[a] > internal[b]; });
  for (NodeId node : order) {
    std::vector<int> candidates;
    for (std::size_t c = 0; c < sizes.size(); ++c) {
      if (free_slots[c] > 0 && sizes[c] - 1 >= internal[node]) {
        candidates.push_back(static_cast<int>(c));
      }
    }
    if (!candidates.empty()) {
      const int c = candidates[rng.below(candidates.size())];
      membership[node] = c;
      members[c].push_back(node);
      --free_slots[c];
      continue;
    }
    // Every fitting community is full: trade places with an already-placed
    // node that fits a community with room.
    bool placed = false;
    for (std::size_t fit = 0; fit < sizes.size() && !placed; ++fit) {
      if (sizes[fit] - 1 < internal[node]) continue;
      for (std::size_t open = 0; open < sizes.size() && !placed; ++open) {
        if (free_slots[open] == 0) continue;
        for (std::size_t idx = 0; idx < members[fit].size(); ++idx) {
          const NodeId moved = members[fit][idx];
          if (sizes[open] - 1 < internal[moved]) continue;
          members[fit][idx] = node;
          membership[node] = static_cast<int>(fit);
          members[open].push_back(moved);
          membership[moved] = static_cast<int>(open);
          --free_slots[open];
          placed = true;
          break;
        }
      }
    }
    if (!placed) {
      throw GenerationError("community-assignment",
                            "node with internal degree " + std::to_string(internal[node]) +
                                " fits no community");
    }
  }

  // Internal stub parity per community: prefer converting one external stub
  // to internal; when no member has room (every mu = 0 community), drop one
  // stub outright so nothing leaks across communities.
  for (std::size_t c = 0; c < members.size(); ++c) {
    std::int64_t stub_sum = 0;
    for (NodeId node : members[c]) stub_sum += internal[node];
    if (stub_sum % 2 == 0) continue;
    NodeId grow = -1;
    for (NodeId node : members[c]) {
      if (internal[node] < degree[node] && internal[node] < sizes[c] - 1 &&
          (grow < 0 || degree[node] - internal[node] > degree[grow] - internal[grow])) {
        grow = node;
      }
    }
    if (grow >= 0) {
      ++internal[grow];
      continue;
    }
    NodeId shrink = -1;
    for (NodeId node : members[c]) {
      if (internal[node] >= 1 && (shrink < 0 || internal[node] > internal[shrink])) shrink = node;
    }
    --internal[shrink];
    --degree[shrink];
  }

  // Graphicality repair: a community can end up with demands no simple graph
  // realizes (nine nodes wanting 9 partners plus one wanting 7, say). Spill
  // one stub from each of the two heaviest members until a Havel-Hakimi dry
  // run succeeds; the pairwise step keeps the community stub sum even.
  for (std::size_t c = 0; c < members.size(); ++c) {
    for (int guard = 0;; ++guard) {
      if (guard > 2 * sizes[c] * sizes[c]) {
        throw GenerationError("internal-wiring", "community " + std::to_string(c) +
                                                     " demands cannot be made graphical");
      }
      std::vector<NodeId> stubs;
      for (NodeId node : members[c]) stubs.insert(stubs.end(), internal[node], node);
      std::vector<PairKey> scratch;
      if (stubs.empty() || havel_hakimi(stubs, scratch)) break;

      NodeId first = -1;
      NodeId second = -1;
      for (NodeId node : members[c]) {
        if (internal[node] < 1) continue;
        if (first < 0 || internal[node] > internal[first]) {
          second = first;
          first = node;
        } else if (second < 0 || internal[node] > internal[second]) {
          second = node;
        }
      }
      if (second >= 0) {
        --internal[first];
        --internal[second];
        if (cfg.mu == 0.0) {
          --degree[first];
          --degree[second];
        }
      } else {
        internal[first] -= 2;
        if (cfg.mu == 0.0) degree[first] -= 2;
      }
    }
  }

  // The parity repairs shift single stubs around; keep the global external
  // stub count even by shaving one when needed.
  std::int64_t external_total = 0;
  for (NodeId node = 0; node < cfg.n; ++node) external_total += degree[node] - internal[node];
  if (external_total % 2 != 0) {
    NodeId pick = -1;
    for (NodeId node = 0; node < cfg.n; ++node) {
      const int ext = degree[node] - internal[node];
      if (ext >= 1 && (pick < 0 || ext > degree[pick] - internal[pick])) pick = node;
    }
    --degree[pick];
  }

  // Wire internal edges community by community.
  EdgeList all_edges;
  std::map<PairKey, int> occupied;
  for (std::size_t c = 0; c < members.size(); ++c) {
    std::vector<NodeId> stubs;
    for (NodeId node : members[c]) {
      stubs.insert(stubs.end(), internal[node], node);
    }
    EdgeList community_edges;
    if (!match_stubs(rng, std::move(stubs), occupied, community_edges)) {
      throw GenerationError("internal-wiring",
                            "community " + std::to_string(c) + " admits no simple wiring");
    }
    for (const auto& e : community_edges) {
      occupied[e] = 1;
      all_edges.push_back(e);
    }
  }

  // Wire external edges globally.
  std::vector<NodeId> external_stubs;
  for (NodeId node = 0; node < cfg.n; ++node) {
    external_stubs.insert(external_stubs.end(), degree[node] - internal[node], node);
  }
  EdgeList external_edges;
  if (!external_stubs.empty() &&
      !match_stubs(rng, std::move(external_stubs), occupied, external_edges)) {
    throw GenerationError("external-wiring", "external stubs admit no simple wiring");
  }

  // Mixing repair: swap external edges until none stay inside a community
  // (or per-node mixing is within tolerance, or the sweep cap is reached).
  const double kTolerance = 0.05;
  const int kMaxSweeps = 1000;
  std::map<PairKey, int> edge_set = occupied;
  for (const auto& e : external_edges) edge_set[e] = 1;
  auto same_side = [&](const PairKey& e) { return membership[e.first] == membership[e.second]; };

  auto within_tolerance = [&]() {
    std::vector<int> cross(cfg.n, 0);
    for (const auto& e : external_edges) {
      if (!same_side(e)) {
        ++cross[e.first];
        ++cross[e.second];
      }
    }
    for (NodeId node = 0; node < cfg.n; ++node) {
      const double frac = static_cast<double>(cross[node]) / static_cast<double>(degree[node]);
      if (std::abs(frac - cfg.mu) > kTolerance) return false;
    }
    return true;
  };

  int sweeps = 0;
  while (sweeps < kMaxSweeps) {
    bool any_blemish = false;
    bool progress = false;
    for (std::size_t i = 0; i < external_edges.size(); ++i) {
      if (!same_side(external_edges[i])) continue;
      any_blemish = true;
      for (int trial = 0; trial < 40; ++trial) {
        const std::size_t j = rng.below(external_edges.size());
        if (j == i) continue;
        const auto [a, b] = external_edges[i];
        const auto [c1, c2] = external_edges[j];
        const PairKey n1 = canonical_pair(a, c2);
        const PairKey n2 = canonical_pair(c1, b);
        if (a == c2 || c1 == b || n1 == n2) continue;
        // Both replacement edges must land across communities, so every
        // accepted swap strictly shrinks the blemish count.
        if (membership[n1.first] == membership[n1.second]) continue;
        if (membership[n2.first] == membership[n2.second]) continue;
        if (edge_set.count(n1) && edge_set.at(n1) > 0) continue;
        if (edge_set.count(n2) && edge_set.at(n2) > 0) continue;
        --edge_set[external_edges[i]];
        --edge_set[external_edges[j]];
        ++edge_set[n1];
        ++edge_set[n2];
        external_edges[i] = n1;
        external_edges[j] = n2;
        progress = true;
        break;
      }
    }
    ++sweeps;
    if (!any_blemish || !progress) break;
    if (within_tolerance()) break;
  }
  d.mixing_sweeps = sweeps;

  all_edges.insert(all_edges.end(), external_edges.begin(), external_edges.end());
  return {Graph::from_edges(cfg.n, all_edges), Partition(membership)};
}

}  // namespace cdlp
