#pragma once

#include <cstdint>

#include "cdlp/graph.hpp"

namespace cdlp {

// Planted 4-block benchmark: equal-size groups, expected internal degree
// avg_degree - z_out and expected external degree z_out.
struct GnConfig {
  double z_out = 0.0;
  int n = 128;
  int groups = 4;
  int group_size = 32;
  double avg_degree = 16.0;
};

// Planted-partition benchmark with power-law degrees (exponent gamma,
// truncated to [k_min, k_max] with k_min solved so the mean is k_avg) and
// power-law community sizes (exponent beta). mu is the per-node fraction of
// external links.
struct LfrConfig {
  int n = 1000;
  double k_avg = 20.0;
  int k_max = 50;
  double gamma = 2.0;
  double beta = 1.0;
  double mu = 0.1;
};

struct GeneratedNetwork {
  Graph graph;
  Partition partition;
};

// Construction values that the config does not pin; recorded in metadata.
struct LfrDiagnostics {
  double degree_cutoff = 0.0;  // solved lower cutoff of the degree law
  int min_degree = 0;
  int max_degree = 0;
  int min_community_size = 0;
  int max_community_size = 0;
  int community_count = 0;
  int mixing_sweeps = 0;  // rewiring sweeps spent matching mu
};

GeneratedNetwork generate_gn(const GnConfig& cfg, std::uint64_t seed);

GeneratedNetwork generate_lfr(const LfrConfig& cfg, std::uint64_t seed,
                              LfrDiagnostics* diag = nullptr);

// Fraction of edge endpoints that touch a different community, i.e. the
// degree-weighted external-link ratio the LFR mu contract is audited with.
double realized_mixing(const Graph& g, const Partition& p);

}  // namespace cdlp
