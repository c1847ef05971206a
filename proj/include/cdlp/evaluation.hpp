#pragma once

#include <cstdint>
#include <vector>

#include "cdlp/graph.hpp"

namespace cdlp {

// Overlap counts between two partitions of the same node set:
// counts[i][j] = |true community i ∩ computed community j|.
struct ConfusionTable {
  std::vector<std::vector<std::int64_t>> counts;
  std::vector<std::int64_t> row_sums;  // true community sizes
  std::vector<std::int64_t> col_sums;  // computed community sizes
  std::int64_t total = 0;

  static ConfusionTable build(const Partition& truth, const Partition& computed);
};

// Normalized mutual information in [0,1]; 1 means the partitions agree up
// to relabeling. Natural logarithms throughout. When either partition has a
// single community the entropy normalizer vanishes; the value is then 1 for
// identical set-partitions and 0 otherwise.
double nmi(const Partition& truth, const Partition& computed);

struct Aggregate {
  double mean = 0.0;
  double stddev = 0.0;  // sample standard deviation (n-1); 0 for one value
  std::size_t count = 0;
};

Aggregate aggregate(const std::vector<double>& values);

}  // namespace cdlp
