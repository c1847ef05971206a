#include "cdlp/evaluation.hpp"

#include <cmath>
#include <string>

#include "cdlp/errors.hpp"

namespace cdlp {

ConfusionTable ConfusionTable::build(const Partition& truth, const Partition& computed) {
  if (truth.node_count() != computed.node_count()) {
    throw InputError("partitions cover different node sets: " +
                     std::to_string(truth.node_count()) + " vs " +
                     std::to_string(computed.node_count()));
  }
  ConfusionTable table;
  const int k1 = truth.community_count();
  const int k2 = computed.community_count();
  table.counts.assign(k1, std::vector<std::int64_t>(k2, 0));
  table.row_sums.assign(k1, 0);
  table.col_sums.assign(k2, 0);
  table.total = truth.node_count();
  for (NodeId v = 0; v < truth.node_count(); ++v) {
    const int i = truth.community_of(v);
    const int j = computed.community_of(v);
    ++table.counts[i][j];
    ++table.row_sums[i];
    ++table.col_sums[j];
  }
  return table;
}

double nmi(const Partition& truth, const Partition& computed) {
  const ConfusionTable table = ConfusionTable::build(truth, computed);
  const auto n = static_cast<double>(table.total);

  if (truth.community_count() == 1 || computed.community_count() == 1) {
    return truth == computed ? 1.0 : 0.0;
  }

  double numerator = 0.0;
  for (std::size_t i = 0; i < table.counts.size(); ++i) {
    for (std::size_t j = 0; j < table.counts[i].size(); ++j) {
      const auto nij = static_cast<double>(table.counts[i][j]);
      if (nij == 0.0) continue;  // 0*log(.) == 0
      numerator += nij * std::log(nij * n /
                                  (static_cast<double>(table.row_sums[i]) *
                                   static_cast<double>(table.col_sums[j])));
    }
  }

  double entropy_truth = 0.0;
  for (std::int64_t ni : table.row_sums) {
    entropy_truth += static_cast<double>(ni) * std::log(static_cast<double>(ni) / n);
  }
  double entropy_computed = 0.0;
  for (std::int64_t nj : table.col_sums) {
    entropy_computed += static_cast<double>(nj) * std::log(static_cast<double>(nj) / n);
  }

  return numerator / std::sqrt(entropy_truth * entropy_computed);
}

Aggregate aggregate(const std::vector<double>& values) {
  if (values.empty()) {
    throw InputError("aggregate requires at least one value");
  }
  Aggregate out;
  out.count = values.size();
  double sum = 0.0;
  for (double v : values) sum += v;
  out.mean = sum / static_cast<double>(values.size());
  if (values.size() > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - out.mean) * (v - out.mean);
    out.stddev = std::sqrt(ss / static_cast<double>(values.size() - 1));
  }
  return out;
}

}  // namespace cdlp
