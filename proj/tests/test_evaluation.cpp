#include <doctest.h>

#include <cmath>

#include "cdlp/errors.hpp"
#include "cdlp/evaluation.hpp"
#include "cdlp/rng.hpp"
#include "oracles.hpp"

using namespace cdlp;

TEST_CASE("confusion table marginals") {
  const Partition truth(std::vector<int>{0, 0, 1, 1, 2});
  const Partition computed(std::vector<int>{0, 1, 1, 1, 0});
  const ConfusionTable table = ConfusionTable::build(truth, computed);
  CHECK(table.total == 5);
  CHECK(table.row_sums == std::vector<std::int64_t>{2, 2, 1});
  CHECK(table.col_sums == std::vector<std::int64_t>{2, 3});
  std::int64_t sum = 0;
  for (const auto& row : table.counts) {
    for (std::int64_t c : row) sum += c;
  }
  CHECK(sum == 5);
  CHECK_THROWS_AS(ConfusionTable::build(truth, Partition::singletons(4)), InputError);
}

TEST_CASE("nmi identity and relabeling") {
  const Partition p(std::vector<int>{0, 0, 1, 1, 2, 2});
  CHECK(nmi(p, p) == doctest::Approx(1.0).epsilon(1e-12));
  const Partition relabeled(std::vector<int>{9, 9, 4, 4, 7, 7});
  CHECK(nmi(p, relabeled) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("nmi of the crossed 4-node partitions is zero") {
  const Partition truth(std::vector<int>{0, 0, 1, 1});
  const Partition computed(std::vector<int>{0, 1, 0, 1});
  CHECK(nmi(truth, computed) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("nmi symmetry, range, and invariance on random pairs") {
  Rng rng(83);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 4 + rng.below_int(12);
    const Partition p1 = testing::random_partition(rng, n, 2 + rng.below_int(3));
    const Partition p2 = testing::random_partition(rng, n, 2 + rng.below_int(3));
    if (p1.community_count() < 2 || p2.community_count() < 2) continue;

    const double v = nmi(p1, p2);
    CHECK(v >= -1e-12);
    CHECK(v <= 1.0 + 1e-12);
    CHECK(v == doctest::Approx(nmi(p2, p1)).epsilon(1e-12));

    // Relabel p2 arbitrarily; the score cannot move.
    std::vector<int> relabeled(n);
    for (int i = 0; i < n; ++i) relabeled[i] = 100 - p2.community_of(i) * 7;
    CHECK(v == doctest::Approx(nmi(p1, Partition(relabeled))).epsilon(1e-12));
  }
}

TEST_CASE("nmi single-community conventions") {
  const Partition whole = Partition::single_community(4);
  CHECK(nmi(whole, whole) == 1.0);
  CHECK(nmi(whole, Partition(std::vector<int>{0, 0, 1, 1})) == 0.0);
  CHECK(nmi(Partition(std::vector<int>{0, 0, 1, 1}), whole) == 0.0);
}

TEST_CASE("aggregate") {
  const Aggregate constant = aggregate({1.0, 1.0, 1.0});
  CHECK(constant.mean == doctest::Approx(1.0));
  CHECK(constant.stddev == doctest::Approx(0.0));
  CHECK(constant.count == 3);

  const Aggregate two = aggregate({0.0, 1.0});
  CHECK(two.mean == doctest::Approx(0.5));
  CHECK(two.stddev == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));

  const Aggregate one = aggregate({0.25});
  CHECK(one.stddev == 0.0);

  CHECK_THROWS_AS(aggregate({}), InputError);
}

TEST_CASE("aggregate matches an independent recomputation") {
  Rng rng(89);
  std::vector<double> values;
  for (int i = 0; i < 10; ++i) values.push_back(rng.next_double());

  double mean = 0.0;
  for (double v : values) mean += v / 10.0;
  double variance = 0.0;
  for (double v : values) variance += (v - mean) * (v - mean) / 9.0;

  const Aggregate agg = aggregate(values);
  CHECK(agg.mean == doctest::Approx(mean).epsilon(1e-12));
  CHECK(agg.stddev == doctest::Approx(std::sqrt(variance)).epsilon(1e-12));
}
