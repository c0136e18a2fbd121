// The two GMSTP representations on each other's trap instances: each solves
// the other's hard case quickly and stays stuck on its own.

#include "doctest.h"
#include "gctsp/experiment.hpp"

using namespace gctsp;

namespace {

SummaryRow run(Algorithm algorithm, Family family, int m) {
  ExperimentConfig config;
  config.algorithm = algorithm;
  config.family = family;
  config.m_values = {m};
  config.trials = 50;
  config.budget = 10'000;
  config.base_seed = 5150;
  const auto series = run_experiment(config);
  return summarize(algorithm, family, m, series[0].records);
}

}  // namespace

TEST_CASE("complementary abilities of the two GMSTP representations") {
  const SummaryRow tree_on_gs = run(Algorithm::kTree, Family::kGs, 6);
  CHECK(tree_on_gs.successes == 50);
  CHECK(tree_on_gs.mean_evaluations == doctest::Approx(1.0));

  const SummaryRow cluster_on_ggmst = run(Algorithm::kCluster, Family::kGgMst, 16);
  CHECK(cluster_on_ggmst.successes == 50);

  const SummaryRow cluster_on_gs = run(Algorithm::kCluster, Family::kGs, 6);
  CHECK(cluster_on_gs.successes <= 5);

  const SummaryRow tree_on_ggmst = run(Algorithm::kTree, Family::kGgMst, 16);
  CHECK(tree_on_ggmst.successes <= 25);
}
