#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "gctsp/clustered_graph.hpp"
#include "gctsp/ea.hpp"

namespace gctsp {

enum class Algorithm { kCluster, kTree, kTour };
enum class Family { kGs, kGgMst, kGgTsp, kRandom, kFile };

std::string to_string(Algorithm algorithm);
std::string to_string(Family family);

/// One experiment campaign: an algorithm, an instance family with its
/// parameters, and the trial plan. Trial i runs with seed base_seed + i, so
/// any single trial can be reproduced in isolation.
struct ExperimentConfig {
  Algorithm algorithm = Algorithm::kCluster;
  Family family = Family::kGs;
  std::vector<int> m_values;   // gs, gg-mst, gg-tsp: one series per m
  std::vector<int> sizes;      // random: cluster sizes
  std::uint64_t max_cost = 100;     // random
  std::uint64_t instance_seed = 1;  // random
  std::string instance_path;        // file
  int trials = 0;
  std::uint64_t budget = 0;
  std::uint64_t base_seed = 0;

  /// Enforces algorithm/family compatibility (the tour EA pairs with GTSP
  /// families, the cluster and tree EAs with GMSTP families) and parameter
  /// presence. Throws std::invalid_argument.
  void validate() const;
};

/// key=value lines, '#' comments. Keys: algorithm, family, m (int or comma
/// list), sizes (comma list), max_cost, instance_seed, instance, trials,
/// budget, base_seed.
ExperimentConfig parse_config(const std::string& text);
ExperimentConfig load_config_file(const std::string& path);

/// The records of one instance (one m value for the generated families).
struct ExperimentSeries {
  int m = 0;
  std::vector<TrialRecord> records;
};

/// Runs the whole campaign. Random instances get their known optimum
/// certified by the matching brute-force oracle when the guard bounds allow;
/// otherwise the runs proceed without optimum detection. Trials execute
/// concurrently; records are ordered by trial index, so the result is a pure
/// function of the config (wall_time_ms aside, which is measured).
std::vector<ExperimentSeries> run_experiment(const ExperimentConfig& config);

/// Aggregates over one record set. Evaluation statistics are over successful
/// trials only; percentiles use linear interpolation between order statistics
/// (the 50th percentile of {1,2,3,4} is 2.5).
struct SummaryRow {
  std::string algorithm;
  std::string family;
  int m = 0;
  int trials = 0;
  double success_rate = 0.0;
  double mean_evaluations = 0.0;    // valid iff successes > 0
  double median_evaluations = 0.0;  // valid iff successes > 0
  double p90_evaluations = 0.0;     // valid iff successes > 0
  int successes = 0;
  double mean_best_cost = 0.0;      // over finite best costs
};

SummaryRow summarize(Algorithm algorithm, Family family, int m,
                     const std::vector<TrialRecord>& records);

/// Linear-interpolation percentile of a sorted sample, p in [0, 100].
double percentile(const std::vector<double>& sorted_values, double p);

/// Records CSV: trial,seed,evals_to_opt,best_cost,plateau,wall_ms. A missing
/// evals_to_opt is an empty field; an INFINITE best cost prints as "inf".
void emit_records_csv(const std::vector<TrialRecord>& records,
                      std::ostream& out);
/// Summary CSV: algo,family,m,trials,success_rate,mean_evals,median_evals,
/// p90_evals. Statistics fields are empty when no trial succeeded.
void emit_summary_csv(const std::vector<SummaryRow>& rows, std::ostream& out);

void write_records_csv(const std::vector<TrialRecord>& records,
                       const std::string& path);
void write_summary_csv(const std::vector<SummaryRow>& rows,
                       const std::string& path);

/// Cross-validates the fast decoders against the brute-force oracles on
/// seeded random instances within the oracle guards: each case checks one
/// GMSTP instance (random spanning tree, tree DP vs enumeration) and one
/// GTSP instance (random tour, cluster optimization vs enumeration), for
/// exact cost equality and selection equality under the shared tie-break.
/// Prints one pass/fail line per case.
struct VerifyReport {
  int cases = 0;
  int failures = 0;
  bool ok() const { return failures == 0; }
};
VerifyReport verify_oracles(std::uint64_t seed, int count, std::ostream& out);

}  // namespace gctsp
