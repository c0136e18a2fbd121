#include "gctsp/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "gctsp/decoders.hpp"
#include "gctsp/generators.hpp"
#include "gctsp/instance_io.hpp"
#include "gctsp/oracles.hpp"
#include "gctsp/spanning_tree_sampler.hpp"

namespace gctsp {
namespace {

Algorithm algorithm_from_string(const std::string& name) {
  if (name == "cluster") return Algorithm::kCluster;
  if (name == "tree") return Algorithm::kTree;
  if (name == "tour") return Algorithm::kTour;
  throw std::invalid_argument("unknown algorithm '" + name + "'");
}

Family family_from_string(const std::string& name) {
  if (name == "gs") return Family::kGs;
  if (name == "gg-mst") return Family::kGgMst;
  if (name == "gg-tsp") return Family::kGgTsp;
  if (name == "random") return Family::kRandom;
  if (name == "file") return Family::kFile;
  throw std::invalid_argument("unknown family '" + name + "'");
}

std::vector<int> parse_int_list(const std::string& value) {
  std::vector<int> result;
  std::istringstream in(value);
  std::string item;
  while (std::getline(in, item, ','))
    result.push_back(std::stoi(item));
  return result;
}

std::uint64_t parse_u64_value(const std::string& value) {
  return std::stoull(value);
}

bool generated_family(Family family) {
  return family == Family::kGs || family == Family::kGgMst ||
         family == Family::kGgTsp;
}

/// Builds the instance for one series and certifies its optimum if needed.
ClusteredGraph build_instance(const ExperimentConfig& config, int m) {
  switch (config.family) {
    case Family::kGs:
      return generate_gs(m);
    case Family::kGgMst:
      return generate_gg_mst(m);
    case Family::kGgTsp:
      return generate_gg_tsp(m);
    case Family::kRandom: {
      ClusteredGraph g =
          generate_random(static_cast<int>(config.sizes.size()), config.sizes,
                          config.max_cost, config.instance_seed);
      try {
        const DecodedSolution optimum = config.algorithm == Algorithm::kTour
                                            ? brute_force_gtsp(g)
                                            : brute_force_gmstp(g);
        g.set_known_optimum(optimum.cost);
      } catch (const std::invalid_argument&) {
        // Beyond the oracle guards: run without optimum detection.
      }
      return g;
    }
    case Family::kFile:
      return load_instance_file(config.instance_path);
  }
  throw std::logic_error("unreachable");
}

}  // namespace

std::string to_string(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kCluster: return "cluster";
    case Algorithm::kTree: return "tree";
    case Algorithm::kTour: return "tour";
  }
  return "?";
}

std::string to_string(Family family) {
  switch (family) {
    case Family::kGs: return "gs";
    case Family::kGgMst: return "gg-mst";
    case Family::kGgTsp: return "gg-tsp";
    case Family::kRandom: return "random";
    case Family::kFile: return "file";
  }
  return "?";
}

void ExperimentConfig::validate() const {
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");
  if (budget < 1) throw std::invalid_argument("budget must be at least 1");
  const bool tour = algorithm == Algorithm::kTour;
  switch (family) {
    case Family::kGs:
    case Family::kGgMst:
      if (tour)
        throw std::invalid_argument(
            "the tour EA pairs with GTSP families (gg-tsp, random, file)");
      if (m_values.empty())
        throw std::invalid_argument("generated families need m");
      break;
    case Family::kGgTsp:
      if (!tour)
        throw std::invalid_argument(
            "gg-tsp is a GTSP family; use the tour EA");
      if (m_values.empty())
        throw std::invalid_argument("generated families need m");
      break;
    case Family::kRandom:
      if (sizes.empty())
        throw std::invalid_argument("the random family needs sizes");
      break;
    case Family::kFile:
      if (instance_path.empty())
        throw std::invalid_argument("the file family needs instance=PATH");
      break;
  }
}

ExperimentConfig parse_config(const std::string& text) {
  ExperimentConfig config;
  std::istringstream in(text);
  std::string line;
  int number = 0;
  bool have_algorithm = false, have_family = false, have_trials = false,
       have_budget = false;
  while (std::getline(in, line)) {
    ++number;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    line = line.substr(first, last - first + 1);
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config line " + std::to_string(number) +
                                  ": expected key=value");
    const std::string key = line.substr(0, eq);
    const std::string value = line.substr(eq + 1);
    try {
      if (key == "algorithm") {
        config.algorithm = algorithm_from_string(value);
        have_algorithm = true;
      } else if (key == "family") {
        config.family = family_from_string(value);
        have_family = true;
      } else if (key == "m") {
        config.m_values = parse_int_list(value);
      } else if (key == "sizes") {
        config.sizes = parse_int_list(value);
      } else if (key == "max_cost") {
        config.max_cost = parse_u64_value(value);
      } else if (key == "instance_seed") {
        config.instance_seed = parse_u64_value(value);
      } else if (key == "instance") {
        config.instance_path = value;
      } else if (key == "trials") {
        config.trials = std::stoi(value);
        have_trials = true;
      } else if (key == "budget") {
        config.budget = parse_u64_value(value);
        have_budget = true;
      } else if (key == "base_seed") {
        config.base_seed = parse_u64_value(value);
      } else {
        throw std::invalid_argument("unknown key '" + key + "'");
      }
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("config line " + std::to_string(number) +
                                  ": " + e.what());
    }
  }
  if (!have_algorithm || !have_family || !have_trials || !have_budget)
    throw std::invalid_argument(
        "config needs at least algorithm, family, trials and budget");
  config.validate();
  return config;
}

ExperimentConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

std::vector<ExperimentSeries> run_experiment(const ExperimentConfig& config) {
  config.validate();

  std::vector<int> series_m;
  if (generated_family(config.family))
    series_m = config.m_values;
  else
    series_m = {0};  // placeholder, replaced by the instance's m below

  std::vector<ExperimentSeries> result;
  for (int m : series_m) {
    const ClusteredGraph instance = build_instance(config, m);
    ExperimentSeries series;
    series.m = instance.cluster_count();
    series.records.assign(config.trials, TrialRecord{});

    const auto run_trial = [&](int trial) {
      RandomStream rng(config.base_seed + static_cast<std::uint64_t>(trial));
      TrialRecord record;
      switch (config.algorithm) {
        case Algorithm::kCluster:
          record = run_cluster_ea(instance, config.budget, rng);
          break;
        case Algorithm::kTree:
          record = run_tree_ea(instance, config.budget, rng);
          break;
        case Algorithm::kTour:
          record = run_tour_ea(instance, config.budget, rng);
          break;
      }
      record.trial_index = trial;
      record.seed = config.base_seed + static_cast<std::uint64_t>(trial);
      series.records[trial] = std::move(record);
    };

    const unsigned workers = std::min<unsigned>(
        std::max(1u, std::thread::hardware_concurrency()),
        static_cast<unsigned>(config.trials));
    if (workers <= 1) {
      for (int trial = 0; trial < config.trials; ++trial) run_trial(trial);
    } else {
      std::atomic<int> next{0};
      std::vector<std::thread> pool;
      pool.reserve(workers);
      for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
          for (int trial = next.fetch_add(1); trial < config.trials;
               trial = next.fetch_add(1))
            run_trial(trial);
        });
      for (auto& thread : pool) thread.join();
    }
    result.push_back(std::move(series));
  }
  return result;
}

double percentile(const std::vector<double>& sorted_values, double p) {
  if (sorted_values.empty())
    throw std::invalid_argument("percentile of an empty sample");
  if (sorted_values.size() == 1) return sorted_values.front();
  const double rank = p / 100.0 * static_cast<double>(sorted_values.size() - 1);
  const auto lower = static_cast<std::size_t>(rank);
  if (lower + 1 >= sorted_values.size()) return sorted_values.back();
  const double fraction = rank - static_cast<double>(lower);
  return sorted_values[lower] +
         fraction * (sorted_values[lower + 1] - sorted_values[lower]);
}

SummaryRow summarize(Algorithm algorithm, Family family, int m,
                     const std::vector<TrialRecord>& records) {
  SummaryRow row;
  row.algorithm = to_string(algorithm);
  row.family = to_string(family);
  row.m = m;
  row.trials = static_cast<int>(records.size());

  std::vector<double> evaluations;
  double cost_sum = 0.0;
  int finite_costs = 0;
  for (const auto& record : records) {
    if (record.evaluations_to_optimum)
      evaluations.push_back(
          static_cast<double>(*record.evaluations_to_optimum));
    if (record.best_cost.is_finite()) {
      cost_sum += static_cast<double>(record.best_cost.value());
      ++finite_costs;
    }
  }
  row.successes = static_cast<int>(evaluations.size());
  row.success_rate =
      row.trials == 0 ? 0.0
                      : static_cast<double>(row.successes) / row.trials;
  if (!evaluations.empty()) {
    std::sort(evaluations.begin(), evaluations.end());
    double sum = 0.0;
    for (double e : evaluations) sum += e;
    row.mean_evaluations = sum / static_cast<double>(evaluations.size());
    row.median_evaluations = percentile(evaluations, 50.0);
    row.p90_evaluations = percentile(evaluations, 90.0);
  }
  if (finite_costs > 0) row.mean_best_cost = cost_sum / finite_costs;
  return row;
}

namespace {

std::string format_double(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.6g", value);
  return buffer;
}

}  // namespace

void emit_records_csv(const std::vector<TrialRecord>& records,
                      std::ostream& out) {
  out << "trial,seed,evals_to_opt,best_cost,plateau,wall_ms\n";
  for (const auto& record : records) {
    out << record.trial_index << ',' << record.seed << ',';
    if (record.evaluations_to_optimum) out << *record.evaluations_to_optimum;
    out << ',' << to_string(record.best_cost) << ','
        << (record.hit_local_plateau ? 1 : 0) << ',' << record.wall_time_ms
        << '\n';
  }
}

void emit_summary_csv(const std::vector<SummaryRow>& rows, std::ostream& out) {
  out << "algo,family,m,trials,success_rate,mean_evals,median_evals,p90_evals\n";
  for (const auto& row : rows) {
    out << row.algorithm << ',' << row.family << ',' << row.m << ','
        << row.trials << ',' << format_double(row.success_rate) << ',';
    if (row.successes > 0) {
      out << format_double(row.mean_evaluations) << ','
          << format_double(row.median_evaluations) << ','
          << format_double(row.p90_evaluations);
    } else {
      out << ",,";
    }
    out << '\n';
  }
}

void write_records_csv(const std::vector<TrialRecord>& records,
                       const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  emit_records_csv(records, out);
}

void write_summary_csv(const std::vector<SummaryRow>& rows,
                       const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  emit_summary_csv(rows, out);
}

VerifyReport verify_oracles(std::uint64_t seed, int count, std::ostream& out) {
  VerifyReport report;
  RandomStream rng(seed);
  for (int i = 0; i < count; ++i) {
    ++report.cases;
    bool gmstp_ok = false;
    bool gtsp_ok = false;

    {
      // GMSTP side: tree DP vs exhaustive enumeration on a random tree.
      const int m = 2 + static_cast<int>(rng.uniform_below(4));
      std::vector<int> sizes(m);
      for (auto& s : sizes) s = 1 + static_cast<int>(rng.uniform_below(4));
      const ClusteredGraph g =
          generate_random(m, sizes, 50, rng.next_u64());
      const ClusterTree tree = uniform_spanning_tree(cluster_graph(g), rng);
      const DecodedSolution fast = best_nodes_for_tree(g, tree);
      const DecodedSolution brute = brute_nodes_for_tree(g, tree);
      gmstp_ok = fast.cost == brute.cost &&
                 fast.selection.chosen == brute.selection.chosen;
    }
    {
      // GTSP side: cluster optimization vs exhaustive enumeration on a
      // random tour.
      const int m = 4;
      std::vector<int> sizes(m);
      for (auto& s : sizes) s = 1 + static_cast<int>(rng.uniform_below(3));
      const ClusteredGraph g =
          generate_random(m, sizes, 50, rng.next_u64());
      const ClusterTour tour{rng.permutation(m)};
      const DecodedSolution fast = best_nodes_for_tour(g, tour);
      const DecodedSolution brute = brute_nodes_for_tour(g, tour);
      gtsp_ok = fast.cost == brute.cost &&
                fast.selection.chosen == brute.selection.chosen;
    }

    const bool ok = gmstp_ok && gtsp_ok;
    if (!ok) ++report.failures;
    out << "case " << i << ": gmstp " << (gmstp_ok ? "ok" : "MISMATCH")
        << ", gtsp " << (gtsp_ok ? "ok" : "MISMATCH") << '\n';
  }
  out << (report.ok() ? "all " : "FAILURES: ") << report.cases - report.failures
      << "/" << report.cases << " cases matched\n";
  return report;
}

}  // namespace gctsp
