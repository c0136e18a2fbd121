// Command-line front end: instance generation, one-shot lower-level solves,
// single EA runs, experiment campaigns and oracle verification.

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gctsp/decoders.hpp"
#include "gctsp/ea.hpp"
#include "gctsp/experiment.hpp"
#include "gctsp/generators.hpp"
#include "gctsp/instance_io.hpp"
#include "gctsp/measures.hpp"
#include "gctsp/oracles.hpp"

namespace {

using namespace gctsp;

std::vector<int> parse_int_list(const std::string& text, char separator) {
  std::vector<int> values;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, separator)) values.push_back(std::stoi(item));
  return values;
}

/// "0-1,1-2,1-3" -> cluster tree edges.
ClusterTree parse_tree_edges(const std::string& text) {
  ClusterTree tree;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto dash = item.find('-');
    if (dash == std::string::npos)
      throw CLI::ValidationError("--tree expects EDGES like 0-1,1-2,1-3");
    tree.edges.emplace_back(std::stoi(item.substr(0, dash)),
                            std::stoi(item.substr(dash + 1)));
  }
  tree.normalize();
  return tree;
}

void print_cost(const ClusteredGraph& g, Cost cost) {
  if (cost.is_infinite()) {
    std::printf("cost inf\n");
  } else if (g.scale() == 1) {
    std::printf("cost %llu\n", static_cast<unsigned long long>(cost.value()));
  } else {
    std::printf("cost %llu (true %g, scale %llu)\n",
                static_cast<unsigned long long>(cost.value()),
                static_cast<double>(cost.value()) / static_cast<double>(g.scale()),
                static_cast<unsigned long long>(g.scale()));
  }
}

void print_solution(const ClusteredGraph& g, const DecodedSolution& solution) {
  print_cost(g, solution.cost);
  std::printf("nodes");
  for (int v : solution.selection.chosen) std::printf(" %d", v);
  std::printf("\nedges");
  for (auto [u, v] : solution.structure_edges) std::printf(" %d-%d", u, v);
  std::printf("\n");
}

int run_generate(const std::string& family, int m, const std::string& sizes,
                 std::uint64_t max_cost, std::uint64_t seed,
                 const std::string& out) {
  std::optional<ClusteredGraph> g;
  if (family == "gs") {
    g = generate_gs(m);
  } else if (family == "gg-mst") {
    g = generate_gg_mst(m);
  } else if (family == "gg-tsp") {
    g = generate_gg_tsp(m);
  } else if (family == "random") {
    if (sizes.empty())
      throw CLI::ValidationError("--sizes is required for --family random");
    const std::vector<int> size_list = parse_int_list(sizes, ',');
    if (m != 0 && m != static_cast<int>(size_list.size()))
      throw CLI::ValidationError("--m disagrees with the --sizes list");
    g = generate_random(static_cast<int>(size_list.size()), size_list,
                        max_cost, seed);
  } else {
    throw CLI::ValidationError("unknown family '" + family + "'");
  }
  save_instance_file(*g, out);
  std::printf("wrote %s: n=%d m=%d scale=%llu known_optimum=%s\n", out.c_str(),
              g->node_count(), g->cluster_count(),
              static_cast<unsigned long long>(g->scale()),
              g->known_optimum() ? to_string(*g->known_optimum()).c_str() : "?");
  return 0;
}

int run_solve(const std::string& algo, const std::string& instance,
              const std::string& tree_arg, const std::string& tour_arg,
              const std::string& nodes_arg) {
  const ClusteredGraph g = load_instance_file(instance);
  if (algo == "dp-tree") {
    if (tree_arg.empty()) throw CLI::ValidationError("dp-tree needs --tree");
    print_solution(g, best_nodes_for_tree(g, parse_tree_edges(tree_arg)));
  } else if (algo == "cluster-opt") {
    if (tour_arg.empty()) throw CLI::ValidationError("cluster-opt needs --tour");
    print_solution(g,
                   best_nodes_for_tour(g, ClusterTour{parse_int_list(tour_arg, ',')}));
  } else if (algo == "mst") {
    if (nodes_arg.empty()) throw CLI::ValidationError("mst needs --nodes");
    print_solution(g,
                   mst_on_selection(g, NodeSelection{parse_int_list(nodes_arg, ',')}));
  } else if (algo == "brute-gmstp") {
    print_solution(g, brute_force_gmstp(g));
  } else if (algo == "brute-gtsp") {
    print_solution(g, brute_force_gtsp(g));
  } else {
    throw CLI::ValidationError("unknown solver '" + algo + "'");
  }
  return 0;
}

int run_evolve(const std::string& algo, const std::string& instance,
               std::uint64_t budget, std::uint64_t seed) {
  const ClusteredGraph g = load_instance_file(instance);
  RandomStream rng(seed);
  TrialRecord record;
  if (algo == "cluster") {
    record = run_cluster_ea(g, budget, rng);
  } else if (algo == "tree") {
    record = run_tree_ea(g, budget, rng);
  } else if (algo == "tour") {
    const TourEaResult result = run_tour_ea_traced(g, budget, rng);
    record = result.record;
    std::printf("final tour similarity S=%d\n", similarity(result.final_tour));
  } else {
    throw CLI::ValidationError("unknown algorithm '" + algo + "'");
  }

  if (record.evaluations_to_optimum)
    std::printf("optimum after %llu evaluations\n",
                static_cast<unsigned long long>(*record.evaluations_to_optimum));
  else
    std::printf("budget exhausted (%llu evaluations)%s\n",
                static_cast<unsigned long long>(budget),
                record.hit_local_plateau ? ", plateau" : "");
  std::printf("best ");
  print_cost(g, record.best_cost);
  std::printf("trajectory (evaluation: cost):\n");
  for (const auto& [evaluation, cost] : record.cost_changes)
    std::printf("  %llu: %s\n", static_cast<unsigned long long>(evaluation),
                to_string(cost).c_str());
  std::printf("wall time %llu ms\n",
              static_cast<unsigned long long>(record.wall_time_ms));
  return 0;
}

int run_experiment_command(const std::string& config_path,
                           const std::string& out,
                           const std::string& summary_path) {
  const ExperimentConfig config = load_config_file(config_path);
  const auto series = run_experiment(config);

  std::vector<TrialRecord> all_records;
  std::vector<SummaryRow> rows;
  for (const auto& s : series) {
    all_records.insert(all_records.end(), s.records.begin(), s.records.end());
    rows.push_back(summarize(config.algorithm, config.family, s.m, s.records));
  }
  write_records_csv(all_records, out);
  if (!summary_path.empty()) write_summary_csv(rows, summary_path);

  std::ostringstream summary;
  emit_summary_csv(rows, summary);
  std::fputs(summary.str().c_str(), stdout);
  std::printf("wrote %zu records to %s\n", all_records.size(), out.c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bi-level evolutionary toolkit for generalized MST and TSP"};
  app.require_subcommand(1);

  // generate
  std::string family, sizes, out;
  int m = 0;
  std::uint64_t max_cost = 100, seed = 1;
  auto* generate = app.add_subcommand("generate", "write an instance file");
  generate->add_option("--family", family, "gs | gg-mst | gg-tsp | random")
      ->required();
  generate->add_option("--m", m, "cluster count (generated families)");
  generate->add_option("--sizes", sizes, "cluster sizes, e.g. 3,3,3 (random)");
  generate->add_option("--max-cost", max_cost, "maximum edge cost (random)");
  generate->add_option("--seed", seed, "generator seed (random)");
  generate->add_option("--out", out, "output path")->required();

  // solve
  std::string solve_algo, instance, tree_arg, tour_arg, nodes_arg;
  auto* solve = app.add_subcommand("solve", "run one lower-level solver");
  solve
      ->add_option("--algo", solve_algo,
                   "dp-tree | cluster-opt | mst | brute-gmstp | brute-gtsp")
      ->required();
  solve->add_option("--instance", instance, "instance file")->required();
  solve->add_option("--tree", tree_arg, "cluster tree edges, e.g. 0-1,1-2,1-3");
  solve->add_option("--tour", tour_arg, "cluster tour, e.g. 0,1,2,3");
  solve->add_option("--nodes", nodes_arg, "one node per cluster, e.g. 0,4,8");

  // evolve
  std::string evolve_algo, evolve_instance;
  std::uint64_t budget = 0, evolve_seed = 0;
  auto* evolve = app.add_subcommand("evolve", "run one (1+1) EA trial");
  evolve->add_option("--algo", evolve_algo, "cluster | tree | tour")->required();
  evolve->add_option("--instance", evolve_instance, "instance file")->required();
  evolve->add_option("--budget", budget, "evaluation budget")->required();
  evolve->add_option("--seed", evolve_seed, "trial seed");

  // experiment
  std::string config_path, records_out, summary_out;
  auto* experiment =
      app.add_subcommand("experiment", "run a seeded multi-trial campaign");
  experiment->add_option("--config", config_path, "key=value config file")
      ->required();
  experiment->add_option("--out", records_out, "records CSV path")->required();
  experiment->add_option("--summary", summary_out, "summary CSV path");

  // verify-oracles
  int count = 100;
  std::uint64_t verify_seed = 1;
  auto* verify =
      app.add_subcommand("verify-oracles", "cross-check decoders vs oracles");
  verify->add_option("--count", count, "number of random cases");
  verify->add_option("--seed", verify_seed, "case generator seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (generate->parsed())
      return run_generate(family, m, sizes, max_cost, seed, out);
    if (solve->parsed())
      return run_solve(solve_algo, instance, tree_arg, tour_arg, nodes_arg);
    if (evolve->parsed())
      return run_evolve(evolve_algo, evolve_instance, budget, evolve_seed);
    if (experiment->parsed())
      return run_experiment_command(config_path, records_out, summary_out);
    if (verify->parsed())
      return verify_oracles(verify_seed, count, std::cout).ok() ? 0 : 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
