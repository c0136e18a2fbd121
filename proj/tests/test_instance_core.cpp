#include <stdexcept>

#include "doctest.h"
#include "gctsp/clustered_graph.hpp"
#include "gctsp/generators.hpp"
#include "gctsp/instance_io.hpp"
#include "support.hpp"

using namespace gctsp;

namespace {

void check_basic_invariants(const ClusteredGraph& g) {
  const int n = g.node_count();
  std::vector<int> cluster_sizes(g.cluster_count(), 0);
  for (int v = 0; v < n; ++v) {
    CHECK(g.cost(v, v).is_infinite());
    ++cluster_sizes[g.cluster_of(v)];
    for (int u = v + 1; u < n; ++u) CHECK(g.cost(u, v) == g.cost(v, u));
  }
  int total = 0;
  for (int c = 0; c < g.cluster_count(); ++c) {
    CHECK(cluster_sizes[c] > 0);
    CHECK(static_cast<int>(g.cluster_members(c).size()) == cluster_sizes[c]);
    total += cluster_sizes[c];
  }
  CHECK(total == n);
}

}  // namespace

TEST_CASE("cost arithmetic and ordering") {
  const Cost two = Cost::finite(2);
  const Cost three = Cost::finite(3);
  CHECK(two + three == Cost::finite(5));
  CHECK(two < three);
  CHECK(two + Cost::infinite() == Cost::infinite());
  CHECK(Cost::infinite() + Cost::infinite() == Cost::infinite());
  CHECK(three < Cost::infinite());
  CHECK(Cost::infinite() <= Cost::infinite());
}

TEST_CASE("gs trap instance") {
  const ClusteredGraph g = generate_gs(4);
  check_basic_invariants(g);
  CHECK(g.node_count() == 16);
  CHECK(g.cluster_count() == 4);
  CHECK(g.scale() == 1);
  REQUIRE(g.known_optimum().has_value());
  CHECK(*g.known_optimum() == Cost::finite(3));

  // Node c*4 is cluster c's optimal node; cluster 0 is central.
  CHECK(g.cost(4, 0) == Cost::finite(1));     // optimal periph <-> optimal central
  CHECK(g.cost(5, 0) == Cost::finite(256));   // subopt periph <-> optimal central
  CHECK(g.cost(4, 1) == Cost::finite(16));    // optimal periph <-> subopt central
  CHECK(g.cost(5, 1) == Cost::finite(2));     // subopt periph <-> subopt central
  CHECK(g.cost(4, 8).is_infinite());          // peripheral pairs absent
  CHECK(g.cost(0, 1).is_infinite());          // intra-cluster absent

  SUBCASE("all-suboptimal selection costs 2(m-1) by tree enumeration") {
    NodeSelection all_suboptimal{{1, 5, 9, 13}};
    CHECK(testing::mst_cost_by_tree_enumeration(g, all_suboptimal) ==
          Cost::finite(6));
  }

  SUBCASE("the cluster graph is a star with exactly one spanning tree") {
    const ClusterGraph h = cluster_graph(g);
    CHECK(h.edges() == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {0, 3}});
    CHECK(testing::enumerate_spanning_trees(h.edges(), 4).size() == 1);
  }

  CHECK_THROWS_AS(generate_gs(3), std::invalid_argument);
}

TEST_CASE("gg-mst trap instance") {
  const ClusteredGraph g = generate_gg_mst(4);
  check_basic_invariants(g);
  CHECK(g.node_count() == 5);
  CHECK(g.cluster_count() == 4);
  CHECK(g.scale() == 8);
  REQUIRE(g.known_optimum().has_value());
  CHECK(*g.known_optimum() == Cost::finite(22));  // 2.75 before scaling

  CHECK(g.cost(0, 3) == Cost::finite(8));   // first node of cluster 0 at true 1
  CHECK(g.cost(2, 3) == Cost::finite(9));   // cluster 1's node at true 1 + 1/2m
  CHECK(g.cost(1, 2) == Cost::finite(4));   // the bridge at true 1/2
  CHECK(g.cost(0, 2).is_infinite());        // no direct cluster0/cluster1 link

  SUBCASE("cluster graph edges") {
    const ClusterGraph h = cluster_graph(g);
    CHECK(h.edges() == std::vector<std::pair<int, int>>{
                           {0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
  }

  SUBCASE("optimum over trees x cluster-0 choices by enumeration") {
    const ClusterGraph h = cluster_graph(g);
    Cost best = Cost::infinite();
    Cost best_without_bridge = Cost::infinite();
    for (const auto& tree : testing::enumerate_spanning_trees(h.edges(), 4)) {
      const bool has_bridge =
          std::find(tree.begin(), tree.end(), std::make_pair(0, 1)) !=
          tree.end();
      testing::for_each_selection(g, [&](const NodeSelection& selection) {
        Cost total = Cost::finite(0);
        for (auto [a, b] : tree)
          total += g.cost(selection.chosen[a], selection.chosen[b]);
        if (total < best) best = total;
        if (!has_bridge && total < best_without_bridge)
          best_without_bridge = total;
      });
    }
    CHECK(best == Cost::finite(22));
    // The optimum needs the {0,1} cluster edge; without it 25 is the best.
    CHECK(best_without_bridge == Cost::finite(25));
  }

  CHECK_THROWS_AS(generate_gg_mst(3), std::invalid_argument);
}

TEST_CASE("gg-tsp trap instance") {
  const ClusteredGraph g = generate_gg_tsp(4);
  check_basic_invariants(g);
  CHECK(g.node_count() == 8);
  CHECK(g.scale() == 4);
  REQUIRE(g.known_optimum().has_value());
  CHECK(*g.known_optimum() == Cost::finite(4));  // true cost 1

  CHECK(g.cost(0, 2) == Cost::finite(1));    // consecutive black pair, true 1/m
  CHECK(g.cost(6, 0) == Cost::finite(1));    // the wrap-around black pair
  CHECK(g.cost(1, 3) == Cost::finite(8));    // consecutive white pair, true 2
  CHECK(g.cost(1, 5) == Cost::finite(4));    // other white pair, true 1
  CHECK(g.cost(0, 3) == Cost::finite(64));   // black/white, true m^2
  CHECK(g.cost(0, 4) == Cost::finite(64));   // non-consecutive black pair
  CHECK(g.cost(0, 1).is_infinite());

  CHECK_THROWS_AS(generate_gg_tsp(3), std::invalid_argument);
}

TEST_CASE("random instances") {
  SUBCASE("m=2 with singleton clusters and max_cost 1 is forced") {
    const ClusteredGraph g = generate_random(2, {1, 1}, 1, 99);
    check_basic_invariants(g);
    CHECK(g.cost(0, 1) == Cost::finite(1));
    CHECK_FALSE(g.known_optimum().has_value());
  }
  SUBCASE("same seed gives identical instances") {
    const ClusteredGraph a = generate_random(4, {3, 3, 3, 3}, 100, 7);
    const ClusteredGraph b = generate_random(4, {3, 3, 3, 3}, 100, 7);
    CHECK(a == b);
    const ClusteredGraph c = generate_random(4, {3, 3, 3, 3}, 100, 8);
    CHECK_FALSE(a == c);
  }
  SUBCASE("fully finite instance contracts to the complete cluster graph") {
    const ClusteredGraph g = generate_random(4, {2, 2, 2, 2}, 10, 1);
    const ClusterGraph h = cluster_graph(g);
    CHECK(h.edges().size() == 6);
    CHECK(h.connected());
  }
  CHECK_THROWS_AS(generate_random(1, {2}, 5, 0), std::invalid_argument);
  CHECK_THROWS_AS(generate_random(2, {1, 0}, 5, 0), std::invalid_argument);
  CHECK_THROWS_AS(generate_random(2, {1, 1}, 0, 0), std::invalid_argument);
}

TEST_CASE("instance text round-trips") {
  SUBCASE("type -> text -> type") {
    for (const ClusteredGraph& g :
         {generate_gs(4), generate_gg_mst(5), generate_gg_tsp(4),
          generate_random(3, {2, 1, 3}, 20, 5)}) {
      CHECK(parse_instance(write_instance(g)) == g);
    }
  }
  SUBCASE("canonical text -> type -> text") {
    const std::string text = write_instance(generate_gg_mst(4));
    CHECK(write_instance(parse_instance(text)) == text);
  }
  SUBCASE("missing pairs parse as INFINITE") {
    const ClusteredGraph g = parse_instance(
        "gctsp 1\n3 3 1 ?\nclusters 0 1 2\ne 0 1 7\n");
    CHECK(g.cost(0, 1) == Cost::finite(7));
    CHECK(g.cost(0, 2).is_infinite());
    CHECK(g.cost(1, 2).is_infinite());
  }
  SUBCASE("comments and blank lines are ignored") {
    const ClusteredGraph g = parse_instance(
        "# generated\ngctsp 1\n\n2 2 1 3\nclusters 0 1\n# edge\ne 0 1 3\n");
    CHECK(*g.known_optimum() == Cost::finite(3));
  }
}

TEST_CASE("parse errors carry line numbers") {
  const auto line_of = [](const std::string& text) {
    try {
      parse_instance(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  CHECK(line_of("gctsp 2\n2 2 1 ?\nclusters 0 1\n") == 1);   // malformed header
  CHECK(line_of("gctsp 1\n2 2\nclusters 0 1\n") == 2);       // bad meta line
  CHECK(line_of("gctsp 1\n3 2 1 ?\nclusters 0 1\n") == 3);   // node without cluster
  CHECK(line_of("gctsp 1\n2 2 1 ?\nclusters 0 0\n") == 3);   // empty cluster
  CHECK(line_of("gctsp 1\n2 2 1 ?\nclusters 0 1\ne 1 0 5\n") == 4);  // u >= v
  CHECK(line_of("gctsp 1\n2 2 1 ?\nclusters 0 1\ne 0 1 5\ne 0 1 6\n") ==
        5);  // duplicate edge
  CHECK(line_of("gctsp 1\n2 2 1 ?\nclusters 0 1\nx 0 1 5\n") == 4);  // directive
}
