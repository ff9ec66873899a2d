#include "domset/oracle.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "domset/generators.hpp"
#include "test_support.hpp"

using namespace domset;
using domset::test::brute_force_gamma;
using domset::test::petersen;

namespace {

Graph relabel(const Graph& g, const std::vector<int>& mapping) {
  std::vector<std::pair<int, int>> edges;
  for (const auto& [u, v] : g.edges()) {
    edges.emplace_back(mapping[static_cast<size_t>(u)], mapping[static_cast<size_t>(v)]);
  }
  return Graph::from_edges(g.vertex_count(), edges);
}

}  // namespace

TEST_CASE("fixed instances") {
  CHECK(exact_domination_number(cycle_graph(4)).gamma == 2);
  for (int n = 1; n <= 8; ++n) {
    CHECK(exact_domination_number(complete_graph(n)).gamma == 1);
  }
  CHECK(exact_domination_number(petersen()).gamma == 3);
  // gamma(C_n) = ceil(n/3)
  CHECK(exact_domination_number(cycle_graph(9)).gamma == 3);
  CHECK(exact_domination_number(cycle_graph(10)).gamma == 4);
}

TEST_CASE("petersen has no dominating pair") {
  // subset enumeration certifies the oracle's answer from a second route
  CHECK(brute_force_gamma(petersen()) == 3);
}

TEST_CASE("witness is a dominating set of the reported size") {
  domset::test::XorShift rng(17);
  for (int trial = 0; trial < 15; ++trial) {
    const Graph g = random_min_degree_graph(8 + rng.below(9), 2 + rng.below(3), rng.below(6),
                                            rng.next());
    const OracleResult result = exact_domination_number(g);
    CHECK(is_dominating(g, result.witness));
    CHECK(static_cast<int>(result.witness.size()) == result.gamma);
    CHECK(result.nodes_explored >= 1);
  }
}

TEST_CASE("oracle agrees with subset enumeration") {
  domset::test::XorShift rng(31);
  for (int trial = 0; trial < 12; ++trial) {
    const Graph g = random_min_degree_graph(6 + rng.below(7), 1 + rng.below(3), rng.below(4),
                                            rng.next());
    CAPTURE(trial);
    CHECK(exact_domination_number(g).gamma == brute_force_gamma(g));
  }
}

TEST_CASE("gamma is invariant under relabeling") {
  domset::test::XorShift rng(53);
  for (int trial = 0; trial < 8; ++trial) {
    const Graph g = random_min_degree_graph(12, 3, rng.below(5), rng.next());
    std::vector<int> mapping(12);
    std::iota(mapping.begin(), mapping.end(), 0);
    for (int i = 11; i > 0; --i) std::swap(mapping[static_cast<size_t>(i)],
                                           mapping[static_cast<size_t>(rng.below(i + 1))]);
    CHECK(exact_domination_number(relabel(g, mapping)).gamma == exact_domination_number(g).gamma);
  }
}

TEST_CASE("vertex limit refuses instead of approximating") {
  const Graph c25 = cycle_graph(25);
  CHECK_THROWS_WITH_AS(exact_domination_number(c25), doctest::Contains("exceed"),
                       std::invalid_argument);
  CHECK(exact_domination_number(c25, 25).gamma == 9);
  CHECK_THROWS_AS(exact_domination_number(cycle_graph(65), 100), std::invalid_argument);
}

TEST_CASE("empty graph") {
  const OracleResult result = exact_domination_number(Graph());
  CHECK(result.gamma == 0);
  CHECK(result.witness.empty());
}
