#pragma once

#include <cstdint>
#include <vector>

#include "domset/graph.hpp"

namespace domset {

struct OracleResult {
  int gamma = 0;
  std::vector<int> witness;  // one minimum dominating set, sorted
  std::uint64_t nodes_explored = 0;
};

// Exact domination number by branch and bound over vertex inclusion.
// Vertices are branched in descending degree order; a branch is cut when
// |partial| + ceil(undominated / (max_degree + 1)) cannot beat the
// incumbent, which is seeded with a greedy cover. Refuses n > vertex_limit
// rather than approximating (and supports at most 64 vertices).
OracleResult exact_domination_number(const Graph& g, int vertex_limit = 24);

}  // namespace domset
