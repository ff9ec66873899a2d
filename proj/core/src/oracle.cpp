#include "domset/oracle.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace domset {

namespace {

using Mask = std::uint64_t;

struct Searcher {
  int n = 0;
  Mask full = 0;
  int cover_step = 0;                // max_degree + 1
  std::vector<int> order;            // descending degree
  std::vector<Mask> closed;          // closed neighborhood masks
  std::vector<int> undecided_cover;  // per vertex: undecided members of N[v]
  std::vector<int> best;             // incumbent, as vertex ids
  std::vector<int> partial;
  std::uint64_t nodes = 0;

  void search(int idx, Mask dominated, int count) {
    ++nodes;
    if (dominated == full) {
      if (count < static_cast<int>(best.size())) best = partial;
      return;
    }
    if (idx == n) return;
    const int undominated = n - std::popcount(dominated);
    const int lower = count + (undominated + cover_step - 1) / cover_step;
    if (lower >= static_cast<int>(best.size())) return;

    const int v = order[static_cast<size_t>(idx)];

    // include v
    partial.push_back(v);
    search(idx + 1, dominated | closed[static_cast<size_t>(v)], count + 1);
    partial.pop_back();

    // exclude v: every undominated vertex in N[v] must keep a potential
    // dominator among the still-undecided vertices
    bool feasible = true;
    Mask nv = closed[static_cast<size_t>(v)];
    for (Mask rest = nv; rest;) {
      const int u = std::countr_zero(rest);
      rest &= rest - 1;
      if (--undecided_cover[static_cast<size_t>(u)] == 0 && !(dominated >> u & 1)) {
        feasible = false;
      }
    }
    if (feasible) search(idx + 1, dominated, count);
    for (Mask rest = nv; rest;) {
      const int u = std::countr_zero(rest);
      rest &= rest - 1;
      ++undecided_cover[static_cast<size_t>(u)];
    }
  }
};

std::vector<int> greedy_cover(const Graph& g, const std::vector<Mask>& closed, Mask full) {
  std::vector<int> cover;
  Mask dominated = 0;
  while (dominated != full) {
    int best_v = -1;
    int best_new = -1;
    for (int v = 0; v < g.vertex_count(); ++v) {
      const int fresh = std::popcount(closed[static_cast<size_t>(v)] & ~dominated);
      if (fresh > best_new) {
        best_new = fresh;
        best_v = v;
      }
    }
    cover.push_back(best_v);
    dominated |= closed[static_cast<size_t>(best_v)];
  }
  return cover;
}

}  // namespace

OracleResult exact_domination_number(const Graph& g, int vertex_limit) {
  const int n = g.vertex_count();
  if (n > vertex_limit) {
    throw std::invalid_argument("exact_domination_number: " + std::to_string(n) +
                                " vertices exceed the limit of " + std::to_string(vertex_limit) +
                                "; raise vertex_limit to search anyway");
  }
  if (n > 64) {
    throw std::invalid_argument("exact_domination_number: supports at most 64 vertices");
  }
  if (n == 0) return {0, {}, 1};

  Searcher s;
  s.n = n;
  s.full = n == 64 ? ~Mask(0) : (Mask(1) << n) - 1;
  s.cover_step = g.max_degree() + 1;
  s.closed.resize(static_cast<size_t>(n));
  s.undecided_cover.resize(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) {
    Mask m = Mask(1) << v;
    for (int w : g.neighbors(v)) m |= Mask(1) << w;
    s.closed[static_cast<size_t>(v)] = m;
    s.undecided_cover[static_cast<size_t>(v)] = g.degree(v) + 1;
  }
  s.order.resize(static_cast<size_t>(n));
  std::iota(s.order.begin(), s.order.end(), 0);
  std::stable_sort(s.order.begin(), s.order.end(),
                   [&g](int x, int y) { return g.degree(x) > g.degree(y); });

  s.best = greedy_cover(g, s.closed, s.full);
  s.search(0, 0, 0);

  OracleResult result;
  result.gamma = static_cast<int>(s.best.size());
  result.witness = std::move(s.best);
  std::sort(result.witness.begin(), result.witness.end());
  result.nodes_explored = s.nodes;
  return result;
}

}  // namespace domset
