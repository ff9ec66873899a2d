#include "domset/generators.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace domset {

namespace {

using Edge = std::pair<int, int>;

Edge ordered(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

}  // namespace

Graph complete_graph(int n) {
  if (n < 1) throw std::invalid_argument("complete_graph: n must be >= 1");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph::from_edges(n, edges);
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle_graph: n must be >= 3");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) edges.push_back(ordered(u, (u + 1) % n));
  return Graph::from_edges(n, edges);
}

Graph complete_bipartite(int p, int q) {
  if (p < 1 || q < 1) throw std::invalid_argument("complete_bipartite: sides must be >= 1");
  std::vector<Edge> edges;
  for (int u = 0; u < p; ++u) {
    for (int v = 0; v < q; ++v) edges.emplace_back(u, p + v);
  }
  return Graph::from_edges(p + q, edges);
}

Graph circulant_graph(int n, const std::vector<int>& offsets) {
  if (n < 3) throw std::invalid_argument("circulant_graph: n must be >= 3");
  std::set<int> unique_offsets;
  for (int offset : offsets) {
    if (offset < 1 || offset > n / 2) {
      throw std::invalid_argument("circulant_graph: offsets must lie in 1..n/2");
    }
    if (!unique_offsets.insert(offset).second) {
      throw std::invalid_argument("circulant_graph: duplicate offset");
    }
  }
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int offset : unique_offsets) edges.push_back(ordered(u, (u + offset) % n));
  }
  return Graph::from_edges(n, edges);
}

Graph random_regular_graph(int n, int degree, std::uint64_t seed, int max_attempts) {
  if (n < 1 || degree < 0 || degree >= n) {
    throw std::invalid_argument("random_regular_graph: requires 0 <= degree < n");
  }
  if ((static_cast<long long>(n) * degree) % 2 != 0) {
    throw std::invalid_argument("random_regular_graph: n*degree must be even");
  }
  std::mt19937_64 rng(seed);

  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    std::vector<int> stubs;
    stubs.reserve(static_cast<size_t>(n) * degree);
    for (int v = 0; v < n; ++v) {
      for (int k = 0; k < degree; ++k) stubs.push_back(v);
    }
    std::shuffle(stubs.begin(), stubs.end(), rng);

    std::set<Edge> edge_set;
    bool stuck = false;
    while (!stubs.empty() && !stuck) {
      const int u = stubs.back();
      stubs.pop_back();
      // draw a partner stub; redraw on loops and parallel edges
      bool paired = false;
      for (int redraw = 0; redraw < 2 * n && !paired; ++redraw) {
        std::uniform_int_distribution<size_t> pick(0, stubs.size() - 1);
        const size_t i = pick(rng);
        const int w = stubs[i];
        if (w != u && !edge_set.count(ordered(u, w))) {
          edge_set.insert(ordered(u, w));
          stubs[i] = stubs.back();
          stubs.pop_back();
          paired = true;
        }
      }
      if (!paired) {
        // exhaustive scan before declaring the attempt dead
        for (size_t i = 0; i < stubs.size() && !paired; ++i) {
          const int w = stubs[i];
          if (w != u && !edge_set.count(ordered(u, w))) {
            edge_set.insert(ordered(u, w));
            stubs[i] = stubs.back();
            stubs.pop_back();
            paired = true;
          }
        }
        stuck = !paired;
      }
    }
    if (!stuck) {
      return Graph::from_edges(n, {edge_set.begin(), edge_set.end()});
    }
  }
  throw std::runtime_error("random_regular_graph: retry cap exceeded");
}

Graph random_min_degree_graph(int n, int min_deg, int extra, std::uint64_t seed) {
  if (n < 1 || min_deg < 0 || min_deg >= n) {
    throw std::invalid_argument("random_min_degree_graph: requires 0 <= min_deg < n");
  }
  if (extra < 0) throw std::invalid_argument("random_min_degree_graph: negative extra");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, n - 1);

  std::set<Edge> edge_set;
  std::vector<int> degree(static_cast<size_t>(n), 0);
  const long long all_pairs = static_cast<long long>(n) * (n - 1) / 2;

  auto add_random_edge = [&]() {
    while (true) {
      const int u = pick(rng);
      const int v = pick(rng);
      if (u == v) continue;
      if (!edge_set.insert(ordered(u, v)).second) continue;
      ++degree[static_cast<size_t>(u)];
      ++degree[static_cast<size_t>(v)];
      return;
    }
  };

  while (*std::min_element(degree.begin(), degree.end()) < min_deg) {
    add_random_edge();
  }
  for (int k = 0; k < extra; ++k) {
    if (static_cast<long long>(edge_set.size()) >= all_pairs) break;  // graph is complete
    add_random_edge();
  }
  return Graph::from_edges(n, {edge_set.begin(), edge_set.end()});
}

}  // namespace domset
