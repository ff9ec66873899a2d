#pragma once

#include <cstdint>
#include <vector>

#include "domset/graph.hpp"

namespace domset {

Graph complete_graph(int n);
Graph cycle_graph(int n);  // n >= 3
Graph complete_bipartite(int p, int q);

// Vertex i is adjacent to i +- offset (mod n) for each offset.
// Offsets must be distinct values in 1..n/2.
Graph circulant_graph(int n, const std::vector<int>& offsets);

// Uniform-stub configuration model; pairs that would create a loop or a
// parallel edge are redrawn, with a full restart when a stub gets stuck.
// Deterministic for a fixed seed. Requires n*degree even and degree < n.
Graph random_regular_graph(int n, int degree, std::uint64_t seed, int max_attempts = 1000);

// Adds uniformly random missing edges until min degree >= min_deg, then
// `extra` more. Deterministic for a fixed seed.
Graph random_min_degree_graph(int n, int min_deg, int extra, std::uint64_t seed);

}  // namespace domset
