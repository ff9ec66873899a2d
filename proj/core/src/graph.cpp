#include "domset/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace domset {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
  Graph g;
  g.adj_.resize(static_cast<size_t>(n));
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw std::out_of_range("Graph: vertex id out of range");
    }
    if (u == v) throw std::invalid_argument("Graph: self-loop");
    g.adj_[static_cast<size_t>(u)].push_back(v);
    g.adj_[static_cast<size_t>(v)].push_back(u);
  }
  for (auto& list : g.adj_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    g.m_ += static_cast<int>(list.size());
  }
  g.m_ /= 2;
  return g;
}

bool Graph::has_edge(int u, int v) const {
  const auto& list = neighbors(u);
  return std::binary_search(list.begin(), list.end(), v);
}

int Graph::min_degree() const {
  if (adj_.empty()) throw std::logic_error("min_degree: empty graph");
  int best = degree(0);
  for (int v = 1; v < vertex_count(); ++v) best = std::min(best, degree(v));
  return best;
}

int Graph::max_degree() const {
  if (adj_.empty()) throw std::logic_error("max_degree: empty graph");
  int best = degree(0);
  for (int v = 1; v < vertex_count(); ++v) best = std::max(best, degree(v));
  return best;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<size_t>(m_));
  for (int u = 0; u < vertex_count(); ++u) {
    for (int v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;  // already lexicographic: u ascending, adjacency sorted
}

Graph parse_edge_list(std::istream& in) {
  std::vector<std::pair<int, int>> edges;
  std::vector<char> seen;
  int max_id = -1;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r\n\f\v") == std::string::npos) continue;
    std::istringstream tokens(line);
    long u, v;
    if (!(tokens >> u >> v)) throw ParseError(line_no, "expected two vertex ids");
    std::string trailing;
    if (tokens >> trailing) throw ParseError(line_no, "expected exactly two tokens");
    if (u < 0 || v < 0) throw ParseError(line_no, "negative vertex id");
    if (u == v) throw ParseError(line_no, "self-loop on vertex " + std::to_string(u));
    max_id = std::max(max_id, static_cast<int>(std::max(u, v)));
    if (static_cast<size_t>(max_id) >= seen.size()) seen.resize(static_cast<size_t>(max_id) + 1, 0);
    seen[static_cast<size_t>(u)] = seen[static_cast<size_t>(v)] = 1;
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  for (int id = 0; id <= max_id; ++id) {
    if (!seen[static_cast<size_t>(id)]) {
      throw ParseError(line_no, "sparse vertex ids: " + std::to_string(id) +
                                    " never occurs but " + std::to_string(max_id) + " does");
    }
  }
  return Graph::from_edges(max_id + 1, edges);
}

Graph parse_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  return parse_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out) {
  for (const auto& [u, v] : g.edges()) {
    out << u << ' ' << v << '\n';
  }
}

bool is_dominating(const Graph& g, const std::vector<int>& set) {
  const int n = g.vertex_count();
  std::vector<char> covered(static_cast<size_t>(n), 0);
  for (int v : set) {
    if (v < 0 || v >= n) throw std::out_of_range("is_dominating: vertex id out of range");
    covered[static_cast<size_t>(v)] = 1;
    for (int w : g.neighbors(v)) covered[static_cast<size_t>(w)] = 1;
  }
  for (char c : covered) {
    if (!c) return false;
  }
  return true;
}

}  // namespace domset
