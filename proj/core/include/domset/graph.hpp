#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace domset {

// Simple undirected graph, immutable after construction.
// Vertices are dense ids 0..n-1; adjacency lists are sorted.
class Graph {
 public:
  Graph() = default;

  // Validates ids, rejects self-loops, collapses duplicate edges.
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  int edge_count() const { return m_; }
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
  const std::vector<int>& neighbors(int v) const { return adj_.at(static_cast<size_t>(v)); }
  bool has_edge(int u, int v) const;

  // Throws std::logic_error on the empty graph.
  int min_degree() const;
  int max_degree() const;

  // Canonical edge list: one "u v" per line with u < v, lexicographic.
  std::vector<std::pair<int, int>> edges() const;

 private:
  std::vector<std::vector<int>> adj_;
  int m_ = 0;
};

// Parse failure with the offending 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Reads a whitespace-separated edge list: two vertex ids per line, '#'
// comments and blank lines ignored. Ids must be dense: every id in
// 0..max_id has to occur. Duplicate edges collapse; self-loops are errors.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list_file(const std::string& path);

void write_edge_list(const Graph& g, std::ostream& out);

// True iff every vertex is in `set` or adjacent to a member.
// Throws std::out_of_range for bad vertex ids.
bool is_dominating(const Graph& g, const std::vector<int>& set);

}  // namespace domset
