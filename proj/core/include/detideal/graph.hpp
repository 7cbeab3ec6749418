#pragma once

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace detideal {

inline constexpr int kMaxGraphVertices = 62;

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DisconnectedGraph : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Simple undirected graph on vertices 0..n-1, adjacency stored as bit rows.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::initializer_list<std::pair<int, int>> edges);
  Graph(int n, const std::vector<std::pair<int, int>>& edges);

  int order() const noexcept { return n_; }
  int size() const noexcept;
  bool has_edge(int u, int v) const noexcept { return (rows_[static_cast<std::size_t>(u)] >> v) & 1u; }
  uint64_t neighbors(int v) const noexcept { return rows_[static_cast<std::size_t>(v)]; }
  int degree(int v) const noexcept;
  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  std::vector<std::pair<int, int>> edges() const;

  bool is_connected() const noexcept;
  bool is_regular() const noexcept;

  /// Vertex relabeling: vertex v of this graph becomes perm[v].
  Graph relabel(const std::vector<int>& perm) const;

  friend bool operator==(const Graph& a, const Graph& b) noexcept { return a.n_ == b.n_ && a.rows_ == b.rows_; }

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::vector<uint64_t> rows_;
};

/// Decodes a graph6 string (optional ">>graph6<<" header, trailing newline ignored).
/// Throws ParseError on malformed input.
Graph parse_graph6(std::string_view s);
std::string write_graph6(const Graph& g);

/// Reads newline-separated graph6 lines; blank lines and a header are skipped.
std::vector<Graph> read_graph6_lines(std::string_view text);

Graph complete_graph(int n);
/// Star on n vertices: center 0 joined to 1..n-1.
Graph star_graph(int n);
/// Parts {0..a-1} and {a..a+b-1}.
Graph complete_bipartite_graph(int a, int b);
Graph path_graph(int n);
Graph cycle_graph(int n);

/// Named family constructor: "complete" (n), "star" (n), "complete_bipartite" (a, b),
/// "path" (n), "cycle" (n). Throws std::invalid_argument on bad names or parameters.
Graph make_family(std::string_view kind, const std::vector<int>& params);

}  // namespace detideal
