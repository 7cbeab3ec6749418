#include "detideal/graph.hpp"

#include <bit>

namespace detideal {

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxGraphVertices) throw std::invalid_argument("graph order must be in 0..62");
  rows_.assign(static_cast<std::size_t>(n), 0);
}

Graph::Graph(int n, std::initializer_list<std::pair<int, int>> edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
}

int Graph::size() const noexcept {
  int m = 0;
  for (uint64_t r : rows_) m += std::popcount(r);
  return m / 2;
}

int Graph::degree(int v) const noexcept { return std::popcount(rows_[static_cast<std::size_t>(v)]); }

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("loops are not allowed");
  rows_[static_cast<std::size_t>(u)] |= uint64_t{1} << v;
  rows_[static_cast<std::size_t>(v)] |= uint64_t{1} << u;
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  rows_[static_cast<std::size_t>(u)] &= ~(uint64_t{1} << v);
  rows_[static_cast<std::size_t>(v)] &= ~(uint64_t{1} << u);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u) {
    for (int v = u + 1; v < n_; ++v) {
      if (has_edge(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

bool Graph::is_connected() const noexcept {
  if (n_ <= 1) return true;
  uint64_t seen = 1, frontier = 1;
  while (frontier) {
    uint64_t next = 0;
    for (uint64_t f = frontier; f; f &= f - 1) next |= rows_[static_cast<std::size_t>(std::countr_zero(f))];
    frontier = next & ~seen;
    seen |= next;
  }
  return std::popcount(seen) == n_;
}

bool Graph::is_regular() const noexcept {
  for (int v = 1; v < n_; ++v) {
    if (degree(v) != degree(0)) return false;
  }
  return true;
}

Graph Graph::relabel(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != n_) throw std::invalid_argument("permutation has the wrong length");
  Graph h(n_);
  for (auto [u, v] : edges()) h.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
  return h;
}

Graph parse_graph6(std::string_view s) {
  constexpr std::string_view header = ">>graph6<<";
  if (s.substr(0, header.size()) == header) s.remove_prefix(header.size());
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
  if (s.empty()) throw ParseError("empty graph6 string");
  for (char c : s) {
    if (c < 63 || c > 126) throw ParseError("invalid graph6 character in \"" + std::string(s) + "\"");
  }
  if (s[0] == 126) throw ParseError("graph6 orders above 62 are not supported");
  const int n = s[0] - 63;
  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (s.size() != 1 + bytes) {
    throw ParseError("graph6 length mismatch: expected " + std::to_string(1 + bytes) + " bytes for n=" +
                     std::to_string(n) + ", got " + std::to_string(s.size()));
  }
  Graph g(n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      int byte = s[1 + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (bits % 6 != 0) {
    int last = s.back() - 63;
    int pad = static_cast<int>(6 - bits % 6);
    if (last & ((1 << pad) - 1)) throw ParseError("graph6 padding bits are not zero");
  }
  return g;
}

std::string write_graph6(const Graph& g) {
  const int n = g.order();
  std::string out(1, static_cast<char>(n + 63));
  int acc = 0, filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

std::vector<Graph> read_graph6_lines(std::string_view text) {
  std::vector<Graph> out;
  std::size_t lineno = 0;
  while (!text.empty()) {
    std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    ++lineno;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
    if (line.empty()) continue;
    try {
      out.push_back(parse_graph6(line));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph star_graph(int n) {
  if (n < 1) throw std::invalid_argument("star needs at least one vertex");
  Graph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(0, v);
  return g;
}

Graph complete_bipartite_graph(int a, int b) {
  if (a < 1 || b < 1) throw std::invalid_argument("complete bipartite parts must be positive");
  Graph g(a + b);
  for (int u = 0; u < a; ++u) {
    for (int v = a; v < a + b; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(v - 1, v);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least three vertices");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph make_family(std::string_view kind, const std::vector<int>& params) {
  auto need = [&](std::size_t k) {
    if (params.size() != k) throw std::invalid_argument(std::string(kind) + " takes " + std::to_string(k) + " parameter(s)");
    for (int p : params) {
      if (p < 1) throw std::invalid_argument("family parameters must be positive");
    }
  };
  if (kind == "complete") {
    need(1);
    return complete_graph(params[0]);
  }
  if (kind == "star") {
    need(1);
    return star_graph(params[0]);
  }
  if (kind == "complete_bipartite") {
    need(2);
    return complete_bipartite_graph(params[0], params[1]);
  }
  if (kind == "path") {
    need(1);
    return path_graph(params[0]);
  }
  if (kind == "cycle") {
    need(1);
    return cycle_graph(params[0]);
  }
  throw std::invalid_argument("unknown graph family '" + std::string(kind) + "'");
}

}  // namespace detideal
