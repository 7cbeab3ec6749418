#include "detideal/enumerate.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

namespace detideal {

namespace {

// Iterated degree refinement (1-WL). Colors are ranks of sorted signatures, so
// they depend only on the isomorphism class of (g, initial colors).
std::vector<int> refine(const Graph& g, std::vector<int> color) {
  const int n = g.order();
  for (;;) {
    std::vector<std::vector<int>> sig(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      auto& s = sig[static_cast<std::size_t>(v)];
      s.push_back(color[static_cast<std::size_t>(v)]);
      std::vector<int> nb;
      for (uint64_t r = g.neighbors(v); r; r &= r - 1) nb.push_back(color[static_cast<std::size_t>(std::countr_zero(r))]);
      std::sort(nb.begin(), nb.end());
      s.insert(s.end(), nb.begin(), nb.end());
    }
    std::vector<std::vector<int>> uniq = sig;
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    std::vector<int> next(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      next[static_cast<std::size_t>(v)] =
          static_cast<int>(std::lower_bound(uniq.begin(), uniq.end(), sig[static_cast<std::size_t>(v)]) - uniq.begin());
    }
    int before = *std::max_element(color.begin(), color.end());
    int after = *std::max_element(next.begin(), next.end());
    color = std::move(next);
    if (after == before) return color;
  }
}

struct Search {
  const Graph& g;
  int n;
  std::vector<int> slot_color;  // color required at each position
  std::vector<int> color;
  std::array<int, kMaxCanonicalVertices> order{};  // vertex at each position
  uint64_t placed = 0;
  uint64_t best = ~uint64_t{0};
  int best_bits = 0;
  std::array<int, kMaxCanonicalVertices> best_order{};
  bool have_best = false;

  // True twins or false twins: swapping them fixes every other vertex.
  bool twins(int u, int v) const {
    uint64_t mu = g.neighbors(u) & ~(uint64_t{1} << v);
    uint64_t mv = g.neighbors(v) & ~(uint64_t{1} << u);
    return mu == mv;
  }

  void dfs(int pos, uint64_t code, int bits) {
    if (have_best) {
      uint64_t best_prefix = best >> (best_bits - bits);
      if (code > best_prefix) return;
      if (code < best_prefix) have_best = false;
    }
    if (pos == n) {
      best = code;
      best_bits = bits;
      best_order = order;
      have_best = true;
      return;
    }
    std::array<int, kMaxCanonicalVertices> tried{};
    int ntried = 0;
    for (int v = 0; v < n; ++v) {
      if ((placed >> v) & 1) continue;
      if (color[static_cast<std::size_t>(v)] != slot_color[static_cast<std::size_t>(pos)]) continue;
      bool skip = false;
      for (int t = 0; t < ntried && !skip; ++t) skip = twins(tried[static_cast<std::size_t>(t)], v);
      if (skip) continue;
      tried[static_cast<std::size_t>(ntried++)] = v;
      uint64_t c = code;
      for (int i = 0; i < pos; ++i) c = (c << 1) | (g.has_edge(order[static_cast<std::size_t>(i)], v) ? 1u : 0u);
      order[static_cast<std::size_t>(pos)] = v;
      placed |= uint64_t{1} << v;
      dfs(pos + 1, c, bits + pos);
      placed &= ~(uint64_t{1} << v);
    }
  }
};

}  // namespace

std::vector<int> canonical_labeling(const Graph& g) {
  const int n = g.order();
  if (n > kMaxCanonicalVertices) throw std::invalid_argument("canonical labeling supports at most 11 vertices");
  std::vector<int> init(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) init[static_cast<std::size_t>(v)] = g.degree(v);
  Search s{g, n, {}, n ? refine(g, init) : std::vector<int>{}};
  s.slot_color = s.color;
  std::sort(s.slot_color.begin(), s.slot_color.end());
  s.dfs(0, 0, 0);
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) perm[static_cast<std::size_t>(s.best_order[static_cast<std::size_t>(p)])] = p;
  return perm;
}

uint64_t canonical_code(const Graph& g) {
  Graph c = canonical_form(g);
  uint64_t code = 0;
  for (int j = 1; j < c.order(); ++j) {
    for (int i = 0; i < j; ++i) code = (code << 1) | (c.has_edge(i, j) ? 1u : 0u);
  }
  return code;
}

Graph canonical_form(const Graph& g) { return g.relabel(canonical_labeling(g)); }

Graph graph_from_code(int n, uint64_t code) {
  Graph g(n);
  int bit = n * (n - 1) / 2;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      --bit;
      if ((code >> bit) & 1) g.add_edge(i, j);
    }
  }
  return g;
}

namespace {

std::vector<Graph> extend_by_one_vertex(const std::vector<Graph>& smaller, int n) {
  std::set<uint64_t> codes;
  for (const Graph& h : smaller) {
    const auto edges = h.edges();
    for (uint64_t mask = 0; mask < (uint64_t{1} << (n - 1)); ++mask) {
      Graph g(n, edges);
      for (int v = 0; v < n - 1; ++v) {
        if ((mask >> v) & 1) g.add_edge(v, n - 1);
      }
      codes.insert(canonical_code(g));
    }
  }
  std::vector<Graph> out;
  out.reserve(codes.size());
  for (uint64_t c : codes) out.push_back(graph_from_code(n, c));
  return out;
}

}  // namespace

std::vector<Graph> enumerate_all(int n) {
  if (n < 1 || n > kMaxGeneratedVertices) throw std::invalid_argument("built-in generator supports 1 <= n <= 8");
  static std::mutex mu;
  static std::map<int, std::vector<Graph>> cache;
  std::lock_guard lock(mu);
  if (cache.empty()) cache[1] = {Graph(1)};
  for (int k = 2; k <= n; ++k) {
    if (!cache.count(k)) cache[k] = extend_by_one_vertex(cache[k - 1], k);
  }
  return cache[n];
}

std::vector<Graph> enumerate_connected(int n) {
  std::vector<Graph> out;
  for (Graph& g : enumerate_all(n)) {
    if (g.is_connected()) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace detideal
