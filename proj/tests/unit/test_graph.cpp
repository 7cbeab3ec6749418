#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "detideal/enumerate.hpp"
#include "detideal/graph.hpp"
#include "detideal/matrix.hpp"

using namespace detideal;

namespace {

Graph random_graph(std::mt19937& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

// Oracle: try every bijection.
bool brute_force_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return false;
  std::vector<int> perm(static_cast<std::size_t>(g.order()));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (g.relabel(perm) == h) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace

TEST(Graph6, DecodesExamples) {
  Graph g = parse_graph6("Dt_");
  EXPECT_EQ(g.order(), 5);
  EXPECT_EQ(g.edges(), (std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {0, 3}, {0, 4}, {2, 3}}));
  Graph k1 = parse_graph6("@");
  EXPECT_EQ(k1.order(), 1);
  EXPECT_EQ(k1.size(), 0);
  EXPECT_EQ(parse_graph6("C~"), complete_graph(4));
  EXPECT_EQ(parse_graph6(">>graph6<<C~\n"), complete_graph(4));
}

TEST(Graph6, EncodesExamples) {
  EXPECT_EQ(write_graph6(Graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {2, 3}})), "Dt_");
  EXPECT_EQ(write_graph6(Graph(1)), "@");
  EXPECT_EQ(write_graph6(complete_graph(4)), "C~");
}

TEST(Graph6, RejectsMalformedInput) {
  EXPECT_THROW(parse_graph6(""), ParseError);
  EXPECT_THROW(parse_graph6("D"), ParseError);
  EXPECT_THROW(parse_graph6("Dt_x"), ParseError);
  EXPECT_THROW(parse_graph6("D\x01_"), ParseError);
  EXPECT_THROW(parse_graph6("Dt`"), ParseError);  // nonzero padding bit
  EXPECT_THROW(parse_graph6("~??"), ParseError);
}

TEST(Graph6Properties, RoundTrip) {
  std::mt19937 rng(1);
  for (int iter = 0; iter < 500; ++iter) {
    int n = 1 + iter % 62;
    Graph g = random_graph(rng, n, 0.3);
    EXPECT_EQ(parse_graph6(write_graph6(g)), g);
  }
}

TEST(DistanceMatrix, Examples) {
  EXPECT_EQ(distance_matrix(path_graph(3)), int_matrix({{0, 1, 2}, {1, 0, 1}, {2, 1, 0}}));
  EXPECT_EQ(distance_matrix(complete_graph(4)), int_matrix({{0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, 1}, {1, 1, 1, 0}}));
  EXPECT_THROW(distance_matrix(Graph(2)), DisconnectedGraph);
}

TEST(BuildMatrix, Examples) {
  for (int n = 1; n <= 6; ++n) {
    EXPECT_EQ(build_matrix(complete_graph(n), MatrixKind::DistLap), build_matrix(complete_graph(n), MatrixKind::Laplacian));
  }
  IntMatrix l = build_matrix(complete_bipartite_graph(3, 3), MatrixKind::Laplacian);
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      long expect = i == j ? 3 : ((i < 3) != (j < 3) ? -1 : 0);
      EXPECT_EQ(l(i, j), Integer(expect));
    }
  }
  // P3 with its center relabeled to vertex 1 is K_{1,2} drawn as a path.
  EXPECT_EQ(build_matrix(path_graph(3), MatrixKind::DistLap), int_matrix({{3, -1, -2}, {-1, 2, -1}, {-2, -1, 3}}));
  EXPECT_EQ(build_matrix(star_graph(3), MatrixKind::DistLap), int_matrix({{2, -1, -1}, {-1, 3, -2}, {-1, -2, 3}}));
  EXPECT_THROW(build_matrix(Graph(3, {{0, 1}}), MatrixKind::DistLap), DisconnectedGraph);
}

TEST(CharMatrix, Examples) {
  ZPolyMatrix lx = char_matrix(complete_bipartite_graph(3, 3), MatrixKind::Laplacian);
  EXPECT_EQ(lx(0, 0), parse_univariate("x-3"));
  EXPECT_EQ(lx(0, 3), parse_univariate("1"));
  EXPECT_EQ(lx(0, 1), ZPoly());
  EXPECT_EQ(char_matrix(Graph(1), MatrixKind::Adjacency)(0, 0), parse_univariate("x"));
  Graph g = parse_graph6("Dt_");
  for (MatrixKind k : kAllKinds) EXPECT_EQ(evaluate(char_matrix(g, k), Integer(0)), negate(build_matrix(g, k)));
}

TEST(GeneralizedCharMatrix, Examples) {
  Graph c4 = cycle_graph(4);
  MultiPolyMatrix ax = generalized_char_matrix(c4, MatrixKind::Adjacency);
  auto names = default_variable_names(4);
  EXPECT_EQ(ax(0, 0).to_string(names), "x0");
  EXPECT_EQ(ax(0, 1).to_string(names), "-1");
  EXPECT_EQ(ax(0, 2).to_string(names), "0");
  std::vector<Integer> degs(4, Integer(2)), zeros(4, Integer(0));
  EXPECT_EQ(evaluate(ax, degs), build_matrix(c4, MatrixKind::Laplacian));
  EXPECT_EQ(evaluate(ax, zeros), negate(build_matrix(c4, MatrixKind::Adjacency)));
  EXPECT_THROW(generalized_char_matrix(c4, MatrixKind::Laplacian), std::invalid_argument);
}

TEST(MatrixProperties, RowSumsSymmetryAndDistances) {
  std::mt19937 rng(3);
  int checked = 0;
  while (checked < 200) {
    Graph g = random_graph(rng, 2 + checked % 9, 0.4);
    if (!g.is_connected()) continue;
    ++checked;
    const std::size_t n = static_cast<std::size_t>(g.order());
    for (MatrixKind k : kAllKinds) {
      IntMatrix m = build_matrix(g, k);
      for (std::size_t i = 0; i < n; ++i) {
        Integer row(0);
        for (std::size_t j = 0; j < n; ++j) {
          EXPECT_EQ(m(i, j), m(j, i));
          row += m(i, j);
        }
        if (k == MatrixKind::Laplacian || k == MatrixKind::DistLap) EXPECT_TRUE(row.is_zero());
      }
    }
    IntMatrix d = distance_matrix(g);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        EXPECT_EQ(d(i, j) == Integer(1), g.has_edge(static_cast<int>(i), static_cast<int>(j)));
        for (std::size_t l = 0; l < n; ++l) EXPECT_LE(d(i, j), d(i, l) + d(l, j));
      }
    }
  }
}

TEST(Determinant, AgreesWithCharacteristicPolynomial) {
  std::mt19937 rng(11);
  for (int iter = 0; iter < 100; ++iter) {
    Graph g = random_graph(rng, 1 + iter % 8, 0.5);
    IntMatrix a = build_matrix(g, MatrixKind::Adjacency);
    ZPoly chi = characteristic_polynomial(a);
    EXPECT_EQ(chi.degree(), g.order());
    // chi(0) = det(-A) = (-1)^n det(A).
    Integer det = determinant(a);
    EXPECT_EQ(chi.coeff(0), g.order() % 2 ? -det : det);
    // chi(c) = det(cI - A) for a few integers c.
    for (long c : {-2L, 1L, 3L}) EXPECT_EQ(chi.eval(Integer(c)), determinant(evaluate(char_matrix(a), Integer(c))));
  }
  EXPECT_EQ(characteristic_polynomial(build_matrix(complete_graph(3), MatrixKind::Adjacency)), parse_univariate("(x-2)*(x+1)^2"));
}

TEST(Families, Examples) {
  EXPECT_EQ(write_graph6(make_family("complete", {4})), "C~");
  Graph s = make_family("star", {5});
  EXPECT_EQ(s.order(), 5);
  EXPECT_EQ(s.degree(0), 4);
  Graph k33 = make_family("complete_bipartite", {3, 3});
  EXPECT_EQ(k33.size(), 9);
  EXPECT_TRUE(k33.is_regular());
  EXPECT_THROW(make_family("complete", {0}), std::invalid_argument);
  EXPECT_THROW(make_family("petersen", {10}), std::invalid_argument);
  EXPECT_THROW(make_family("complete_bipartite", {3}), std::invalid_argument);
}

TEST(CanonicalForm, AgreesWithBruteForceIsomorphism) {
  std::mt19937 rng(8);
  for (int iter = 0; iter < 300; ++iter) {
    int n = 1 + iter % 7;
    Graph g = random_graph(rng, n, iter % 3 == 0 ? 0.5 : 0.3);
    uint64_t code = canonical_code(g);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    EXPECT_EQ(canonical_code(g.relabel(perm)), code);
    EXPECT_EQ(graph_from_code(n, code), canonical_form(g));
    EXPECT_TRUE(brute_force_isomorphic(g, canonical_form(g)));
    // Same order and edge count keeps the negative cases nontrivial.
    Graph h = g;
    auto edges = g.edges();
    if (!edges.empty() && g.size() < n * (n - 1) / 2) {
      auto [u, v] = edges[static_cast<std::size_t>(iter) % edges.size()];
      h.remove_edge(u, v);
      for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
          if (!g.has_edge(a, b) && !(a == u && b == v)) {
            Graph k = h;
            k.add_edge(a, b);
            EXPECT_EQ(canonical_code(k) == code, brute_force_isomorphic(g, k));
          }
        }
      }
    }
  }
  for (const Graph& g : {complete_graph(7), cycle_graph(7), complete_bipartite_graph(3, 4), Graph(6), star_graph(7)}) {
    EXPECT_EQ(graph_from_code(g.order(), canonical_code(g)), canonical_form(g));
    EXPECT_TRUE(brute_force_isomorphic(g, canonical_form(g)));
  }
}

TEST(EnumerateConnected, AllGraphCounts) {
  const std::size_t expected[] = {1, 2, 4, 11, 34, 156, 1044};
  for (int n = 1; n <= 7; ++n) EXPECT_EQ(enumerate_all(n).size(), expected[n - 1]);
}

TEST(EnumerateConnected, Counts) {
  const std::size_t expected[] = {1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 7; ++n) {
    auto gs = enumerate_connected(n);
    EXPECT_EQ(gs.size(), expected[n - 1]) << n;
    std::set<uint64_t> codes;
    for (const Graph& g : gs) {
      EXPECT_TRUE(g.is_connected());
      codes.insert(canonical_code(g));
    }
    EXPECT_EQ(codes.size(), gs.size());
  }
  EXPECT_EQ(write_graph6(enumerate_connected(1).front()), "@");
  EXPECT_THROW(enumerate_connected(0), std::invalid_argument);
  EXPECT_THROW(enumerate_connected(9), std::invalid_argument);
}
