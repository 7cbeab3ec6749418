#include <gtest/gtest.h>

#include <random>

#include "detideal/enumerate.hpp"
#include "detideal/smith.hpp"

using namespace detideal;

namespace {

std::vector<Integer> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }
QPoly q(const char* s) { return to_rational(parse_univariate(s)); }

}  // namespace

TEST(SnfInteger, LaplacianOfK33) {
  SnfInteger s = snf_integer(build_matrix(complete_bipartite_graph(3, 3), MatrixKind::Laplacian));
  EXPECT_EQ(s.invariant_factors, ints({1, 1, 3, 3, 9}));
  EXPECT_EQ(s.rank(), 5u);
  EXPECT_EQ(s.rows, 6u);
  EXPECT_EQ(s.padded(), ints({1, 1, 3, 3, 9, 0}));
  EXPECT_EQ(s.deltas(), ints({1, 1, 3, 9, 81, 0}));
}

TEST(SnfInteger, AdjacencyOfCompleteGraphs) {
  for (int n = 2; n <= 8; ++n) {
    SnfInteger s = snf_integer(build_matrix(complete_graph(n), MatrixKind::Adjacency));
    std::vector<Integer> expect(static_cast<std::size_t>(n - 1), Integer(1));
    expect.push_back(Integer(n - 1));
    EXPECT_EQ(s.invariant_factors, expect) << n;
  }
}

TEST(SnfInteger, CycleC4) {
  Graph c4 = cycle_graph(4);
  SnfInteger l = snf_integer(build_matrix(c4, MatrixKind::Laplacian));
  EXPECT_EQ(l.invariant_factors, ints({1, 1, 4}));
  GroupDescription k = cokernel(l);
  EXPECT_EQ(k.torsion, ints({4}));
  EXPECT_EQ(k.free_rank, 1u);
  GroupDescription s = cokernel(snf_integer(build_matrix(c4, MatrixKind::Adjacency)));
  EXPECT_TRUE(s.torsion.empty());
  EXPECT_EQ(s.free_rank, 2u);
}

TEST(SnfInteger, LaplacianOfCompleteGraph) {
  // Delta_k(L(K_n)) = n^(k-1), so the critical group is (Z_n)^(n-2).
  for (int n = 3; n <= 8; ++n) {
    SnfInteger s = snf_integer(build_matrix(complete_graph(n), MatrixKind::Laplacian));
    std::vector<Integer> expect{Integer(1)};
    for (int i = 0; i < n - 2; ++i) expect.push_back(Integer(n));
    EXPECT_EQ(s.invariant_factors, expect);
    GroupDescription k = cokernel(s);
    EXPECT_EQ(k.torsion.size(), static_cast<std::size_t>(n - 2));
    EXPECT_EQ(k.free_rank, 1u);
  }
  EXPECT_EQ(delta_bruteforce(build_matrix(complete_graph(3), MatrixKind::Laplacian), 2), Integer(3));
}

TEST(SnfInteger, StarDistanceLaplacian) {
  EXPECT_EQ(snf_integer(build_matrix(star_graph(3), MatrixKind::DistLap)).padded(), ints({1, 5, 0}));
}

TEST(SnfPolyQ, Examples) {
  SnfPoly s = snf_poly_q(to_rational(char_matrix(complete_bipartite_graph(3, 3), MatrixKind::Laplacian)));
  std::vector<QPoly> expect{q("1"), q("1"), q("x-3"), q("x-3"), q("x-3"), q("x*(x-3)*(x-6)")};
  EXPECT_EQ(s.invariant_factors, expect);
  EXPECT_EQ(snf_poly_q(to_rational(char_matrix(Graph(1), MatrixKind::Adjacency))).invariant_factors,
            std::vector<QPoly>{q("x")});
  Graph g1(6, {{0, 1}, {1, 2}, {1, 3}, {2, 4}, {3, 4}, {2, 3}, {4, 5}});
  SnfPoly f = snf_poly_q(to_rational(char_matrix(g1, MatrixKind::Adjacency)));
  ASSERT_EQ(f.rank(), 6u);
  EXPECT_EQ(f.invariant_factors[4], q("x+1"));
  EXPECT_EQ(f.invariant_factors[5], q("(x-1)*(x+1)*(x^3-x^2-5x+1)"));
}

TEST(DeltaBruteforce, Examples) {
  for (int n = 2; n <= 6; ++n) {
    IntMatrix l = build_matrix(complete_graph(n), MatrixKind::Laplacian);
    for (int k = 1; k <= n - 1; ++k) EXPECT_EQ(delta_bruteforce(l, static_cast<std::size_t>(k)), Integer::pow(Integer(n), static_cast<unsigned>(k - 1)));
  }
  IntMatrix a = build_matrix(parse_graph6("Dt_"), MatrixKind::Distance);
  EXPECT_EQ(delta_bruteforce(a, 5), determinant(a).abs());
  EXPECT_THROW(delta_bruteforce(a, 0), std::invalid_argument);
  EXPECT_THROW(delta_bruteforce(a, 6), std::invalid_argument);
}

TEST(SnfProperties, OracleEquivalenceOnSmallGraphs) {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : enumerate_connected(n)) {
      for (MatrixKind kind : kAllKinds) {
        IntMatrix m = build_matrix(g, kind);
        SnfInteger s = snf_integer(m);
        auto d = s.deltas();
        for (std::size_t k = 1; k <= static_cast<std::size_t>(n); ++k) {
          ASSERT_EQ(d[k - 1], delta_bruteforce(m, k)) << write_graph6(g) << " " << kind_name(kind) << " k=" << k;
        }
        for (std::size_t j = 0; j + 1 < s.rank(); ++j) {
          EXPECT_TRUE(Integer::divides(s.invariant_factors[j], s.invariant_factors[j + 1]));
        }
        for (const auto& f : s.invariant_factors) EXPECT_GT(f.sign(), 0);
        if (kind == MatrixKind::Laplacian || kind == MatrixKind::DistLap) EXPECT_EQ(s.rank(), static_cast<std::size_t>(n - 1));
        if (s.rank() == static_cast<std::size_t>(n)) EXPECT_EQ(d.back(), determinant(m).abs());
      }
    }
  }
}

TEST(SnfProperties, PolynomialSnfMatchesCharacteristicPolynomial) {
  std::mt19937 rng(21);
  for (int n = 1; n <= 6; ++n) {
    auto gs = enumerate_connected(n);
    for (int iter = 0; iter < 15; ++iter) {
      const Graph& g = gs[rng() % gs.size()];
      for (MatrixKind kind : kAllKinds) {
        IntMatrix m = build_matrix(g, kind);
        ZPolyMatrix mx = char_matrix(m);
        SnfPoly s = snf_poly_q(to_rational(mx));
        ASSERT_EQ(s.rank(), static_cast<std::size_t>(n));
        EXPECT_EQ(s.deltas().back(), to_rational(characteristic_polynomial(m)));
        for (std::size_t j = 0; j + 1 < s.rank(); ++j) {
          EXPECT_TRUE(divmod(s.invariant_factors[j + 1], s.invariant_factors[j]).second.is_zero());
        }
        auto d = s.deltas();
        for (std::size_t k = 1; k <= static_cast<std::size_t>(std::min(n, 4)); ++k) {
          EXPECT_EQ(d[k - 1], delta_bruteforce(mx, k));
        }
      }
    }
  }
}
