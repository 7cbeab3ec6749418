#include "detideal/matrix.hpp"

#include <bit>
#include <cassert>
#include <sstream>

namespace detideal {

std::string_view kind_name(MatrixKind k) {
  switch (k) {
    case MatrixKind::Adjacency:
      return "adjacency";
    case MatrixKind::Laplacian:
      return "laplacian";
    case MatrixKind::Distance:
      return "distance";
    case MatrixKind::DistLap:
      return "distlap";
  }
  return "?";
}

MatrixKind parse_kind(std::string_view s) {
  for (MatrixKind k : kAllKinds) {
    if (kind_name(k) == s) return k;
  }
  throw std::invalid_argument("unknown matrix kind '" + std::string(s) +
                              "' (expected adjacency, laplacian, distance or distlap)");
}

IntMatrix int_matrix(const std::vector<std::vector<long>>& rows) {
  std::size_t n = rows.size(), m = rows.empty() ? 0 : rows[0].size();
  IntMatrix a(n, m);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != m) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t j = 0; j < m; ++j) a(i, j) = Integer(rows[i][j]);
  }
  return a;
}

IntMatrix distance_matrix(const Graph& g) {
  const int n = g.order();
  IntMatrix d(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int s = 0; s < n; ++s) {
    uint64_t seen = uint64_t{1} << s, frontier = seen;
    long dist = 0;
    while (frontier) {
      ++dist;
      uint64_t next = 0;
      for (uint64_t f = frontier; f; f &= f - 1) next |= g.neighbors(std::countr_zero(f));
      frontier = next & ~seen;
      seen |= frontier;
      for (uint64_t f = frontier; f; f &= f - 1) d(static_cast<std::size_t>(s), static_cast<std::size_t>(std::countr_zero(f))) = Integer(dist);
    }
    if (std::popcount(seen) != n) {
      throw DisconnectedGraph("distance matrix needs a connected graph (vertex " + std::to_string(s) +
                              " cannot reach every vertex)");
    }
  }
  return d;
}

IntMatrix build_matrix(const Graph& g, MatrixKind kind) {
  const std::size_t n = static_cast<std::size_t>(g.order());
  IntMatrix m(n, n);
  switch (kind) {
    case MatrixKind::Adjacency:
    case MatrixKind::Laplacian:
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (g.has_edge(static_cast<int>(i), static_cast<int>(j))) m(i, j) = Integer(kind == MatrixKind::Adjacency ? 1 : -1);
        }
        if (kind == MatrixKind::Laplacian) m(i, i) = Integer(g.degree(static_cast<int>(i)));
      }
      return m;
    case MatrixKind::Distance:
      return distance_matrix(g);
    case MatrixKind::DistLap: {
      IntMatrix d = distance_matrix(g);
      for (std::size_t i = 0; i < n; ++i) {
        Integer t(0);
        for (std::size_t j = 0; j < n; ++j) {
          t += d(i, j);
          m(i, j) = -d(i, j);
        }
        m(i, i) = t;
      }
      return m;
    }
  }
  throw std::logic_error("unreachable matrix kind");
}

ZPolyMatrix char_matrix(const IntMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("characteristic matrix needs a square matrix");
  ZPolyMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      out(i, j) = i == j ? ZPoly{-m(i, j), Integer(1)} : ZPoly::constant(-m(i, j));
    }
  }
  return out;
}

ZPolyMatrix char_matrix(const Graph& g, MatrixKind kind) { return char_matrix(build_matrix(g, kind)); }

QPolyMatrix to_rational(const ZPolyMatrix& m) {
  return m.map([](const ZPoly& p) { return detideal::to_rational(p); });
}

MultiPolyMatrix generalized_char_matrix(const IntMatrix& m, MonomialOrder order) {
  if (!m.is_square()) throw std::invalid_argument("generalized characteristic matrix needs a square matrix");
  const int n = static_cast<int>(m.rows());
  if (n > kMaxVariables) throw std::invalid_argument("too many vertices for the multivariate ring");
  MultiPolyMatrix out(m.rows(), m.cols(), MultiPoly(std::max(n, 1), order));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      MultiPoly e = MultiPoly::constant(n, order, -m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)));
      if (i == j) e += MultiPoly::variable(n, order, i);
      out(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = std::move(e);
    }
  }
  return out;
}

MultiPolyMatrix generalized_char_matrix(const Graph& g, MatrixKind kind) {
  if (kind != MatrixKind::Adjacency && kind != MatrixKind::Distance) {
    throw std::invalid_argument("generalized characteristic matrices are defined for adjacency and distance only");
  }
  return generalized_char_matrix(build_matrix(g, kind));
}

IntMatrix evaluate(const ZPolyMatrix& m, const Integer& x) {
  return m.map([&](const ZPoly& p) { return p.eval(x); });
}

IntMatrix evaluate(const MultiPolyMatrix& m, std::span<const Integer> point) {
  return m.map([&](const MultiPoly& p) { return p.eval(point); });
}

IntMatrix negate(const IntMatrix& m) {
  return m.map([](const Integer& v) { return -v; });
}

ZPoly characteristic_polynomial(const IntMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("characteristic polynomial needs a square matrix");
  const std::size_t n = a.rows();
  // M_0 = 0, c_n = 1; M_k = A M_{k-1} + c_{n-k+1} I; c_{n-k} = -tr(A M_k) / k.
  std::vector<Integer> c(n + 1, Integer(0));
  c[n] = Integer(1);
  IntMatrix mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    IntMatrix next(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Integer s(0);
        for (std::size_t l = 0; l < n; ++l) {
          if (!a(i, l).is_zero() && !mk(l, j).is_zero()) s += a(i, l) * mk(l, j);
        }
        next(i, j) = std::move(s);
      }
      next(i, i) += c[n - k + 1];
    }
    mk = std::move(next);
    Integer tr(0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t l = 0; l < n; ++l) tr += a(i, l) * mk(l, i);
    }
    assert(Integer::divides(Integer(static_cast<long>(k)), tr));
    c[n - k] = -Integer::div_exact(tr, Integer(static_cast<long>(k)));
  }
  return ZPoly(std::move(c));
}

Integer determinant(IntMatrix m) {
  if (!m.is_square()) throw std::invalid_argument("determinant needs a square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Integer(1);
  Integer sign(1), prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m(r, k).is_zero()) ++r;
      if (r == n) return Integer(0);
      m.swap_rows(k, r);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = Integer::div_exact(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j);
    os << "]";
  }
  os << "]";
  return os.str();
}

}  // namespace detideal
