#include "detideal/smith.hpp"

#include <stdexcept>

namespace detideal {

namespace detail {

bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace detail

std::vector<Integer> SnfInteger::deltas() const {
  std::vector<Integer> d;
  Integer acc(1);
  for (std::size_t k = 0; k < std::min(rows, cols); ++k) {
    acc = k < invariant_factors.size() ? acc * invariant_factors[k] : Integer(0);
    d.push_back(acc);
  }
  return d;
}

std::vector<Integer> SnfInteger::padded() const {
  std::vector<Integer> d = invariant_factors;
  d.resize(std::min(rows, cols), Integer(0));
  return d;
}

std::vector<QPoly> SnfPoly::deltas() const {
  std::vector<QPoly> d;
  QPoly acc = QPoly::constant(Rational(1));
  for (std::size_t k = 0; k < std::min(rows, cols); ++k) {
    acc = k < invariant_factors.size() ? acc * invariant_factors[k] : QPoly();
    d.push_back(acc);
  }
  return d;
}

namespace {

// Shared elimination driver. Ops supplies the Euclidean structure:
//   size(a)        -> comparable Euclidean size of a nonzero element
//   quo(a, b)      -> quotient with size(a - quo*b) < size(b) or remainder 0
//   divides(b, a)  -> b | a
//   normalize(a)   -> associate in canonical form (positive / monic)
template <class T, class Ops>
std::vector<T> smith_diagonal(Matrix<T>& a, const Ops& ops) {
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<T> diag;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // Pivot: smallest nonzero entry of the remaining block.
    auto bring_min = [&]() -> bool {
      bool found = false;
      std::size_t bi = t, bj = t;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (a(i, j).is_zero()) continue;
          if (!found || ops.size(a(i, j)) < ops.size(a(bi, bj))) {
            found = true;
            bi = i;
            bj = j;
          }
        }
      }
      if (!found) return false;
      a.swap_rows(t, bi);
      a.swap_cols(t, bj);
      return true;
    };
    if (!bring_min()) break;
    for (;;) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a(i, t).is_zero()) continue;
        T q = ops.quo(a(i, t), a(t, t));
        for (std::size_t j = t; j < cols; ++j) {
          if (!a(t, j).is_zero()) a(i, j) -= q * a(t, j);
        }
        dirty |= !a(i, t).is_zero();
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a(t, j).is_zero()) continue;
        T q = ops.quo(a(t, j), a(t, t));
        for (std::size_t i = t; i < rows; ++i) {
          if (!a(i, t).is_zero()) a(i, j) -= q * a(i, t);
        }
        dirty |= !a(t, j).is_zero();
      }
      if (dirty) {
        // A smaller remainder appeared in the pivot row or column.
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < rows; ++i) {
          if (!a(i, t).is_zero() && ops.size(a(i, t)) < ops.size(a(bi, bj))) {
            bi = i;
            bj = t;
          }
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (!a(t, j).is_zero() && ops.size(a(t, j)) < ops.size(a(bi, bj))) {
            bi = t;
            bj = j;
          }
        }
        a.swap_rows(t, bi);
        a.swap_cols(t, bj);
        continue;
      }
      // Row and column are clear; the pivot must divide the rest.
      bool fixed = false;
      for (std::size_t i = t + 1; i < rows && !fixed; ++i) {
        for (std::size_t j = t + 1; j < cols && !fixed; ++j) {
          if (!ops.divides(a(t, t), a(i, j))) {
            for (std::size_t c = t; c < cols; ++c) a(t, c) += a(i, c);
            fixed = true;
          }
        }
      }
      if (!fixed) break;
    }
    diag.push_back(ops.normalize(a(t, t)));
  }
  return diag;
}

struct IntOps {
  Integer size(const Integer& a) const { return a.abs(); }
  Integer quo(const Integer& a, const Integer& b) const { return Integer::div_floor(a, b); }
  bool divides(const Integer& b, const Integer& a) const { return Integer::divides(b, a); }
  Integer normalize(const Integer& a) const { return a.abs(); }
};

struct QPolyOps {
  int size(const QPoly& a) const { return a.degree(); }
  QPoly quo(const QPoly& a, const QPoly& b) const { return divmod(a, b).first; }
  bool divides(const QPoly& b, const QPoly& a) const { return divmod(a, b).second.is_zero(); }
  QPoly normalize(const QPoly& a) const { return monic(a); }
};

}  // namespace

SnfInteger snf_integer(IntMatrix m) {
  SnfInteger out;
  out.rows = m.rows();
  out.cols = m.cols();
  out.invariant_factors = smith_diagonal(m, IntOps{});
  return out;
}

SnfPoly snf_poly_q(QPolyMatrix m) {
  SnfPoly out;
  out.rows = m.rows();
  out.cols = m.cols();
  out.invariant_factors = smith_diagonal(m, QPolyOps{});
  return out;
}

GroupDescription cokernel(const SnfInteger& snf) {
  GroupDescription g;
  for (const auto& f : snf.invariant_factors) {
    if (!f.is_one()) g.torsion.push_back(f);
  }
  g.free_rank = snf.rows - snf.rank();
  return g;
}

namespace {

void check_k(std::size_t k, std::size_t rows, std::size_t cols) {
  if (k < 1 || k > std::min(rows, cols)) throw std::invalid_argument("minor size k out of range");
}

template <class T>
Matrix<T> submatrix(const Matrix<T>& m, const std::vector<std::size_t>& r, const std::vector<std::size_t>& c) {
  Matrix<T> s(r.size(), c.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    for (std::size_t j = 0; j < c.size(); ++j) s(i, j) = m(r[i], c[j]);
  }
  return s;
}

}  // namespace

Integer delta_bruteforce(const IntMatrix& m, std::size_t k) {
  check_k(k, m.rows(), m.cols());
  Integer g(0);
  for_each_subset_pair(m.rows(), m.cols(), k, [&](const auto& r, const auto& c) {
    if (!g.is_one()) g = gcd(g, determinant(submatrix(m, r, c)));
  });
  return g;
}

QPoly delta_bruteforce(const ZPolyMatrix& m, std::size_t k) {
  check_k(k, m.rows(), m.cols());
  QPoly g;
  for_each_subset_pair(m.rows(), m.cols(), k, [&](const auto& r, const auto& c) {
    ZPoly d = determinant(submatrix(m, r, c));
    if (d.is_zero()) return;
    g = g.is_zero() ? monic(to_rational(d)) : gcd_poly_q(g, to_rational(d));
  });
  return g;
}

ZPoly determinant(ZPolyMatrix m) {
  if (!m.is_square()) throw std::invalid_argument("determinant needs a square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return ZPoly::constant(Integer(1));
  bool negate_result = false;
  ZPoly prev = ZPoly::constant(Integer(1));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m(r, k).is_zero()) ++r;
      if (r == n) return ZPoly();
      m.swap_rows(k, r);
      negate_result = !negate_result;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = exact_quotient(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
    }
    prev = m(k, k);
  }
  return negate_result ? -m(n - 1, n - 1) : m(n - 1, n - 1);
}

}  // namespace detideal
