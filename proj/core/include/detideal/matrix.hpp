#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "detideal/graph.hpp"
#include "detideal/integer.hpp"
#include "detideal/multipoly.hpp"
#include "detideal/unipoly.hpp"

namespace detideal {

/// Dense row-major matrix.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T()) : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap(a_[i * cols_ + c], a_[j * cols_ + c]);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap(a_[r * cols_ + i], a_[r * cols_ + j]);
  }

  template <class F>
  auto map(F&& f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
    Matrix<decltype(f(std::declval<const T&>()))> out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) out(i, j) = f((*this)(i, j));
    }
    return out;
  }

  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> a_;
};

using IntMatrix = Matrix<Integer>;
using ZPolyMatrix = Matrix<ZPoly>;
using QPolyMatrix = Matrix<QPoly>;
using MultiPolyMatrix = Matrix<MultiPoly>;

enum class MatrixKind { Adjacency, Laplacian, Distance, DistLap };

std::string_view kind_name(MatrixKind k);
/// Accepts adjacency, laplacian, distance, distlap. Throws std::invalid_argument.
MatrixKind parse_kind(std::string_view s);
inline constexpr MatrixKind kAllKinds[] = {MatrixKind::Adjacency, MatrixKind::Laplacian, MatrixKind::Distance,
                                           MatrixKind::DistLap};

IntMatrix int_matrix(const std::vector<std::vector<long>>& rows);

/// BFS distances. Throws DisconnectedGraph if some pair is unreachable.
IntMatrix distance_matrix(const Graph& g);
/// A, L = deg - A, D, or F = T - D with T the diagonal of transmissions.
IntMatrix build_matrix(const Graph& g, MatrixKind kind);

/// xI - M over Z[x].
ZPolyMatrix char_matrix(const IntMatrix& m);
ZPolyMatrix char_matrix(const Graph& g, MatrixKind kind);
QPolyMatrix to_rational(const ZPolyMatrix& m);

/// diag(x0..x{n-1}) - M over Z[X] with degrevlex.
MultiPolyMatrix generalized_char_matrix(const IntMatrix& m, MonomialOrder order = MonomialOrder::DegRevLex);
/// Only adjacency (critical ideals) and distance (distance ideals) are defined.
MultiPolyMatrix generalized_char_matrix(const Graph& g, MatrixKind kind);

IntMatrix evaluate(const ZPolyMatrix& m, const Integer& x);
IntMatrix evaluate(const MultiPolyMatrix& m, std::span<const Integer> point);
IntMatrix negate(const IntMatrix& m);

/// Characteristic polynomial det(xI - M) by Faddeev-LeVerrier over Q.
ZPoly characteristic_polynomial(const IntMatrix& m);

/// Exact determinant by fraction-free Bareiss elimination.
Integer determinant(IntMatrix m);

std::string to_string(const IntMatrix& m);

}  // namespace detideal
