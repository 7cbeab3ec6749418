#pragma once

#include <cstddef>
#include <vector>

#include "detideal/matrix.hpp"

namespace detideal {

/// Smith normal form over Z: nonzero invariant factors only, each positive and
/// dividing the next.
struct SnfInteger {
  std::size_t rows = 0, cols = 0;
  std::vector<Integer> invariant_factors;

  std::size_t rank() const noexcept { return invariant_factors.size(); }
  /// Delta_k = f_1 ... f_k for k = 1..min(rows, cols); zero past the rank.
  std::vector<Integer> deltas() const;
  /// Invariant factors padded with zeros to min(rows, cols) entries.
  std::vector<Integer> padded() const;
};

/// Smith normal form over Q[x]: monic invariant factors.
struct SnfPoly {
  std::size_t rows = 0, cols = 0;
  std::vector<QPoly> invariant_factors;

  std::size_t rank() const noexcept { return invariant_factors.size(); }
  std::vector<QPoly> deltas() const;
};

struct GroupDescription {
  std::vector<Integer> torsion;  // orders > 1, each dividing the next
  std::size_t free_rank = 0;
};

SnfInteger snf_integer(IntMatrix m);
SnfPoly snf_poly_q(QPolyMatrix m);

/// Torsion = invariant factors greater than one; free rank = rows - rank.
GroupDescription cokernel(const SnfInteger& snf);

/// gcd of all k-minors, each computed as an independent Bareiss determinant.
/// Throws std::invalid_argument unless 1 <= k <= min(rows, cols).
Integer delta_bruteforce(const IntMatrix& m, std::size_t k);
/// Monic gcd of all k-minors over Q[x]; zero if every minor vanishes.
QPoly delta_bruteforce(const ZPolyMatrix& m, std::size_t k);

/// Fraction-free determinant in Z[x].
ZPoly determinant(ZPolyMatrix m);

/// Calls f(rows, cols) for every pair of k-subsets of {0..n-1}, lexicographic.
template <class F>
void for_each_subset_pair(std::size_t n_rows, std::size_t n_cols, std::size_t k, F&& f);

namespace detail {
bool next_combination(std::vector<std::size_t>& c, std::size_t n);
}

template <class F>
void for_each_subset_pair(std::size_t n_rows, std::size_t n_cols, std::size_t k, F&& f) {
  std::vector<std::size_t> r(k);
  for (std::size_t i = 0; i < k; ++i) r[i] = i;
  do {
    std::vector<std::size_t> c(k);
    for (std::size_t i = 0; i < k; ++i) c[i] = i;
    do {
      f(r, c);
    } while (detail::next_combination(c, n_cols));
  } while (detail::next_combination(r, n_rows));
}

}  // namespace detideal
