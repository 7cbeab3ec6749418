#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "detideal/ideal.hpp"
#include "detideal/matrix.hpp"

namespace detideal {

/// Raised when a multivariate computation is requested above the size guard.
class SizeGuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kMultivariateVertexLimit = 6;
inline constexpr std::size_t kMaxMinorDimension = 16;

/// The k-minors of m for all row/column k-subsets, in lexicographic
/// (rows, cols) order, zeros included. Computed by Laplace expansion along the
/// first selected row, memoized level by level.
std::vector<ZPoly> minors_k(const ZPolyMatrix& m, std::size_t k);
std::vector<MultiPoly> minors_k(const MultiPolyMatrix& m, std::size_t k);
std::vector<Integer> minors_k(const IntMatrix& m, std::size_t k);

/// Minors for every k = 1..min(rows, cols); result[k-1] holds the k-minors.
std::vector<std::vector<MultiPoly>> all_minors(const MultiPolyMatrix& m);
std::vector<std::vector<ZPoly>> all_minors(const ZPolyMatrix& m);

/// Ideal generated by a list of polynomials in Z[X]: zeros dropped, signs
/// normalized, duplicates removed, then fed incrementally to a strong
/// Groebner basis.
Ideal ideal_from_generators(Ring ring, int nvars, MonomialOrder order, std::vector<MultiPoly> gens);

/// The determinantal ideals I_1 .. I_n of one matrix.
struct IdealProfile {
  std::string graph;  // graph6, empty for a bare matrix
  MatrixKind kind = MatrixKind::Adjacency;
  Ring ring = Ring::Zx;
  std::vector<Ideal> ideals;
  std::size_t corank = 0;

  std::size_t size() const noexcept { return ideals.size(); }
  /// 1-based. Throws std::out_of_range.
  const Ideal& ideal(std::size_t k) const;
};

/// Ideals of xI - M. Zx uses strong Groebner bases of the minors; Qx uses
/// the monic Delta_k from the Smith form over Q[x].
IdealProfile determinantal_ideals(const IntMatrix& m, Ring ring);
IdealProfile determinantal_ideals(const Graph& g, MatrixKind kind, Ring ring);

/// Ideals of diag(x0..x{n-1}) - M over Z[X]: critical ideals for adjacency,
/// distance ideals for distance. Throws SizeGuardExceeded above
/// kMultivariateVertexLimit vertices unless override_guard is set.
IdealProfile multivariate_ideals(const Graph& g, MatrixKind kind, bool override_guard = false);

/// Determinantal ideals of an arbitrary polynomial matrix over Z[X].
std::vector<Ideal> determinantal_ideals(const MultiPolyMatrix& m);

/// Number of leading trivial ideals.
std::size_t corank(const IdealProfile& profile);

/// Nonnegative gcd of the evaluated basis of each ideal. Zx takes one
/// coordinate, ZX takes one per variable. Throws std::invalid_argument on
/// arity mismatch or for Qx profiles.
std::vector<Integer> evaluate_profile(const IdealProfile& profile, std::span<const Integer> point);

struct VarietyDescription {
  enum class Extent { Empty, Finite, Everything };
  std::size_t k = 0;
  Extent extent = Extent::Finite;
  QPoly squarefree;  // monic; 1 when empty, 0 when everything
  std::vector<Rational> rational_roots;
};

/// Common roots of ideal k of a univariate profile, as the squarefree part of
/// the monic gcd over Q of its basis.
VarietyDescription variety(const IdealProfile& profile, std::size_t k);

/// True iff delta / lambda is an algebraic integer for every root lambda of p.
/// Requires p monic in Z[x] with p(0) != 0 and delta != 0.
bool divides_in_algebraic_integers(const Integer& delta, const ZPoly& p);

/// Every root of the squarefree variety polynomial divides delta: rational
/// roots in Z, the remaining factor over the algebraic integers. Requires
/// delta != 0.
bool roots_divide(const Integer& delta, const QPoly& squarefree);

/// Profile as JSON. Univariate profiles also list their varieties.
std::string profile_to_json(const IdealProfile& profile, std::span<const std::string> names = {});

/// Basis lists, one line per k, in bracketed text form.
std::string profile_to_text(const IdealProfile& profile, std::span<const std::string> names = {});

/// Representative distance Laplacian of K_{n,m} over Z[n,m] (lex, n > m),
/// with a vertices in the first part and b in the second. Entries depend
/// only on block membership and index equality, so a = b = 4 realizes
/// every 2-minor pattern. With star set, m is specialized to 1.
MultiPolyMatrix bipartite_distlap_representative(std::size_t a, std::size_t b, bool star);

}  // namespace detideal
