#pragma once

#include <vector>

#include "detideal/multipoly.hpp"

namespace detideal {

/// Symmetric Euclidean division by a nonzero b: c = q*b + r with r in (-|b|/2, |b|/2].
Integer symmetric_quotient(const Integer& c, const Integer& b);

/// Incrementally maintained strong Groebner basis over Z[x0..x{n-1}].
///
/// After every add() the basis is the unique minimal reduced strong basis:
/// positive leading coefficients, tails reduced with symmetric residues,
/// sorted ascending by leading monomial.
class StrongGroebner {
 public:
  StrongGroebner(int nvars, MonomialOrder order);

  /// Adds a generator. Returns false when f already lies in the ideal.
  bool add(const MultiPoly& f);
  /// Adds many generators and completes once.
  void add_all(const std::vector<MultiPoly>& gens);

  const std::vector<MultiPoly>& basis() const noexcept { return basis_; }
  bool is_unit() const noexcept;
  int nvars() const noexcept { return nvars_; }
  MonomialOrder order() const noexcept { return order_; }

  /// Fully reduced normal form of f against the current basis.
  MultiPoly normal_form(const MultiPoly& f) const;

 private:
  void complete(std::vector<MultiPoly> initial, std::size_t first_new);

  int nvars_;
  MonomialOrder order_;
  std::vector<MultiPoly> basis_;
};

/// Normal form of f against an arbitrary list of polynomials, using
/// E-reduction (coefficients reduced to symmetric residues) on every term.
MultiPoly reduce_full(const MultiPoly& f, const std::vector<MultiPoly>& by);

/// Canonical strong Groebner basis of the ideal generated by gens. The zero
/// ideal has an empty basis. All generators must share arity and order.
std::vector<MultiPoly> strong_groebner_basis(const std::vector<MultiPoly>& gens);

}  // namespace detideal
