#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "detideal/multipoly.hpp"
#include "detideal/unipoly.hpp"

namespace detideal {

/// Coefficient ring of an ideal: Z[x], Q[x], or Z[x0..x{m-1}].
enum class Ring { Zx, Qx, ZX };

std::string_view ring_name(Ring r);
/// Accepts "Zx", "Qx", "ZX". Throws std::invalid_argument otherwise.
Ring parse_ring(std::string_view s);

/// An ideal given by generators, with a lazily computed canonical basis.
///
/// Over Z the canonical basis is the reduced strong Groebner basis; over Q[x]
/// it is the monic gcd of the generators. Q[x] generators are stored as
/// integer polynomials, which spans the same Q[x]-ideal.
class Ideal {
 public:
  Ideal(Ring ring, int nvars, MonomialOrder order, std::vector<MultiPoly> generators);
  static Ideal zx(const std::vector<ZPoly>& generators);
  static Ideal qx(const std::vector<QPoly>& generators);
  /// Wraps a list that is already a canonical basis (skips recomputation).
  static Ideal from_canonical(Ring ring, int nvars, MonomialOrder order, std::vector<MultiPoly> basis);

  Ring ring() const noexcept { return ring_; }
  int nvars() const noexcept { return nvars_; }
  MonomialOrder order() const noexcept { return order_; }
  const std::vector<MultiPoly>& generators() const noexcept { return gens_; }

  /// Canonical generators. For Q[x] this is the primitive integer multiple of
  /// the monic gcd (or empty for the zero ideal).
  const std::vector<MultiPoly>& canonical_basis() const;
  /// Q[x] only: the monic generator, zero for the zero ideal.
  const QPoly& monic_generator() const;

  bool is_zero() const;
  bool is_trivial() const;

  /// Basis rendered in the polynomial text format. Q[x] renders the monic generator.
  std::vector<std::string> basis_strings(std::span<const std::string> names = {}) const;

 private:
  struct Cache;
  void check_generator(const MultiPoly& p) const;
  const Cache& cache() const;

  Ring ring_;
  int nvars_;
  MonomialOrder order_;
  std::vector<MultiPoly> gens_;
  std::shared_ptr<Cache> cache_;
};

/// Throws std::invalid_argument if p is not in the ideal's ring.
bool ideal_member(const MultiPoly& p, const Ideal& I);
/// Compares canonical bases. Throws std::invalid_argument on ring mismatch.
/// Debug builds also confirm the answer by mutual membership.
bool ideal_equal(const Ideal& I, const Ideal& J);
/// Independent check: every generator of each ideal is a member of the other.
bool mutually_contained(const Ideal& I, const Ideal& J);

}  // namespace detideal
