#include "detideal/ideal.hpp"

#include <cassert>
#include <mutex>
#include <stdexcept>

#include "detideal/groebner.hpp"

namespace detideal {

std::string_view ring_name(Ring r) {
  switch (r) {
    case Ring::Zx:
      return "Zx";
    case Ring::Qx:
      return "Qx";
    case Ring::ZX:
      return "ZX";
  }
  return "?";
}

Ring parse_ring(std::string_view s) {
  if (s == "Zx") return Ring::Zx;
  if (s == "Qx") return Ring::Qx;
  if (s == "ZX") return Ring::ZX;
  throw std::invalid_argument("unknown ring '" + std::string(s) + "' (expected Zx, Qx or ZX)");
}

struct Ideal::Cache {
  std::once_flag once;
  std::vector<MultiPoly> basis;
  QPoly monic;
};

Ideal::Ideal(Ring ring, int nvars, MonomialOrder order, std::vector<MultiPoly> generators)
    : ring_(ring), nvars_(nvars), order_(order), gens_(std::move(generators)), cache_(std::make_shared<Cache>()) {
  if (ring != Ring::ZX && nvars != 1) throw std::invalid_argument("univariate ring needs exactly one variable");
  for (const auto& g : gens_) check_generator(g);
  std::erase_if(gens_, [](const MultiPoly& p) { return p.is_zero(); });
}

Ideal Ideal::zx(const std::vector<ZPoly>& generators) {
  std::vector<MultiPoly> g;
  for (const auto& p : generators) g.push_back(MultiPoly::from_univariate(p));
  return Ideal(Ring::Zx, 1, MonomialOrder::DegRevLex, std::move(g));
}

Ideal Ideal::qx(const std::vector<QPoly>& generators) {
  std::vector<MultiPoly> g;
  for (const auto& p : generators) g.push_back(MultiPoly::from_univariate(primitive_integer_multiple(p)));
  return Ideal(Ring::Qx, 1, MonomialOrder::DegRevLex, std::move(g));
}

Ideal Ideal::from_canonical(Ring ring, int nvars, MonomialOrder order, std::vector<MultiPoly> basis) {
  Ideal I(ring, nvars, order, basis);
  std::call_once(I.cache_->once, [&] {
    I.cache_->basis = std::move(basis);
    if (ring == Ring::Qx && !I.cache_->basis.empty()) {
      I.cache_->monic = monic(to_rational(I.cache_->basis.front().to_univariate()));
    }
  });
  return I;
}

void Ideal::check_generator(const MultiPoly& p) const {
  if (p.nvars() != nvars_ || p.order() != order_) throw std::invalid_argument("generator does not belong to the ring");
}

const Ideal::Cache& Ideal::cache() const {
  std::call_once(cache_->once, [this] {
    if (ring_ == Ring::Qx) {
      QPoly g;
      for (const auto& p : gens_) g = g.is_zero() ? monic(to_rational(p.to_univariate())) : gcd_poly_q(g, to_rational(p.to_univariate()));
      cache_->monic = g;
      if (!g.is_zero()) cache_->basis = {MultiPoly::from_univariate(primitive_integer_multiple(g))};
    } else {
      StrongGroebner sg(nvars_, order_);
      for (const auto& p : gens_) {
        sg.add(p);
        if (sg.is_unit()) break;
      }
      cache_->basis = sg.basis();
    }
  });
  return *cache_;
}

const std::vector<MultiPoly>& Ideal::canonical_basis() const { return cache().basis; }

const QPoly& Ideal::monic_generator() const {
  if (ring_ != Ring::Qx) throw std::logic_error("monic generator exists only over Q[x]");
  return cache().monic;
}

bool Ideal::is_zero() const { return gens_.empty(); }

bool Ideal::is_trivial() const {
  const auto& b = canonical_basis();
  return b.size() == 1 && b[0].is_constant() && b[0].lc().is_one();
}

std::vector<std::string> Ideal::basis_strings(std::span<const std::string> names) const {
  std::vector<std::string> out;
  if (ring_ == Ring::Qx) {
    const QPoly& g = monic_generator();
    if (!g.is_zero()) out.push_back(g.to_string(names.empty() ? "x" : std::string_view(names[0])));
    return out;
  }
  for (const auto& p : canonical_basis()) out.push_back(p.to_string(names));
  return out;
}

bool ideal_member(const MultiPoly& p, const Ideal& I) {
  if (p.nvars() != I.nvars() || p.order() != I.order()) throw std::invalid_argument("polynomial is not in the ideal's ring");
  if (p.is_zero()) return true;
  if (I.ring() == Ring::Qx) {
    const QPoly& g = I.monic_generator();
    if (g.is_zero()) return false;
    return divmod(to_rational(p.to_univariate()), g).second.is_zero();
  }
  return reduce_full(p, I.canonical_basis()).is_zero();
}

bool mutually_contained(const Ideal& I, const Ideal& J) {
  for (const auto& g : I.generators()) {
    if (!ideal_member(g, J)) return false;
  }
  for (const auto& g : J.generators()) {
    if (!ideal_member(g, I)) return false;
  }
  return true;
}

bool ideal_equal(const Ideal& I, const Ideal& J) {
  if (I.ring() != J.ring() || I.nvars() != J.nvars() || I.order() != J.order()) {
    throw std::invalid_argument("ideals belong to different rings");
  }
  bool eq = I.canonical_basis() == J.canonical_basis();
  assert(eq == mutually_contained(I, J));
  return eq;
}

}  // namespace detideal
