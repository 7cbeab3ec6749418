#include "detideal/detideals.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include <json.hpp>

#include "detideal/groebner.hpp"
#include "detideal/smith.hpp"

namespace detideal {

namespace {

bool is_zero_value(const Integer& v) { return v.is_zero(); }
bool is_zero_value(const ZPoly& v) { return v.is_zero(); }
bool is_zero_value(const MultiPoly& v) { return v.is_zero(); }

// k-subsets of {0..n-1} as bitmasks in lexicographic order, plus the inverse map.
struct SubsetIndex {
  std::vector<std::vector<uint32_t>> masks;  // masks[k]
  std::vector<uint32_t> rank;                // rank[mask] within its size

  explicit SubsetIndex(std::size_t n) : masks(n + 1), rank(std::size_t{1} << n, 0) {
    masks[0].push_back(0);
    for (std::size_t k = 1; k <= n; ++k) {
      std::vector<std::size_t> c(k);
      for (std::size_t i = 0; i < k; ++i) c[i] = i;
      do {
        uint32_t m = 0;
        for (std::size_t i : c) m |= uint32_t{1} << i;
        rank[m] = static_cast<uint32_t>(masks[k].size());
        masks[k].push_back(m);
      } while (detail::next_combination(c, n));
    }
  }
};

// Level-by-level Laplace expansion: level k is computed from level k-1.
template <class T>
class MinorEngine {
 public:
  MinorEngine(const Matrix<T>& m, T zero)
      : m_(m), zero_(std::move(zero)), rows_(checked(m.rows())), cols_(checked(m.cols())) {}

  std::size_t max_k() const { return std::min(rows_, cols_); }

  // Advances to the next level and returns its minors.
  const std::vector<T>& next() {
    const std::size_t k = ++k_;
    const auto& rm = ri_.masks[k];
    const auto& cm = ci_.masks[k];
    std::vector<T> cur;
    cur.reserve(rm.size() * cm.size());
    if (k == 1) {
      for (uint32_t r : rm) {
        for (uint32_t c : cm) {
          cur.push_back(m_(static_cast<std::size_t>(std::countr_zero(r)), static_cast<std::size_t>(std::countr_zero(c))));
        }
      }
    } else {
      const std::size_t prev_cols = ci_.masks[k - 1].size();
      for (uint32_t r : rm) {
        const std::size_t r0 = static_cast<std::size_t>(std::countr_zero(r));
        const std::size_t prev_row = ri_.rank[r & ~(uint32_t{1} << r0)];
        for (uint32_t c : cm) {
          T acc = zero_;
          std::size_t pos = 0;
          for (uint32_t rest = c; rest; rest &= rest - 1, ++pos) {
            const uint32_t bit = rest & (~rest + 1);
            const T& a = m_(r0, static_cast<std::size_t>(std::countr_zero(bit)));
            if (is_zero_value(a)) continue;
            const T& sub = level_[prev_row * prev_cols + ci_.rank[c & ~bit]];
            if (is_zero_value(sub)) continue;
            if (pos % 2 == 0) {
              acc += a * sub;
            } else {
              acc -= a * sub;
            }
          }
          cur.push_back(std::move(acc));
        }
      }
    }
    level_ = std::move(cur);
    return level_;
  }

 private:
  static std::size_t checked(std::size_t d) {
    if (d > kMaxMinorDimension) throw std::invalid_argument("matrix too large for minor enumeration");
    return d;
  }

  const Matrix<T>& m_;
  T zero_;
  std::size_t rows_, cols_;
  SubsetIndex ri_{rows_}, ci_{cols_};
  std::size_t k_ = 0;
  std::vector<T> level_;
};

template <class T>
std::vector<T> minors_at(const Matrix<T>& m, std::size_t k, T zero) {
  MinorEngine<T> e(m, std::move(zero));
  if (k < 1 || k > e.max_k()) throw std::invalid_argument("minor size out of range");
  for (std::size_t i = 1; i < k; ++i) e.next();
  return e.next();
}

template <class T>
std::vector<std::vector<T>> minors_all(const Matrix<T>& m, T zero) {
  MinorEngine<T> e(m, std::move(zero));
  std::vector<std::vector<T>> out;
  for (std::size_t k = 1; k <= e.max_k(); ++k) out.push_back(e.next());
  return out;
}

MultiPoly multi_zero(const MultiPolyMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_zero()) return MultiPoly(m(i, j).nvars(), m(i, j).order());
    }
  }
  return MultiPoly();
}

std::size_t count_trivial_prefix(const std::vector<Ideal>& ideals) {
  std::size_t k = 0;
  while (k < ideals.size() && ideals[k].is_trivial()) ++k;
  return k;
}

std::vector<std::string> names_for(const IdealProfile& p, std::span<const std::string> names) {
  if (!names.empty()) return {names.begin(), names.end()};
  if (p.ring == Ring::ZX) return default_variable_names(p.ideals.empty() ? 1 : p.ideals.front().nvars());
  return {"x"};
}

}  // namespace

std::vector<ZPoly> minors_k(const ZPolyMatrix& m, std::size_t k) { return minors_at(m, k, ZPoly()); }
std::vector<MultiPoly> minors_k(const MultiPolyMatrix& m, std::size_t k) { return minors_at(m, k, multi_zero(m)); }
std::vector<Integer> minors_k(const IntMatrix& m, std::size_t k) { return minors_at(m, k, Integer(0)); }

std::vector<std::vector<MultiPoly>> all_minors(const MultiPolyMatrix& m) { return minors_all(m, multi_zero(m)); }
std::vector<std::vector<ZPoly>> all_minors(const ZPolyMatrix& m) { return minors_all(m, ZPoly()); }

Ideal ideal_from_generators(Ring ring, int nvars, MonomialOrder order, std::vector<MultiPoly> gens) {
  std::erase_if(gens, [](const MultiPoly& p) { return p.is_zero(); });
  for (auto& p : gens) {
    if (p.lc().sign() < 0) p = -p;
  }
  std::sort(gens.begin(), gens.end(), [](const MultiPoly& a, const MultiPoly& b) { return compare(a, b) < 0; });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  if (ring == Ring::Qx) return Ideal(ring, nvars, order, std::move(gens));
  StrongGroebner sg(nvars, order);
  for (const auto& p : gens) {
    if (p.is_constant() && p.lc().is_one()) {
      return Ideal::from_canonical(ring, nvars, order, {p});
    }
  }
  for (const auto& p : gens) {
    sg.add(p);
    if (sg.is_unit()) break;
  }
  return Ideal::from_canonical(ring, nvars, order, sg.basis());
}

const Ideal& IdealProfile::ideal(std::size_t k) const {
  if (k < 1 || k > ideals.size()) throw std::out_of_range("ideal index out of range");
  return ideals[k - 1];
}

IdealProfile determinantal_ideals(const IntMatrix& m, Ring ring) {
  if (!m.is_square()) throw std::invalid_argument("characteristic ideals need a square matrix");
  IdealProfile p;
  p.ring = ring;
  const ZPolyMatrix cm = char_matrix(m);
  if (ring == Ring::Qx) {
    for (const QPoly& d : snf_poly_q(to_rational(cm)).deltas()) {
      std::vector<MultiPoly> b;
      if (!d.is_zero()) b.push_back(MultiPoly::from_univariate(primitive_integer_multiple(d)));
      p.ideals.push_back(Ideal::from_canonical(Ring::Qx, 1, MonomialOrder::DegRevLex, std::move(b)));
    }
  } else if (ring == Ring::Zx) {
    for (auto& level : all_minors(cm)) {
      std::vector<MultiPoly> gens;
      gens.reserve(level.size());
      for (const ZPoly& q : level) {
        if (!q.is_zero()) gens.push_back(MultiPoly::from_univariate(q));
      }
      p.ideals.push_back(ideal_from_generators(Ring::Zx, 1, MonomialOrder::DegRevLex, std::move(gens)));
    }
  } else {
    throw std::invalid_argument("characteristic ideals are univariate; use multivariate_ideals");
  }
  p.corank = count_trivial_prefix(p.ideals);
  return p;
}

IdealProfile determinantal_ideals(const Graph& g, MatrixKind kind, Ring ring) {
  IdealProfile p = determinantal_ideals(build_matrix(g, kind), ring);
  p.graph = write_graph6(g);
  p.kind = kind;
  return p;
}

std::vector<Ideal> determinantal_ideals(const MultiPolyMatrix& m) {
  const MultiPoly zero = multi_zero(m);
  std::vector<Ideal> out;
  for (auto& level : all_minors(m)) {
    out.push_back(ideal_from_generators(Ring::ZX, zero.nvars(), zero.order(), std::move(level)));
  }
  return out;
}

IdealProfile multivariate_ideals(const Graph& g, MatrixKind kind, bool override_guard) {
  if (g.order() > kMultivariateVertexLimit && !override_guard) {
    throw SizeGuardExceeded("multivariate ideals limited to " + std::to_string(kMultivariateVertexLimit) +
                            " vertices without override");
  }
  IdealProfile p;
  p.graph = write_graph6(g);
  p.kind = kind;
  p.ring = Ring::ZX;
  p.ideals = determinantal_ideals(generalized_char_matrix(g, kind));
  p.corank = count_trivial_prefix(p.ideals);
  return p;
}

std::size_t corank(const IdealProfile& profile) { return count_trivial_prefix(profile.ideals); }

std::vector<Integer> evaluate_profile(const IdealProfile& profile, std::span<const Integer> point) {
  if (profile.ring == Ring::Qx) throw std::invalid_argument("evaluation needs an integral profile");
  std::vector<Integer> out;
  for (const Ideal& I : profile.ideals) {
    if (point.size() != static_cast<std::size_t>(I.nvars())) throw std::invalid_argument("evaluation point arity mismatch");
    Integer g(0);
    for (const MultiPoly& b : I.canonical_basis()) g = gcd(g, b.eval(point));
    out.push_back(g);
  }
  return out;
}

VarietyDescription variety(const IdealProfile& profile, std::size_t k) {
  if (profile.ring == Ring::ZX) throw std::invalid_argument("varieties are computed for univariate profiles only");
  const Ideal& I = profile.ideal(k);
  VarietyDescription v;
  v.k = k;
  if (I.is_zero()) {
    v.extent = VarietyDescription::Extent::Everything;
    return v;
  }
  QPoly g;
  if (profile.ring == Ring::Qx) {
    g = I.monic_generator();
  } else {
    for (const MultiPoly& b : I.canonical_basis()) {
      QPoly q = to_rational(b.to_univariate());
      g = g.is_zero() ? monic(q) : gcd_poly_q(g, q);
    }
  }
  v.squarefree = squarefree_part(g);
  if (v.squarefree.degree() == 0) {
    v.extent = VarietyDescription::Extent::Empty;
    return v;
  }
  v.rational_roots = rational_roots(primitive_integer_multiple(v.squarefree));
  return v;
}

bool divides_in_algebraic_integers(const Integer& delta, const ZPoly& p) {
  if (delta.is_zero()) throw std::invalid_argument("divisibility test needs a nonzero delta");
  if (p.degree() < 1 || !p.lc().is_one()) throw std::invalid_argument("divisibility test needs a monic polynomial");
  const Integer c0 = p.coeff(0);
  if (c0.is_zero()) throw std::invalid_argument("divisibility test needs p(0) != 0");
  // r(y) = y^d p(delta / y) has coefficient p_i delta^i at y^(d-i); its roots
  // are delta / lambda, and r / p(0) is monic.
  Integer power(1);
  for (int i = 0; i <= p.degree(); ++i) {
    if (!Integer::divides(c0, p.coeff(i) * power)) return false;
    power *= delta;
  }
  return true;
}

bool roots_divide(const Integer& delta, const QPoly& squarefree) {
  if (delta.is_zero()) throw std::invalid_argument("root divisibility needs a nonzero delta");
  if (squarefree.degree() < 1) return true;
  QPoly rest = monic(squarefree);
  for (const Rational& r : rational_roots(primitive_integer_multiple(rest))) {
    if (!r.den().is_one() || r.num().is_zero() || !Integer::divides(r.num(), delta)) return false;
    rest = divmod(rest, QPoly{-r, Rational(1)}).first;
  }
  if (rest.degree() < 1) return true;
  std::vector<Integer> c;
  for (const Rational& v : rest.coeffs()) {
    if (!v.den().is_one()) return false;
    c.push_back(v.num());
  }
  return divides_in_algebraic_integers(delta, ZPoly(std::move(c)));
}

std::string profile_to_json(const IdealProfile& profile, std::span<const std::string> names) {
  const auto vn = names_for(profile, names);
  nlohmann::ordered_json j;
  j["graph"] = profile.graph;
  j["matrix"] = std::string(kind_name(profile.kind));
  j["ring"] = std::string(ring_name(profile.ring));
  j["corank"] = profile.corank;
  j["ideals"] = nlohmann::ordered_json::array();
  for (std::size_t k = 1; k <= profile.size(); ++k) {
    j["ideals"].push_back({{"k", k}, {"basis", profile.ideal(k).basis_strings(vn)}});
  }
  if (profile.ring != Ring::ZX) {
    j["varieties"] = nlohmann::ordered_json::array();
    for (std::size_t k = 1; k <= profile.size(); ++k) {
      VarietyDescription v = variety(profile, k);
      nlohmann::ordered_json e{{"k", k}};
      switch (v.extent) {
        case VarietyDescription::Extent::Empty:
          e["squarefree"] = "1";
          break;
        case VarietyDescription::Extent::Everything:
          e["squarefree"] = "0";
          break;
        case VarietyDescription::Extent::Finite:
          e["squarefree"] = v.squarefree.to_string(vn.front());
          break;
      }
      std::vector<std::string> roots;
      for (const auto& r : v.rational_roots) roots.push_back(r.to_string());
      e["rational_roots"] = roots;
      j["varieties"].push_back(std::move(e));
    }
  }
  return j.dump(2) + "\n";
}

std::string profile_to_text(const IdealProfile& profile, std::span<const std::string> names) {
  const auto vn = names_for(profile, names);
  std::string out;
  for (std::size_t k = 1; k <= profile.size(); ++k) {
    out += "k=" + std::to_string(k) + ": [";
    const auto b = profile.ideal(k).basis_strings(vn);
    for (std::size_t i = 0; i < b.size(); ++i) out += (i ? ", " : "") + b[i];
    out += "]\n";
  }
  out += "corank: " + std::to_string(profile.corank) + "\n";
  return out;
}

MultiPolyMatrix bipartite_distlap_representative(std::size_t a, std::size_t b, bool star) {
  constexpr MonomialOrder kOrder = MonomialOrder::Lex;
  auto c = [](long v) { return MultiPoly::constant(2, kOrder, Integer(v)); };
  const MultiPoly n = MultiPoly::variable(2, kOrder, 0);
  const MultiPoly m = star ? c(1) : MultiPoly::variable(2, kOrder, 1);
  const MultiPoly first_diag = c(2) * n + m - c(2);
  const MultiPoly second_diag = n + c(2) * m - c(2);
  MultiPolyMatrix f(a + b, a + b, MultiPoly(2, kOrder));
  for (std::size_t i = 0; i < a + b; ++i) {
    for (std::size_t j = 0; j < a + b; ++j) {
      const bool fi = i < a, fj = j < a;
      if (fi != fj) {
        f(i, j) = c(-1);
      } else if (i != j) {
        f(i, j) = c(-2);
      } else {
        f(i, j) = fi ? first_diag : second_diag;
      }
    }
  }
  return f;
}

}  // namespace detideal
