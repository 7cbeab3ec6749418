#include "detideal/groebner.hpp"

#include <algorithm>
#include <stdexcept>

namespace detideal {

Integer symmetric_quotient(const Integer& c, const Integer& b) {
  if (b.is_zero()) throw std::domain_error("symmetric division by zero");
  const Integer a = b.abs();
  Integer r = Integer::mod_floor(c, a);
  if (r + r > a) r -= a;
  Integer q = Integer::div_exact(c - r, a);
  return b.sign() < 0 ? -q : q;
}

namespace {

// Index of the reducer with the smallest |lc| whose leading monomial divides m,
// or -1. The smallest one is the only candidate that can shrink a coefficient
// when none of the larger ones could.
int find_reducer(const Monomial& m, const std::vector<MultiPoly>& by, std::size_t skip) {
  int best = -1;
  for (std::size_t i = 0; i < by.size(); ++i) {
    if (i == skip || by[i].is_zero()) continue;
    if (!by[i].lm().divides(m)) continue;
    if (best < 0 || by[i].lc().abs() < by[static_cast<std::size_t>(best)].lc().abs()) best = static_cast<int>(i);
  }
  return best;
}

// Reduces the terms of f from position `start` on. Terms before `start` are
// never touched because every subtracted multiple lies strictly below them.
MultiPoly reduce_from(MultiPoly f, std::size_t start, const std::vector<MultiPoly>& by, std::size_t skip) {
  std::size_t pos = start;
  while (pos < f.size()) {
    const Term& t = f.terms()[pos];
    int r = find_reducer(t.mono, by, skip);
    if (r < 0) {
      ++pos;
      continue;
    }
    const MultiPoly& g = by[static_cast<std::size_t>(r)];
    Integer q = symmetric_quotient(t.coeff, g.lc());
    if (q.is_zero()) {
      ++pos;
      continue;
    }
    Monomial shift = t.mono / g.lm();
    f.subtract_multiple(q, shift, g);
  }
  return f;
}

MultiPoly positive(MultiPoly f) {
  if (!f.is_zero() && f.lc().sign() < 0) f = -f;
  return f;
}

bool term_divides(const MultiPoly& a, const MultiPoly& b) {
  return a.lm().divides(b.lm()) && Integer::divides(a.lc(), b.lc());
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
};

// Turns a Groebner basis into the canonical minimal reduced form.
std::vector<MultiPoly> canonicalize(std::vector<MultiPoly> g, MonomialOrder order) {
  for (auto& p : g) p = positive(std::move(p));
  g.erase(std::remove_if(g.begin(), g.end(), [](const MultiPoly& p) { return p.is_zero(); }), g.end());
  for (const auto& p : g) {
    if (p.is_constant() && p.lc().is_one()) return {p};
  }
  std::vector<MultiPoly> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j || !term_divides(g[j], g[i])) continue;
      // Identical leading terms: keep the earliest.
      bool same = g[j].lm() == g[i].lm() && g[j].lc() == g[i].lc();
      redundant = !same || j < i;
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  std::vector<MultiPoly> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) reduced.push_back(reduce_from(minimal[i], 1, minimal, i));
  std::sort(reduced.begin(), reduced.end(), [order](const MultiPoly& a, const MultiPoly& b) {
    int c = compare(a.lm(), b.lm(), order);
    if (c != 0) return c < 0;
    return a.lc() < b.lc();
  });
  return reduced;
}

}  // namespace

MultiPoly reduce_full(const MultiPoly& f, const std::vector<MultiPoly>& by) {
  return reduce_from(f, 0, by, by.size());
}

StrongGroebner::StrongGroebner(int nvars, MonomialOrder order) : nvars_(nvars), order_(order) {}

bool StrongGroebner::is_unit() const noexcept {
  return basis_.size() == 1 && basis_[0].is_constant() && basis_[0].lc().is_one();
}

MultiPoly StrongGroebner::normal_form(const MultiPoly& f) const { return reduce_full(f, basis_); }

bool StrongGroebner::add(const MultiPoly& f) {
  if (f.nvars() != nvars_ || f.order() != order_) throw std::invalid_argument("generator from a different ring");
  if (is_unit()) return false;
  MultiPoly r = positive(normal_form(f));
  if (r.is_zero()) return false;
  std::vector<MultiPoly> work = basis_;
  std::size_t first_new = work.size();
  work.push_back(std::move(r));
  complete(std::move(work), first_new);
  return true;
}

void StrongGroebner::add_all(const std::vector<MultiPoly>& gens) {
  if (is_unit()) return;
  std::vector<MultiPoly> work = basis_;
  std::size_t first_new = work.size();
  for (const auto& f : gens) {
    if (f.nvars() != nvars_ || f.order() != order_) throw std::invalid_argument("generator from a different ring");
    MultiPoly r = positive(reduce_full(f, work));
    if (!r.is_zero()) work.push_back(std::move(r));
  }
  if (work.size() == first_new) return;
  complete(std::move(work), first_new);
}

void StrongGroebner::complete(std::vector<MultiPoly> initial, std::size_t first_new) {
  // polys[i] stays addressable by index; retired entries become zero.
  std::vector<MultiPoly> polys(initial.begin(), initial.begin() + static_cast<long>(first_new));
  std::vector<Pair> pairs;
  std::vector<MultiPoly> pending(initial.begin() + static_cast<long>(first_new), initial.end());
  bool unit = false;

  // Reduces h against the live set and inserts it. Live elements whose leading
  // term is divisible by the new one are retired and queued for re-insertion,
  // which keeps the reducer set minimal and coefficients small.
  auto insert = [&](MultiPoly h) {
    h = positive(reduce_full(h, polys));
    if (h.is_zero()) return;
    if (h.is_constant() && h.lc().is_one()) {
      unit = true;
      return;
    }
    for (auto& g : polys) {
      if (!g.is_zero() && term_divides(h, g)) {
        pending.push_back(std::move(g));
        g = MultiPoly(nvars_, order_);
      }
    }
    std::size_t idx = polys.size();
    for (std::size_t j = 0; j < idx; ++j) {
      if (!polys[j].is_zero()) pairs.push_back({j, idx, lcm(polys[j].lm(), h.lm())});
    }
    polys.push_back(std::move(h));
  };
  auto drain = [&] {
    while (!pending.empty() && !unit) {
      MultiPoly h = std::move(pending.back());
      pending.pop_back();
      insert(std::move(h));
    }
  };

  drain();
  while (!pairs.empty() && !unit) {
    // Normal selection: smallest lcm first.
    auto it = std::min_element(pairs.begin(), pairs.end(), [this](const Pair& a, const Pair& b) {
      return compare(a.lcm, b.lcm, order_) < 0;
    });
    Pair p = *it;
    *it = pairs.back();
    pairs.pop_back();
    if (polys[p.i].is_zero() || polys[p.j].is_zero()) continue;

    const MultiPoly f = polys[p.i];
    const MultiPoly g = polys[p.j];
    const Integer& a = f.lc();
    const Integer& b = g.lc();
    const Monomial mf = p.lcm / f.lm();
    const Monomial mg = p.lcm / g.lm();

    // Buchberger's criterion for the S-polynomial: coprime leading terms.
    bool skip_s = f.lm().coprime(g.lm()) && gcd(a, b).is_one();
    if (!skip_s) {
      Integer l = lcm(a, b);
      MultiPoly s = f.times_term(Integer::div_exact(l, a), mf);
      s.subtract_multiple(Integer::div_exact(l, b), mg, g);
      pending.push_back(std::move(s));
    }
    // The G-polynomial is only needed when neither coefficient divides the other.
    if (!Integer::divides(a, b) && !Integer::divides(b, a)) {
      Integer s, t;
      gcd_ext(a, b, s, t);
      MultiPoly gp = f.times_term(s, mf);
      gp.subtract_multiple(-t, mg, g);
      pending.push_back(std::move(gp));
    }
    drain();
  }
  if (unit) {
    basis_ = {MultiPoly::constant(nvars_, order_, Integer(1))};
    return;
  }
  std::erase_if(polys, [](const MultiPoly& q) { return q.is_zero(); });
  basis_ = canonicalize(std::move(polys), order_);
}

std::vector<MultiPoly> strong_groebner_basis(const std::vector<MultiPoly>& gens) {
  if (gens.empty()) return {};
  StrongGroebner sg(gens.front().nvars(), gens.front().order());
  for (const auto& g : gens) sg.add(g);
  return sg.basis();
}

}  // namespace detideal
