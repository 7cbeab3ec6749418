#include "detideal/cli/suites.hpp"

#include <array>
#include <functional>
#include <map>
#include <stdexcept>

#include "detideal/detideals.hpp"
#include "detideal/enumerate.hpp"
#include "detideal/smith.hpp"
#include "detideal/survey.hpp"

namespace detideal::cli {

namespace {

class Checks {
 public:
  // Records the outcome of f; an exception counts as a failure.
  void run(std::string name, const std::function<bool(std::string&)>& f) {
    SuiteCheck c{std::move(name), false, {}};
    try {
      c.passed = f(c.detail);
    } catch (const std::exception& e) {
      c.passed = false;
      c.detail = std::string("exception: ") + e.what();
    }
    out_.push_back(std::move(c));
  }
  void expect(std::string name, bool ok, std::string detail = {}) {
    out_.push_back({std::move(name), ok, std::move(detail)});
  }
  void append(std::vector<SuiteCheck> more) {
    for (auto& c : more) out_.push_back(std::move(c));
  }
  std::vector<SuiteCheck> take() { return std::move(out_); }

 private:
  std::vector<SuiteCheck> out_;
};

Ideal zx(std::initializer_list<const char*> gens, std::string_view var = "x") {
  std::vector<ZPoly> g;
  for (const char* s : gens) g.push_back(parse_univariate(s, var));
  return Ideal::zx(g);
}

Ideal zX(int nvars, std::initializer_list<const char*> gens) {
  auto names = default_variable_names(nvars);
  std::vector<MultiPoly> g;
  for (const char* s : gens) g.push_back(parse_polynomial(s, names));
  return Ideal(Ring::ZX, nvars, MonomialOrder::DegRevLex, g);
}

const std::vector<std::string> kNM{"n", "m"};

Ideal nm(std::initializer_list<const char*> gens) {
  std::vector<MultiPoly> g;
  for (const char* s : gens) g.push_back(parse_polynomial(s, kNM, MonomialOrder::Lex));
  return Ideal(Ring::ZX, 2, MonomialOrder::Lex, g);
}

std::string join_ints(const std::vector<Integer>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].to_string();
  return s;
}

std::string basis_text(const Ideal& I, std::string_view var = "x") {
  std::vector<std::string> names{std::string(var)};
  std::string s = "[";
  auto b = I.nvars() == 1 ? I.basis_strings(names) : I.basis_strings();
  for (std::size_t i = 0; i < b.size(); ++i) s += (i ? ", " : "") + b[i];
  return s + "]";
}

std::vector<Integer> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

Graph fig1_graph() { return Graph(6, {{0, 1}, {0, 2}, {0, 4}, {1, 3}, {1, 4}, {2, 3}, {2, 5}, {3, 5}, {4, 5}}); }
Graph fig2_g1() { return Graph(6, {{0, 1}, {1, 2}, {1, 3}, {2, 4}, {3, 4}, {2, 3}, {4, 5}}); }
Graph fig2_g2() { return Graph(6, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {2, 5}, {4, 5}}); }

std::vector<SuiteCheck> suite_c4() {
  Checks c;
  c.run("critical ideals of C4", [](std::string& d) {
    IdealProfile p = multivariate_ideals(cycle_graph(4), MatrixKind::Adjacency);
    d = "k=3 " + basis_text(p.ideal(3)) + " k=4 " + basis_text(p.ideal(4));
    return p.ideal(1).is_trivial() && p.ideal(2).is_trivial() &&
           ideal_equal(p.ideal(3), zX(4, {"x0+x2", "x1+x3", "x2*x3"})) &&
           ideal_equal(p.ideal(4), zX(4, {"x0*x1*x2*x3-x0*x1-x0*x3-x1*x2-x2*x3"}));
  });
  c.run("algebraic co-rank 2", [](std::string& d) {
    auto g = multivariate_ideals(cycle_graph(4), MatrixKind::Adjacency).corank;
    d = std::to_string(g);
    return g == 2;
  });
  c.run("evaluation at degrees gives the critical group Z4", [](std::string& d) {
    IdealProfile p = multivariate_ideals(cycle_graph(4), MatrixKind::Adjacency);
    auto delta = evaluate_profile(p, std::vector<Integer>(4, Integer(2)));
    GroupDescription k = cokernel(snf_integer(build_matrix(cycle_graph(4), MatrixKind::Laplacian)));
    d = "Delta=" + join_ints(delta);
    return delta == ints({1, 1, 4, 0}) && k.torsion == ints({4});
  });
  c.run("evaluation at zero gives the Smith group Z^2", [](std::string& d) {
    IdealProfile p = multivariate_ideals(cycle_graph(4), MatrixKind::Adjacency);
    auto delta = evaluate_profile(p, std::vector<Integer>(4, Integer(0)));
    GroupDescription s = cokernel(snf_integer(build_matrix(cycle_graph(4), MatrixKind::Adjacency)));
    d = "Delta=" + join_ints(delta) + " free rank " + std::to_string(s.free_rank);
    return delta == ints({1, 1, 0, 0}) && s.torsion.empty() && s.free_rank == 2;
  });
  return c.take();
}

std::vector<SuiteCheck> suite_k33() {
  Checks c;
  const Graph k33 = complete_bipartite_graph(3, 3);
  c.run("Laplacian characteristic ideals of K3,3", [&](std::string& d) {
    IdealProfile p = determinantal_ideals(k33, MatrixKind::Laplacian, Ring::Zx);
    d = "k=5 " + basis_text(p.ideal(5));
    return p.ideal(1).is_trivial() && p.ideal(2).is_trivial() && ideal_equal(p.ideal(3), zx({"x-3"})) &&
           ideal_equal(p.ideal(4), zx({"(x-3)^2"})) && ideal_equal(p.ideal(5), zx({"(x-3)^3*(x+9)", "3(x-3)^3"})) &&
           ideal_equal(p.ideal(6), zx({"x*(x-3)^4*(x-6)"}));
  });
  c.run("Smith form of L(K3,3)", [&](std::string& d) {
    SnfInteger s = snf_integer(build_matrix(k33, MatrixKind::Laplacian));
    d = join_ints(s.invariant_factors) + " rank " + std::to_string(s.rank());
    return s.invariant_factors == ints({1, 1, 3, 3, 9}) && s.rank() == 5;
  });
  c.run("evaluation at x=0", [&](std::string& d) {
    IdealProfile p = determinantal_ideals(k33, MatrixKind::Laplacian, Ring::Zx);
    Integer zero(0);
    auto delta = evaluate_profile(p, std::span(&zero, 1));
    d = join_ints(delta);
    return delta == ints({1, 1, 3, 9, 81, 0});
  });
  c.run("variety of the sixth ideal", [&](std::string& d) {
    VarietyDescription v = variety(determinantal_ideals(k33, MatrixKind::Laplacian, Ring::Zx), 6);
    d = v.squarefree.to_string();
    return v.rational_roots == std::vector<Rational>{Rational(0), Rational(3), Rational(6)};
  });
  return c.take();
}

std::vector<SuiteCheck> suite_ltimes() {
  Checks c;
  const Graph g = parse_graph6("Dt_");
  c.run("adjacency characteristic ideals of Dt_", [&](std::string& d) {
    IdealProfile p = determinantal_ideals(g, MatrixKind::Adjacency, Ring::Zx);
    d = "k=4 " + basis_text(p.ideal(4), "t") + " k=5 " + basis_text(p.ideal(5), "t") + " corank " +
        std::to_string(p.corank);
    bool trivial = p.ideal(1).is_trivial() && p.ideal(2).is_trivial() && p.ideal(3).is_trivial();
    return trivial && ideal_equal(p.ideal(4), zx({"2", "t+1"}, "t")) &&
           ideal_equal(p.ideal(5), zx({"t^5-5t^3-2t^2+2t"}, "t")) && p.corank == 3;
  });
  c.run("distance characteristic ideals of Dt_", [&](std::string& d) {
    IdealProfile p = determinantal_ideals(g, MatrixKind::Distance, Ring::Zx);
    d = "k=4 " + basis_text(p.ideal(4), "t") + " k=5 " + basis_text(p.ideal(5), "t");
    return ideal_equal(p.ideal(4), zx({"6", "t-1"}, "t")) &&
           ideal_equal(p.ideal(5), zx({"t^5-25t^3-70t^2-66t-20"}, "t"));
  });
  return c.take();
}

std::vector<SuiteCheck> suite_appendix_b() {
  Checks c;
  Ideal I = zx({"x^3 + 1086*x^2 - 22022*x + 108388", "1106*x^2 - 22120*x + 108388"});
  Ideal J = zx({"x^3 - 20*x^2 + 98*x", "1106*x^2 - 22120*x + 108388"});
  c.run("canonical bases agree", [&](std::string& d) {
    d = basis_text(I);
    return ideal_equal(I, J);
  });
  c.run("mutual membership", [&](std::string&) { return mutually_contained(I, J); });
  return c.take();
}

std::vector<SuiteCheck> suite_kn_formula() {
  Checks c;
  for (int n = 2; n <= 8; ++n) {
    c.run("adjacency ideals of K" + std::to_string(n), [n](std::string& d) {
      IdealProfile p = determinantal_ideals(complete_graph(n), MatrixKind::Adjacency, Ring::Zx);
      ZPoly power = ZPoly::constant(Integer(1));
      const ZPoly xp1 = parse_univariate("x+1");
      for (int k = 1; k <= n - 1; ++k) {
        if (!ideal_equal(p.ideal(static_cast<std::size_t>(k)), Ideal::zx({power}))) {
          d = "k=" + std::to_string(k) + " " + basis_text(p.ideal(static_cast<std::size_t>(k)));
          return false;
        }
        power = power * xp1;
      }
      return ideal_equal(p.ideal(static_cast<std::size_t>(n)), Ideal::zx({ZPoly{Integer(1 - n), Integer(1)} * power}));
    });
    c.run("Smith form of A(K" + std::to_string(n) + ")", [n](std::string& d) {
      SnfInteger s = snf_integer(build_matrix(complete_graph(n), MatrixKind::Adjacency));
      std::vector<Integer> expect(static_cast<std::size_t>(n - 1), Integer(1));
      expect.push_back(Integer(n - 1));
      d = join_ints(s.invariant_factors);
      return s.invariant_factors == expect;
    });
  }
  return c.take();
}

std::vector<SuiteCheck> suite_fig2() {
  Checks c;
  const Graph g1 = fig2_g1(), g2 = fig2_g2();
  c.run("codet-Q keys equal", [&](std::string&) {
    return invariant_key(g1, MatrixKind::Adjacency, SurveyMode::CodetQ) ==
           invariant_key(g2, MatrixKind::Adjacency, SurveyMode::CodetQ);
  });
  c.run("rational ideals five and six", [&](std::string& d) {
    IdealProfile q = determinantal_ideals(g1, MatrixKind::Adjacency, Ring::Qx);
    d = "I5=" + q.ideal(5).monic_generator().to_string() + " I6=" + q.ideal(6).monic_generator().to_string();
    return q.ideal(5).monic_generator() == to_rational(parse_univariate("x+1")) &&
           q.ideal(6).monic_generator() == to_rational(parse_univariate("(x-1)*(x+1)^2*(x^3-x^2-5x+1)"));
  });
  c.run("codet-Z keys differ", [&](std::string&) {
    return !(invariant_key(g1, MatrixKind::Adjacency, SurveyMode::CodetZ) ==
             invariant_key(g2, MatrixKind::Adjacency, SurveyMode::CodetZ));
  });
  c.run("integral ideals", [&](std::string& d) {
    IdealProfile z1 = determinantal_ideals(g1, MatrixKind::Adjacency, Ring::Zx);
    IdealProfile z2 = determinantal_ideals(g2, MatrixKind::Adjacency, Ring::Zx);
    d = "G1 k=5 " + basis_text(z1.ideal(5)) + " G2 k=4 " + basis_text(z2.ideal(4)) + " G2 k=5 " +
        basis_text(z2.ideal(5));
    return z1.corank == 4 && z2.corank == 3 && ideal_equal(z1.ideal(5), zx({"2(x+1)", "(x+1)*(x^2+1)"})) &&
           ideal_equal(z2.ideal(4), zx({"2", "x+1"})) && ideal_equal(z2.ideal(5), zx({"4(x+1)", "(x+1)*(x-3)"}));
  });
  c.run("varieties agree for every k", [&](std::string&) {
    IdealProfile z1 = determinantal_ideals(g1, MatrixKind::Adjacency, Ring::Zx);
    IdealProfile z2 = determinantal_ideals(g2, MatrixKind::Adjacency, Ring::Zx);
    for (std::size_t k = 1; k <= 6; ++k) {
      if (!(variety(z1, k).squarefree == variety(z2, k).squarefree)) return false;
    }
    return true;
  });
  c.run("unique codet-Q pair on six vertices", [&](std::string& d) {
    SurveyReport r = run_survey(enumerate_connected(6), MatrixKind::Adjacency, SurveyMode::CodetQ);
    if (r.buckets.size() != 1) return false;
    const auto& b = r.buckets.front().graphs;
    d = b.front() + " " + b.back();
    const uint64_t c1 = canonical_code(g1), c2 = canonical_code(g2);
    const uint64_t b1 = canonical_code(parse_graph6(b.front())), b2 = canonical_code(parse_graph6(b.back()));
    return b.size() == 2 && ((b1 == c1 && b2 == c2) || (b1 == c2 && b2 == c1));
  });
  return c.take();
}

std::vector<SuiteCheck> suite_fig1() {
  Checks c;
  c.run("fourth critical ideal", [](std::string& d) {
    IdealProfile p = multivariate_ideals(fig1_graph(), MatrixKind::Adjacency);
    d = basis_text(p.ideal(4));
    return ideal_equal(p.ideal(4), zX(6, {"x0+x5-1", "x1+x5-1", "x2-x5", "x3-x5", "x4+x5-1", "x5^2-x5-1"})) &&
           ideal_member(parse_polynomial("x5^2-x5-1", default_variable_names(6)), p.ideal(4));
  });
  return c.take();
}

std::vector<SuiteCheck> suite_symbolic_bipartite() {
  Checks c;
  const Ideal l1 = nm({"4n^2-4n-3", "2n+1", "2n^2-n-1"});
  const Ideal l2 = nm({"4n^2+4n*m-8n+m^2-4m", "2n+m", "2n^2+5n*m-6n+2m^2-6m+3", "4n+2m-3", "2n+4m-3", "3", "n+2m",
                       "n^2+4n*m-4n+4m^2-8m"});
  c.run("star 2-minors generate <2n+1>", [&](std::string& d) {
    d = basis_text(l1);
    return ideal_equal(l1, nm({"2n+1"}));
  });
  c.run("bipartite 2-minors generate <3, n+2m>", [&](std::string& d) {
    d = basis_text(l2);
    return ideal_equal(l2, nm({"3", "n+2m"}));
  });
  c.run("m+n-1 is not in <3, n+2m>", [&](std::string&) {
    return !ideal_member(parse_polynomial("m+n-1", kNM, MonomialOrder::Lex), l2);
  });
  c.run("2(n+m)+1 is not in <3, n+2m>", [&](std::string&) {
    return !ideal_member(parse_polynomial("2(n+m)+1", kNM, MonomialOrder::Lex), l2);
  });
  c.run("representative matrices reproduce both ideals", [&](std::string& d) {
    auto star = determinantal_ideals(bipartite_distlap_representative(4, 1, true));
    auto gen = determinantal_ideals(bipartite_distlap_representative(4, 4, false));
    d = "star " + basis_text(star[1]) + " general " + basis_text(gen[1]);
    return star[0].is_trivial() && gen[0].is_trivial() && ideal_equal(star[1], l1) && ideal_equal(gen[1], l2);
  });
  return c.take();
}

std::string second_factor(const Graph& g, MatrixKind kind) {
  SnfInteger s = snf_integer(build_matrix(g, kind));
  return s.rank() >= 2 ? s.invariant_factors[1].to_string() : "-";
}

// Golden counts, indexed by order.
const std::map<int, std::array<long, 8>> kCodetTable = {
    {5, {0, 0, 0, 0, 0, 0, 0, 0}},
    {6, {2, 0, 4, 2, 0, 0, 0, 0}},
    {7, {63, 6, 115, 14, 22, 0, 43, 8}},
    {8, {1353, 464, 1611, 280, 658, 186, 745, 130}},
};
const std::map<int, std::array<long, 4>> kCospectralTable = {
    {5, {0, 0, 0, 0}},
    {6, {2, 4, 0, 0}},
    {7, {63, 115, 22, 43}},
    {8, {1353, 1611, 658, 745}},
};
const std::map<int, std::array<long, 4>> kCoinvariantTable = {
    {4, {4, 2, 2, 0}},
    {5, {20, 8, 15, 0}},
    {6, {112, 57, 102, 0}},
    {7, {853, 526, 835, 18}},
    {8, {11117, 8027, 11080, 455}},
};
const std::map<int, long> kConnectedCounts = {{4, 6}, {5, 21}, {6, 112}, {7, 853}, {8, 11117}};

std::vector<SuiteCheck> table_checks(const std::vector<int>& orders, unsigned workers, SurveyMode mode,
                                     const std::string& label) {
  Checks c;
  for (int n : orders) {
    std::vector<Graph> corpus;
    c.run(label + " n=" + std::to_string(n) + " corpus size", [&](std::string& d) {
      corpus = enumerate_connected(n);
      d = std::to_string(corpus.size());
      auto it = kConnectedCounts.find(n);
      return it != kConnectedCounts.end() && static_cast<long>(corpus.size()) == it->second;
    });
    for (std::size_t ki = 0; ki < 4; ++ki) {
      const MatrixKind kind = kAllKinds[ki];
      std::vector<std::pair<SurveyMode, long>> targets;
      if (mode == SurveyMode::CodetQ) {
        auto it = kCodetTable.find(n);
        if (it == kCodetTable.end()) continue;
        targets = {{SurveyMode::CodetQ, it->second[2 * ki]}, {SurveyMode::CodetZ, it->second[2 * ki + 1]}};
      } else if (mode == SurveyMode::Cospectral) {
        auto it = kCospectralTable.find(n);
        if (it == kCospectralTable.end()) continue;
        targets = {{mode, it->second[ki]}};
      } else {
        auto it = kCoinvariantTable.find(n);
        if (it == kCoinvariantTable.end()) continue;
        targets = {{mode, it->second[ki]}};
      }
      for (auto [m, expect] : targets) {
        c.run(label + " n=" + std::to_string(n) + " " + std::string(kind_name(kind)) + " " + std::string(mode_name(m)),
              [&, m = m, expect = expect](std::string& d) {
                SurveyOptions opt;
                opt.workers = workers;
                SurveyReport r = run_survey(corpus, kind, m, opt);
                d = std::to_string(r.with_mate) + " (expected " + std::to_string(expect) + ")";
                return static_cast<long>(r.with_mate) == expect;
              });
      }
    }
  }
  return c.take();
}

std::vector<int> orders_up_to(int lo, int hi) {
  std::vector<int> v;
  for (int n = lo; n <= hi; ++n) v.push_back(n);
  return v;
}

std::vector<SuiteCheck> suite_tables(const SuiteOptions& opt) {
  if (opt.max_n < 5 || opt.max_n > kMaxGeneratedVertices) throw std::invalid_argument("tables cover orders 5..8");
  Checks c;
  c.append(codeterminantal_table(orders_up_to(5, opt.max_n), opt.workers));
  c.append(cospectral_table(orders_up_to(5, opt.max_n), opt.workers));
  c.append(coinvariant_table(orders_up_to(4, opt.max_n), opt.workers));
  return c.take();
}

}  // namespace

std::vector<SuiteCheck> codeterminantal_table(const std::vector<int>& orders, unsigned workers) {
  return table_checks(orders, workers, SurveyMode::CodetQ, "codeterminantal");
}
std::vector<SuiteCheck> cospectral_table(const std::vector<int>& orders, unsigned workers) {
  return table_checks(orders, workers, SurveyMode::Cospectral, "cospectral");
}
std::vector<SuiteCheck> coinvariant_table(const std::vector<int>& orders, unsigned workers) {
  return table_checks(orders, workers, SurveyMode::Coinvariant, "coinvariant");
}

std::vector<SuiteCheck> determined_complete(int n_min, int n_max, unsigned workers) {
  Checks c;
  for (int n = n_min; n <= n_max; ++n) {
    const auto corpus = enumerate_connected(n);
    const Graph kn = complete_graph(n);
    for (MatrixKind kind : {MatrixKind::DistLap, MatrixKind::Laplacian}) {
      c.run("K" + std::to_string(n) + " determined by " + std::string(kind_name(kind)) + " Smith form",
            [&](std::string& d) {
              d = "second invariant factor " + second_factor(kn, kind);
              return verify_determined_by(corpus, kn, kind, SurveyMode::Coinvariant, workers);
            });
    }
  }
  return c.take();
}

std::vector<SuiteCheck> determined_star(int n_min, int n_max, unsigned workers) {
  Checks c;
  for (int n = n_min; n <= n_max; ++n) {
    const auto corpus = enumerate_connected(n);
    const Graph star = star_graph(n);
    c.run("K1," + std::to_string(n - 1) + " determined by distlap Smith form", [&](std::string& d) {
      d = "second invariant factor " + second_factor(star, MatrixKind::DistLap);
      return verify_determined_by(corpus, star, MatrixKind::DistLap, SurveyMode::Coinvariant, workers);
    });
  }
  return c.take();
}

std::vector<SuiteCheck> property_checks(int max_n, unsigned workers) {
  Checks c;
  const std::array<std::string, 7> names = {"containment chain",
                                            "Smith deltas equal brute-force minor gcds",
                                            "invariant factors form a divisibility chain",
                                            "integral and rational varieties agree",
                                            "variety roots divide Delta_k",
                                            "evaluation at 0 matches the integer Smith form",
                                            "regular graphs evaluate at r to the Laplacian"};
  for (int n = 1; n <= max_n; ++n) {
    const auto corpus = enumerate_connected(n);
    std::vector<std::array<std::string, 7>> failures(corpus.size());
    parallel_for(corpus.size(), workers, [&](std::size_t gi) {
      const Graph& g = corpus[gi];
      auto& fail = failures[gi];
      for (MatrixKind kind : kAllKinds) {
        const std::string tag = write_graph6(g) + " " + std::string(kind_name(kind));
        auto note = [&](int which, const std::string& extra) {
          if (fail[static_cast<std::size_t>(which)].empty()) fail[static_cast<std::size_t>(which)] = tag + extra;
        };
        const IntMatrix m = build_matrix(g, kind);
        const IdealProfile z = determinantal_ideals(g, kind, Ring::Zx);
        const IdealProfile q = determinantal_ideals(g, kind, Ring::Qx);
        for (std::size_t k = 1; k < z.size(); ++k) {
          for (const auto& b : z.ideal(k + 1).canonical_basis()) {
            if (!ideal_member(b, z.ideal(k))) note(0, " k=" + std::to_string(k));
          }
        }
        const SnfInteger s = snf_integer(m);
        const auto deltas = s.deltas();
        for (std::size_t k = 1; k <= static_cast<std::size_t>(n); ++k) {
          if (deltas[k - 1] != delta_bruteforce(m, k)) note(1, " k=" + std::to_string(k));
        }
        for (std::size_t j = 0; j + 1 < s.rank(); ++j) {
          if (!Integer::divides(s.invariant_factors[j], s.invariant_factors[j + 1])) note(2, "");
        }
        for (std::size_t k = 1; k <= z.size(); ++k) {
          const VarietyDescription vz = variety(z, k), vq = variety(q, k);
          if (!(vz.squarefree == vq.squarefree) || vz.extent != vq.extent) note(3, " k=" + std::to_string(k));
          if (!deltas[k - 1].is_zero() && vz.extent == VarietyDescription::Extent::Finite &&
              !roots_divide(deltas[k - 1], vz.squarefree)) {
            note(4, " k=" + std::to_string(k));
          }
        }
        const Integer zero(0);
        if (evaluate_profile(z, std::span(&zero, 1)) != snf_integer(negate(m)).deltas()) note(5, "");
        if (kind == MatrixKind::Adjacency && g.is_regular()) {
          const Integer r(g.degree(0));
          if (evaluate_profile(z, std::span(&r, 1)) != snf_integer(build_matrix(g, MatrixKind::Laplacian)).deltas()) {
            note(6, "");
          }
        }
      }
    });
    for (std::size_t which = 0; which < names.size(); ++which) {
      std::string witness;
      for (const auto& f : failures) {
        if (!f[which].empty()) {
          witness = f[which];
          break;
        }
      }
      c.expect(names[which] + " (n=" + std::to_string(n) + ", " + std::to_string(corpus.size()) + " graphs)",
               witness.empty(), witness.empty() ? "" : "witness " + witness);
    }
  }
  return c.take();
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"c4",          "k33",          "ltimes",           "appendixB",
                                                 "kn-formula",  "fig2",         "fig1-critical",    "symbolic-bipartite",
                                                 "determined-complete", "determined-star", "tables", "properties"};
  return names;
}

bool has_suite(std::string_view name) {
  for (const auto& n : suite_names()) {
    if (n == name) return true;
  }
  return false;
}

std::vector<SuiteCheck> run_suite(std::string_view name, const SuiteOptions& options) {
  if (name == "c4") return suite_c4();
  if (name == "k33") return suite_k33();
  if (name == "ltimes") return suite_ltimes();
  if (name == "appendixB") return suite_appendix_b();
  if (name == "kn-formula") return suite_kn_formula();
  if (name == "fig2") return suite_fig2();
  if (name == "fig1-critical") return suite_fig1();
  if (name == "symbolic-bipartite") return suite_symbolic_bipartite();
  if (name == "determined-complete") return determined_complete(4, options.max_n, options.workers);
  if (name == "determined-star") return determined_star(4, options.max_n, options.workers);
  if (name == "tables") return suite_tables(options);
  if (name == "properties") return property_checks(std::min(options.max_n, 6), options.workers);
  throw std::invalid_argument("unknown suite: " + std::string(name));
}

bool all_passed(const std::vector<SuiteCheck>& checks) {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

std::string render_checks(const std::vector<SuiteCheck>& checks) {
  std::string out;
  for (const auto& c : checks) {
    out += (c.passed ? "PASS  " : "FAIL  ") + c.name;
    if (!c.detail.empty()) out += "  (" + c.detail + ")";
    out += "\n";
  }
  return out;
}

}  // namespace detideal::cli
