#include "detideal/cli/app.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "detideal/cli/suites.hpp"
#include "detideal/detideals.hpp"
#include "detideal/enumerate.hpp"
#include "detideal/smith.hpp"
#include "detideal/survey.hpp"

namespace detideal::cli {

namespace {

// Thrown for bad user input; mapped to kExitInputError.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when a run needs an explicit opt-in; mapped to kExitGuardRefused.
struct GuardRefusal : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GraphSource {
  std::vector<std::string> inline_graphs;
  std::string input;
  std::vector<std::string> families;

  void add_to(CLI::App* cmd) {
    cmd->add_option("graphs", inline_graphs, "graph6 strings; '-' reads stdin");
    cmd->add_option("--input,-i", input, "graph6 file, one graph per line; '-' for stdin");
    cmd->add_option("--family", families, "named graph such as complete:5, star:4, complete_bipartite:3,3");
  }

  std::vector<Graph> load(std::istream& in) const {
    std::vector<Graph> out;
    auto read_stream = [&](std::istream& s) {
      std::stringstream buf;
      buf << s.rdbuf();
      for (auto& g : read_graph6_lines(buf.str())) out.push_back(std::move(g));
    };
    if (!input.empty()) {
      if (input == "-") {
        read_stream(in);
      } else {
        std::ifstream f(input);
        if (!f) throw InputError("cannot open " + input);
        read_stream(f);
      }
    }
    for (const auto& s : inline_graphs) {
      if (s == "-") {
        read_stream(in);
      } else {
        out.push_back(parse_graph6(s));
      }
    }
    for (const auto& spec : families) {
      auto colon = spec.find(':');
      std::vector<int> params;
      if (colon != std::string::npos) {
        std::stringstream ps(spec.substr(colon + 1));
        std::string item;
        while (std::getline(ps, item, ',')) {
          try {
            params.push_back(std::stoi(item));
          } catch (const std::exception&) {
            throw InputError("bad family parameter in " + spec);
          }
        }
      }
      out.push_back(make_family(spec.substr(0, colon), params));
    }
    if (out.empty()) throw InputError("no input graphs");
    return out;
  }
};

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
  return s;
}

void check_format(const std::string& f, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed) {
    if (f == a) return;
  }
  throw InputError("unsupported format: " + f);
}

int cmd_ideals(const GraphSource& src, const std::string& matrix, const std::string& ring_s, const std::string& var,
               const std::string& format, bool override_guard, std::istream& in, std::ostream& out) {
  check_format(format, {"text", "json"});
  const MatrixKind kind = parse_kind(matrix);
  const Ring ring = parse_ring(ring_s);
  std::vector<std::string> names;
  if (ring != Ring::ZX) names.push_back(var);
  std::vector<std::string> docs;
  for (const Graph& g : src.load(in)) {
    IdealProfile p = ring == Ring::ZX ? multivariate_ideals(g, kind, override_guard) : determinantal_ideals(g, kind, ring);
    if (format == "json") {
      docs.push_back(profile_to_json(p, names));
    } else {
      out << "graph " << p.graph << "  matrix " << kind_name(kind) << "  ring " << ring_name(ring) << "\n"
          << profile_to_text(p, names);
    }
  }
  if (format == "json") {
    if (docs.size() == 1) {
      out << docs.front();
    } else {
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (const auto& d : docs) arr.push_back(nlohmann::ordered_json::parse(d));
      out << arr.dump(2) << "\n";
    }
  }
  return kExitOk;
}

int cmd_snf(const GraphSource& src, const std::string& matrix, const std::string& ring, const std::string& var,
            const std::string& format, std::istream& in, std::ostream& out) {
  check_format(format, {"text", "json"});
  const MatrixKind kind = parse_kind(matrix);
  if (ring != "Z" && ring != "Qx") throw InputError("snf ring must be Z or Qx");
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const Graph& g : src.load(in)) {
    std::vector<std::string> factors;
    nlohmann::ordered_json j{{"graph", write_graph6(g)}, {"matrix", std::string(kind_name(kind))}, {"ring", ring}};
    if (ring == "Z") {
      SnfInteger s = snf_integer(build_matrix(g, kind));
      for (const auto& f : s.padded()) factors.push_back(f.to_string());
      GroupDescription c = cokernel(s);
      std::vector<std::string> torsion;
      for (const auto& t : c.torsion) torsion.push_back(t.to_string());
      j["invariant_factors"] = factors;
      j["rank"] = s.rank();
      j["torsion"] = torsion;
      j["free_rank"] = c.free_rank;
    } else {
      SnfPoly s = snf_poly_q(to_rational(char_matrix(g, kind)));
      for (const auto& f : s.invariant_factors) factors.push_back(f.to_string(var));
      j["invariant_factors"] = factors;
    }
    if (format == "json") {
      arr.push_back(std::move(j));
    } else {
      out << join(factors, ring == "Z" ? "," : ", ") << "\n";
    }
  }
  if (format == "json") out << (arr.size() == 1 ? arr[0] : arr).dump(2) << "\n";
  return kExitOk;
}

struct SurveyArgs {
  int n = 0;
  std::vector<std::string> matrices;
  std::vector<std::string> modes;
  std::string format = "csv";
  std::string checkpoint;
  bool allow_large = false;
  bool no_prefilter = false;
};

int cmd_survey(const GraphSource& src, const SurveyArgs& a, unsigned workers, std::istream& in, std::ostream& out) {
  check_format(a.format, {"csv", "json"});
  std::vector<Graph> corpus;
  if (a.n > 0) {
    if (a.n > kMaxGeneratedVertices) {
      throw InputError("built-in corpus covers n <= " + std::to_string(kMaxGeneratedVertices) + "; pass --input");
    }
    corpus = enumerate_connected(a.n);
  } else {
    corpus = src.load(in);
  }
  if (!corpus.empty() && corpus.front().order() > kMaxGeneratedVertices && !a.allow_large) {
    throw GuardRefusal("surveys above " + std::to_string(kMaxGeneratedVertices) + " vertices need --allow-large");
  }
  std::vector<MatrixKind> kinds;
  for (const auto& m : a.matrices) kinds.push_back(parse_kind(m));
  if (kinds.empty()) kinds.assign(std::begin(kAllKinds), std::end(kAllKinds));
  std::vector<SurveyMode> modes;
  for (const auto& m : a.modes) modes.push_back(parse_mode(m));
  if (modes.empty()) modes.assign(std::begin(kAllModes), std::end(kAllModes));
  if (!a.checkpoint.empty() && kinds.size() * modes.size() != 1) {
    throw InputError("--checkpoint needs exactly one --matrix and one --mode");
  }
  SurveyOptions opt;
  opt.workers = workers;
  opt.prefilter = !a.no_prefilter;
  opt.checkpoint_path = a.checkpoint;
  if (a.format == "csv") out << report_csv_header();
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (MatrixKind k : kinds) {
    for (SurveyMode m : modes) {
      SurveyReport r = run_survey(corpus, k, m, opt);
      if (a.format == "csv") {
        out << report_csv_row(r) << std::flush;
      } else {
        arr.push_back(nlohmann::ordered_json::parse(report_json(r)));
      }
    }
  }
  if (a.format == "json") out << (arr.size() == 1 ? arr[0] : arr).dump(2) << "\n";
  return kExitOk;
}

int cmd_verify(const std::string& suite, const SuiteOptions& opt, std::ostream& out) {
  if (!has_suite(suite)) throw InputError("unknown suite: " + suite + " (known: " + join(suite_names(), ", ") + ")");
  auto checks = run_suite(suite, opt);
  out << render_checks(checks);
  const bool ok = all_passed(checks);
  out << (ok ? "suite " + suite + " passed\n" : "suite " + suite + " FAILED\n");
  return ok ? kExitOk : kExitVerifyFailed;
}

int cmd_gen(int n, std::ostream& out) {
  if (n < 1 || n > kMaxGeneratedVertices) {
    throw InputError("gen supports 1 <= n <= " + std::to_string(kMaxGeneratedVertices));
  }
  for (const Graph& g : enumerate_connected(n)) out << write_graph6(g) << "\n";
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Determinantal ideals, Smith forms and codeterminantal surveys of graphs", "detideal"};
  app.require_subcommand(1);
  unsigned workers = 0;
  app.add_option("--workers,-j", workers, "worker threads (default: DETIDEAL_WORKERS or all cores)")
      ->envname("DETIDEAL_WORKERS");

  std::string matrix, ring, var = "x", format = "text";
  bool override_guard = false;

  auto* ideals = app.add_subcommand("ideals", "determinantal ideals of one or more graphs");
  GraphSource ideals_src;
  ideals_src.add_to(ideals);
  ideals->add_option("--matrix,-m", matrix, "adjacency|laplacian|distance|distlap")->required();
  ideals->add_option("--ring,-r", ring, "Zx|Qx|ZX")->default_val("Zx");
  ideals->add_option("--var", var, "variable name for univariate output")->default_val("x");
  ideals->add_option("--format,-f", format, "text|json")->default_val("text");
  ideals->add_flag("--override-guard", override_guard, "allow multivariate ideals above the size guard");

  auto* snf = app.add_subcommand("snf", "Smith normal form over Z or Q[x]");
  GraphSource snf_src;
  snf_src.add_to(snf);
  std::string snf_ring = "Z", snf_format = "text", snf_var = "x", snf_matrix;
  snf->add_option("--matrix,-m", snf_matrix, "adjacency|laplacian|distance|distlap")->required();
  snf->add_option("--ring,-r", snf_ring, "Z|Qx")->default_val("Z");
  snf->add_option("--var", snf_var, "variable name for Q[x] output")->default_val("x");
  snf->add_option("--format,-f", snf_format, "text|json")->default_val("text");

  auto* survey = app.add_subcommand("survey", "count graphs with a mate under an invariant");
  GraphSource survey_src;
  survey_src.add_to(survey);
  SurveyArgs sa;
  survey->add_option("--n", sa.n, "use the built-in corpus of connected graphs on n vertices");
  survey->add_option("--matrix,-m", sa.matrices, "matrix kinds (default: all)");
  survey->add_option("--mode", sa.modes, "cospectral|coinvariant|codet-Q|codet-Z (default: all)");
  survey->add_option("--format,-f", sa.format, "csv|json")->default_val("csv");
  survey->add_option("--checkpoint", sa.checkpoint, "append per-graph keys to this file and resume from it");
  survey->add_flag("--allow-large", sa.allow_large, "permit corpora above 8 vertices");
  survey->add_flag("--no-prefilter", sa.no_prefilter, "compute Z[x] keys for every graph");

  auto* verify = app.add_subcommand("verify", "run a named verification suite");
  std::string suite;
  SuiteOptions sopt;
  verify->add_option("--suite,-s", suite, join(suite_names(), ", "))->required();
  verify->add_option("--n", sopt.max_n, "largest order for corpus-based suites")->default_val(7);

  auto* gen = app.add_subcommand("gen", "print connected graphs on n vertices in graph6");
  int gen_n = 0;
  gen->add_option("--n", gen_n, "number of vertices")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, eo;
    int code = app.exit(e, o, eo);
    out << o.str();
    err << eo.str();
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*ideals) return cmd_ideals(ideals_src, matrix, ring, var, format, override_guard, in, out);
    if (*snf) return cmd_snf(snf_src, snf_matrix, snf_ring, snf_var, snf_format, in, out);
    if (*survey) return cmd_survey(survey_src, sa, workers, in, out);
    if (*verify) {
      sopt.workers = workers;
      return cmd_verify(suite, sopt, out);
    }
    if (*gen) return cmd_gen(gen_n, out);
  } catch (const SizeGuardExceeded& e) {
    err << "refused: " << e.what() << "\n";
    return kExitGuardRefused;
  } catch (const GuardRefusal& e) {
    err << "refused: " << e.what() << "\n";
    return kExitGuardRefused;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const DisconnectedGraph& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace detideal::cli
