#include "detideal/survey.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include <json.hpp>

#include "detideal/enumerate.hpp"
#include "detideal/smith.hpp"

namespace detideal {

namespace {

template <class Seq>
std::string join(const Seq& items, const char* sep) {
  std::string out;
  bool first = true;
  for (const auto& s : items) {
    if (!first) out += sep;
    out += s;
    first = false;
  }
  return out;
}

void validate_corpus(const std::vector<Graph>& corpus) {
  if (corpus.empty()) throw std::invalid_argument("empty corpus");
  const int n = corpus.front().order();
  for (const Graph& g : corpus) {
    if (g.order() != n) throw std::invalid_argument("corpus mixes graph orders");
    if (!g.is_connected()) throw std::invalid_argument("corpus contains a disconnected graph: " + write_graph6(g));
  }
}

std::unordered_map<std::string, std::string> load_checkpoint(const std::string& path) {
  std::unordered_map<std::string, std::string> done;
  std::ifstream in(path);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    // A torn final line from an interrupted run is ignored.
    auto j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.contains("graph") || !j.contains("key_digest_input")) continue;
    done[j["graph"].get<std::string>()] = j["key_digest_input"].get<std::string>();
  }
  return done;
}

// Keys for the graphs at `indices`, with optional checkpointing and resume.
std::vector<std::string> keys_for(const std::vector<Graph>& corpus, const std::vector<std::size_t>& indices,
                                  MatrixKind kind, SurveyMode mode, unsigned workers, const SurveyOptions* opts) {
  std::vector<std::string> keys(indices.size());
  auto compute = [&](std::size_t i) { keys[i] = invariant_key(corpus[indices[i]], kind, mode).text; };
  if (!opts || opts->checkpoint_path.empty()) {
    parallel_for(indices.size(), workers, compute);
    return keys;
  }
  auto done = load_checkpoint(opts->checkpoint_path);
  std::vector<std::size_t> todo;
  for (std::size_t i = 0; i < indices.size(); ++i) {
    auto it = done.find(write_graph6(corpus[indices[i]]));
    if (it != done.end()) {
      keys[i] = it->second;
    } else {
      todo.push_back(i);
    }
  }
  std::ofstream out(opts->checkpoint_path, std::ios::app);
  if (!out) throw std::runtime_error("cannot open checkpoint file " + opts->checkpoint_path);
  const std::size_t chunk = std::max<std::size_t>(1, opts->checkpoint_interval);
  for (std::size_t start = 0; start < todo.size(); start += chunk) {
    const std::size_t end = std::min(todo.size(), start + chunk);
    parallel_for(end - start, workers, [&](std::size_t j) { compute(todo[start + j]); });
    for (std::size_t j = start; j < end; ++j) {
      nlohmann::ordered_json rec{{"graph", write_graph6(corpus[indices[todo[j]]])}, {"key_digest_input", keys[todo[j]]}};
      out << rec.dump() << '\n';
    }
    out.flush();
  }
  return keys;
}

std::vector<std::size_t> iota_indices(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

// Groups equal keys; returns groups of size >= 2 ordered by first member.
std::vector<std::vector<std::size_t>> group_keys(const std::vector<std::string>& keys,
                                                 const std::vector<std::size_t>& indices) {
  std::map<std::string_view, std::vector<std::size_t>> by_key;
  for (std::size_t i = 0; i < keys.size(); ++i) by_key[keys[i]].push_back(indices[i]);
  std::vector<std::vector<std::size_t>> groups;
  for (auto& [k, v] : by_key) {
    if (v.size() >= 2) groups.push_back(std::move(v));
  }
  std::sort(groups.begin(), groups.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return groups;
}

// Partition label per graph: index of its bucket among the distinct keys.
std::vector<std::size_t> partition_labels(const std::vector<std::string>& keys) {
  std::unordered_map<std::string, std::size_t> ids;
  std::vector<std::size_t> out(keys.size());
  for (std::size_t i = 0; i < keys.size(); ++i) out[i] = ids.emplace(keys[i], ids.size()).first->second;
  return out;
}

std::size_t count_with_mate(const std::vector<std::string>& keys) {
  std::size_t c = 0;
  for (const auto& g : group_keys(keys, iota_indices(keys.size()))) c += g.size();
  return c;
}

// Checks that partition `fine` refines `coarse`; with `both`, that they are equal.
CheckResult compare_partitions(std::string name, const std::vector<std::string>& fine,
                               const std::vector<std::string>& coarse, bool both, const std::vector<Graph>& corpus) {
  CheckResult r{std::move(name), true, {}};
  auto lf = partition_labels(fine), lc = partition_labels(coarse);
  std::unordered_map<std::size_t, std::size_t> f2c, c2f;
  for (std::size_t i = 0; i < lf.size(); ++i) {
    auto [it, fresh] = f2c.emplace(lf[i], i);
    if (!fresh && lc[it->second] != lc[i]) {
      r.passed = false;
      r.witness = write_graph6(corpus[it->second]) + " " + write_graph6(corpus[i]);
      return r;
    }
    if (both) {
      auto [jt, fresh2] = c2f.emplace(lc[i], i);
      if (!fresh2 && lf[jt->second] != lf[i]) {
        r.passed = false;
        r.witness = write_graph6(corpus[jt->second]) + " " + write_graph6(corpus[i]);
        return r;
      }
    }
  }
  return r;
}

}  // namespace

std::string_view mode_name(SurveyMode m) {
  switch (m) {
    case SurveyMode::Cospectral:
      return "cospectral";
    case SurveyMode::Coinvariant:
      return "coinvariant";
    case SurveyMode::CodetQ:
      return "codet-Q";
    case SurveyMode::CodetZ:
      return "codet-Z";
  }
  return "?";
}

SurveyMode parse_mode(std::string_view s) {
  for (SurveyMode m : kAllModes) {
    if (mode_name(m) == s) return m;
  }
  throw std::invalid_argument("unknown survey mode: " + std::string(s));
}

std::string key_text(const IdealProfile& profile) {
  std::vector<std::string> parts;
  for (const Ideal& I : profile.ideals) parts.push_back("[" + join(I.basis_strings(), ",") + "]");
  return join(parts, ";");
}

InvariantKey invariant_key(const Graph& g, MatrixKind kind, SurveyMode mode) {
  InvariantKey key{mode, kind, {}};
  switch (mode) {
    case SurveyMode::Cospectral: {
      std::vector<std::string> c;
      const ZPoly cp = characteristic_polynomial(build_matrix(g, kind));
      for (const auto& v : cp.coeffs()) c.push_back(v.to_string());
      key.text = join(c, ",");
      break;
    }
    case SurveyMode::Coinvariant: {
      std::vector<std::string> c;
      const auto f = snf_integer(build_matrix(g, kind)).padded();
      for (const auto& v : f) c.push_back(v.to_string());
      key.text = join(c, ",");
      break;
    }
    case SurveyMode::CodetQ:
      key.text = key_text(determinantal_ideals(g, kind, Ring::Qx));
      break;
    case SurveyMode::CodetZ:
      key.text = key_text(determinantal_ideals(g, kind, Ring::Zx));
      break;
  }
  return key;
}

unsigned resolve_workers(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("DETIDEAL_WORKERS")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t count, unsigned workers, const std::function<void(std::size_t)>& f) {
  const unsigned w = static_cast<unsigned>(std::min<std::size_t>(resolve_workers(workers), std::max<std::size_t>(count, 1)));
  if (w <= 1) {
    for (std::size_t i = 0; i < count; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto run = [&] {
    for (std::size_t i; !failed && (i = next++) < count;) {
      try {
        f(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        failed = true;
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < w; ++t) pool.emplace_back(run);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

std::vector<std::string> compute_keys(const std::vector<Graph>& corpus, MatrixKind kind, SurveyMode mode,
                                      unsigned workers) {
  return keys_for(corpus, iota_indices(corpus.size()), kind, mode, workers, nullptr);
}

SurveyReport run_survey(const std::vector<Graph>& corpus, MatrixKind kind, SurveyMode mode,
                        const SurveyOptions& options) {
  validate_corpus(corpus);
  SurveyReport rep;
  rep.n = corpus.front().order();
  rep.kind = kind;
  rep.mode = mode;
  rep.total = corpus.size();

  std::vector<std::size_t> indices = iota_indices(corpus.size());
  if (mode == SurveyMode::CodetZ && options.prefilter) {
    auto q = keys_for(corpus, indices, kind, SurveyMode::CodetQ, options.workers, nullptr);
    auto c = keys_for(corpus, indices, kind, SurveyMode::Coinvariant, options.workers, nullptr);
    std::vector<std::string> both(corpus.size());
    for (std::size_t i = 0; i < both.size(); ++i) both[i] = q[i] + "|" + c[i];
    std::vector<std::size_t> candidates;
    for (const auto& g : group_keys(both, indices)) candidates.insert(candidates.end(), g.begin(), g.end());
    std::sort(candidates.begin(), candidates.end());
    indices = std::move(candidates);
  }
  auto keys = keys_for(corpus, indices, kind, mode, options.workers, &options);
  for (auto& members : group_keys(keys, indices)) {
    if (mode == SurveyMode::CodetZ) {
      // Equal renderings must come from equal ideals.
      IdealProfile first = determinantal_ideals(corpus[members.front()], kind, Ring::Zx);
      for (std::size_t j = 1; j < members.size(); ++j) {
        IdealProfile other = determinantal_ideals(corpus[members[j]], kind, Ring::Zx);
        for (std::size_t k = 1; k <= first.size(); ++k) {
          if (!ideal_equal(first.ideal(k), other.ideal(k))) {
            throw std::logic_error("key collision between unequal ideals: " + first.graph + " " + other.graph);
          }
        }
      }
    }
    Bucket b;
    b.key = keys[static_cast<std::size_t>(std::lower_bound(indices.begin(), indices.end(), members.front()) - indices.begin())];
    for (std::size_t i : members) b.graphs.push_back(write_graph6(corpus[i]));
    rep.with_mate += members.size();
    rep.buckets.push_back(std::move(b));
  }
  return rep;
}

bool verify_determined_by(const std::vector<Graph>& corpus, const Graph& target, MatrixKind kind, SurveyMode mode,
                          unsigned workers) {
  validate_corpus(corpus);
  if (target.order() != corpus.front().order()) throw std::invalid_argument("target graph is not in the corpus");
  const uint64_t code = canonical_code(target);
  bool present = false;
  for (const Graph& g : corpus) present = present || canonical_code(g) == code;
  if (!present) throw std::invalid_argument("target graph is not in the corpus");
  const std::string key = invariant_key(target, kind, mode).text;
  std::size_t hits = 0;
  for (const auto& k : compute_keys(corpus, kind, mode, workers)) hits += k == key;
  return hits == 1;
}

bool CrossCheckReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

CrossCheckReport cross_check(const std::vector<Graph>& corpus, MatrixKind kind, unsigned workers) {
  validate_corpus(corpus);
  CrossCheckReport rep;
  rep.n = corpus.front().order();
  rep.kind = kind;
  const std::size_t n = corpus.size();
  auto cosp = compute_keys(corpus, kind, SurveyMode::Cospectral, workers);
  auto coin = compute_keys(corpus, kind, SurveyMode::Coinvariant, workers);
  auto codq = compute_keys(corpus, kind, SurveyMode::CodetQ, workers);
  std::vector<std::string> codz(n), eval0(n), varieties(n);
  parallel_for(n, workers, [&](std::size_t i) {
    IdealProfile p = determinantal_ideals(corpus[i], kind, Ring::Zx);
    codz[i] = key_text(p);
    Integer zero(0);
    std::vector<std::string> parts;
    for (const auto& d : evaluate_profile(p, std::span(&zero, 1))) parts.push_back(d.to_string());
    eval0[i] = join(parts, ",");
    parts.clear();
    for (std::size_t k = 1; k <= p.size(); ++k) {
      VarietyDescription v = variety(p, k);
      parts.push_back(v.extent == VarietyDescription::Extent::Everything ? "R" : v.squarefree.to_string());
    }
    varieties[i] = join(parts, ";");
  });
  rep.cospectral = count_with_mate(cosp);
  rep.coinvariant = count_with_mate(coin);
  rep.codet_q = count_with_mate(codq);
  rep.codet_z = count_with_mate(codz);
  // The evaluated x = 0 profile gives Delta_k(-M); its SNF partition is the
  // coinvariant one, which is also checked against the direct SNF key.
  rep.checks.push_back(compare_partitions("cospectral = codet-Q", cosp, codq, true, corpus));
  rep.checks.push_back(compare_partitions("coinvariant = codet-Z at x=0", coin, eval0, true, corpus));
  rep.checks.push_back(compare_partitions("codet-Z refines cospectral", codz, cosp, false, corpus));
  rep.checks.push_back(compare_partitions("codet-Z refines coinvariant", codz, coin, false, corpus));
  rep.checks.push_back(compare_partitions("codet-Q = equal varieties", codq, varieties, true, corpus));
  return rep;
}

std::string report_csv_header() { return "n,matrix,mode,total,with_mate\n"; }

std::string report_csv_row(const SurveyReport& r) {
  return std::to_string(r.n) + "," + std::string(kind_name(r.kind)) + "," + std::string(mode_name(r.mode)) + "," +
         std::to_string(r.total) + "," + std::to_string(r.with_mate) + "\n";
}

std::string report_json(const SurveyReport& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["matrix"] = std::string(kind_name(r.kind));
  j["mode"] = std::string(mode_name(r.mode));
  j["total"] = r.total;
  j["with_mate"] = r.with_mate;
  j["buckets"] = nlohmann::ordered_json::array();
  for (const auto& b : r.buckets) j["buckets"].push_back({{"key", b.key}, {"graphs", b.graphs}});
  return j.dump(2) + "\n";
}

}  // namespace detideal
