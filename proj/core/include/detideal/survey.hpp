#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "detideal/detideals.hpp"
#include "detideal/graph.hpp"
#include "detideal/matrix.hpp"

namespace detideal {

enum class SurveyMode { Cospectral, Coinvariant, CodetQ, CodetZ };

std::string_view mode_name(SurveyMode m);
/// Accepts cospectral, coinvariant, codet-Q, codet-Z.
SurveyMode parse_mode(std::string_view s);
inline constexpr SurveyMode kAllModes[] = {SurveyMode::Cospectral, SurveyMode::Coinvariant, SurveyMode::CodetQ,
                                           SurveyMode::CodetZ};

/// Canonical text rendering of an invariant; equal keys mean related graphs.
struct InvariantKey {
  SurveyMode mode = SurveyMode::Cospectral;
  MatrixKind kind = MatrixKind::Adjacency;
  std::string text;

  friend bool operator==(const InvariantKey&, const InvariantKey&) = default;
};

/// cospectral: characteristic polynomial coefficients, lowest first.
/// coinvariant: Smith invariant factors padded with zeros.
/// codet-Q: the monic Delta_k for k = 1..n.
/// codet-Z: the canonical Z[x] bases for k = 1..n.
InvariantKey invariant_key(const Graph& g, MatrixKind kind, SurveyMode mode);
/// Same keys from precomputed profiles (codet modes only).
std::string key_text(const IdealProfile& profile);

struct Bucket {
  std::string key;
  std::vector<std::string> graphs;  // graph6, corpus order
};

struct SurveyReport {
  int n = 0;
  MatrixKind kind = MatrixKind::Adjacency;
  SurveyMode mode = SurveyMode::Cospectral;
  std::size_t total = 0;
  std::size_t with_mate = 0;
  std::vector<Bucket> buckets;  // size >= 2 only, ordered by first member
};

struct SurveyOptions {
  /// 0 means hardware concurrency.
  unsigned workers = 0;
  /// codet-Z only: compute Z[x] keys just for graphs that share both their
  /// codet-Q key and their coinvariant key with another graph. Exact, since
  /// codet-Z equivalence implies both.
  bool prefilter = true;
  /// When nonempty, per-graph keys are appended here as newline-delimited
  /// JSON every checkpoint_interval graphs; an existing file is resumed.
  std::string checkpoint_path;
  std::size_t checkpoint_interval = 1000;
};

/// Throws std::invalid_argument on an empty corpus, mixed orders or a
/// disconnected graph.
SurveyReport run_survey(const std::vector<Graph>& corpus, MatrixKind kind, SurveyMode mode,
                        const SurveyOptions& options = {});

/// Keys for every graph in corpus order, computed on a worker pool.
std::vector<std::string> compute_keys(const std::vector<Graph>& corpus, MatrixKind kind, SurveyMode mode,
                                      unsigned workers = 0);

/// True iff exactly one graph in the corpus shares the target's key. Throws
/// std::invalid_argument if the target is not in the corpus.
bool verify_determined_by(const std::vector<Graph>& corpus, const Graph& target, MatrixKind kind, SurveyMode mode,
                          unsigned workers = 0);

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string witness;  // a pair of graph6 strings when failed
};

struct CrossCheckReport {
  int n = 0;
  MatrixKind kind = MatrixKind::Adjacency;
  std::size_t cospectral = 0, coinvariant = 0, codet_q = 0, codet_z = 0;  // graphs with a mate
  std::vector<CheckResult> checks;

  bool passed() const;
};

/// Compares the partitions induced by the four modes: cospectral equals
/// codet-Q; coinvariant equals the partition by Z[x] profiles evaluated at
/// x = 0; codet-Z refines both; codet-Q equals the per-k variety partition.
CrossCheckReport cross_check(const std::vector<Graph>& corpus, MatrixKind kind, unsigned workers = 0);

std::string report_csv_header();
std::string report_csv_row(const SurveyReport& r);
std::string report_json(const SurveyReport& r);

/// Runs f(i) for i in [0, count) on a pool; rethrows the first failure.
void parallel_for(std::size_t count, unsigned workers, const std::function<void(std::size_t)>& f);

/// Effective worker count: explicit value, else DETIDEAL_WORKERS, else hardware.
unsigned resolve_workers(unsigned requested);

}  // namespace detideal
