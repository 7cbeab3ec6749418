#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace detideal::cli {

struct SuiteCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteOptions {
  unsigned workers = 0;
  /// Largest order covered by the tables suite (5..8).
  int max_n = 7;
};

const std::vector<std::string>& suite_names();
bool has_suite(std::string_view name);

/// Runs a named suite. Exceptions inside a check are reported as failures.
/// Throws std::invalid_argument for an unknown suite.
std::vector<SuiteCheck> run_suite(std::string_view name, const SuiteOptions& options = {});

/// Individual table reproductions, each over the given orders.
std::vector<SuiteCheck> codeterminantal_table(const std::vector<int>& orders, unsigned workers);
std::vector<SuiteCheck> cospectral_table(const std::vector<int>& orders, unsigned workers);
std::vector<SuiteCheck> coinvariant_table(const std::vector<int>& orders, unsigned workers);

/// Determined-by checks for K_n (distlap and laplacian) or K_{1,n-1} (distlap).
std::vector<SuiteCheck> determined_complete(int n_min, int n_max, unsigned workers);
std::vector<SuiteCheck> determined_star(int n_min, int n_max, unsigned workers);

/// Invariant checks over all connected graphs on 1..max_n vertices and all
/// four matrix kinds.
std::vector<SuiteCheck> property_checks(int max_n, unsigned workers);

bool all_passed(const std::vector<SuiteCheck>& checks);
std::string render_checks(const std::vector<SuiteCheck>& checks);

}  // namespace detideal::cli
