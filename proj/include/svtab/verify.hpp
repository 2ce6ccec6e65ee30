#pragma once

#include <string>
#include <vector>

#include "svtab/json_io.hpp"

namespace svtab {

struct VerifyOptions {
  std::string suite = "all";   // enumerate, biject, closedform, stats, series, posets, all
  std::string budget = "desk"; // desk or quick
  int order = 10;              // series truncation order
  int max_elements = 6;        // poset catalog size bound
  int max_k = 3;
  int threads = 0;             // 0: SVTAB_THREADS or hardware concurrency
  bool timings = true;
};

struct CheckResult {
  std::string suite, name, instance;
  bool pass = false;
  std::string expected, actual;
  double seconds = 0;
};

struct VerifyReport {
  VerifyOptions options;
  std::vector<CheckResult> checks;

  bool passed() const;
  int failures() const;
  Json to_json() const;
};

const std::vector<std::string>& verify_suites();
/// Throws InvalidArgument for an unknown suite or budget.
VerifyReport run_verify(const VerifyOptions& options);
int default_threads();

}  // namespace svtab
