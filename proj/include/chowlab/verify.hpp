#pragma once

#include <string>
#include <vector>

namespace chowlab {

// One verified statement; keys name the underlying theorem-level claims so
// reports read as a checklist.
struct CheckResult {
  std::string key;
  std::string suite;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

// Suites: stats, polys, chow, lattice, bijection, symfun, csp.
// max_n scales the exhaustive ranges down (each check also has its own cap).
std::vector<std::string> verify_suite_names();
std::vector<CheckResult> run_suite(const std::string& suite, int max_n);
std::vector<CheckResult> run_all_suites(int max_n);

}  // namespace chowlab
