//
// verify.hpp
//
// Named reproduction suites. Suites 1-13 are the acceptance criteria; the
// remaining ones are extra cross-checks that `all` runs as well.
//

#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace dmap {

struct CriterionResult {
  int id = 0;  // 1..13 for acceptance criteria, 0 for extras
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct SuiteInfo {
  std::string name;
  int id;
  std::string summary;
};

const std::vector<SuiteInfo>& verify_suites();

// One suite by name. Throws std::invalid_argument for unknown names.
CriterionResult run_suite(std::string_view name);

// "acceptance" (criteria 1-13), "all" (everything) or a single suite name.
std::vector<CriterionResult> run_suites(std::string_view selector);

// "PASS [3] exit: ... (0.01 s)"
std::string format_result(const CriterionResult& r);

}  // namespace dmap
