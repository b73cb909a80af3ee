#ifndef TBA_SUITE_HPP_
#define TBA_SUITE_HPP_

#include <functional>
#include <string>
#include <vector>

// The full verification suite: every theorem-level claim the workbench
// re-checks, run exhaustively at desk scale. Shared by the acceptance test
// binary and the report command.

namespace tba {

struct CriterionResult {
  int number = 0;
  std::string name;
  bool report_only = false;  // emitted for inspection, never fails the suite
  bool pass = false;
  std::string detail;
};

struct SuiteOptions {
  bool parallel = true;
  uint64_t seed = 1;
  // Invoked as each criterion finishes (progress streaming).
  std::function<void(const CriterionResult&)> on_result;
};

std::vector<CriterionResult> run_paper_suite(const SuiteOptions& opts = {});

bool suite_passed(const std::vector<CriterionResult>& results);

}  // namespace tba

#endif  // TBA_SUITE_HPP_
