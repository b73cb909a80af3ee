// Acceptance runner: one line per criterion, non-zero exit on any failure.

#include <cstdio>

#include "tba/suite.hpp"

int main() {
  tba::SuiteOptions opts;
  opts.on_result = [](const tba::CriterionResult& r) {
    const char* tag = r.report_only ? "REPORT" : (r.pass ? "PASS" : "FAIL");
    std::printf("%-6s [%2d] %-42s %s\n", tag, r.number, r.name.c_str(),
                r.detail.c_str());
    std::fflush(stdout);
  };
  auto results = tba::run_paper_suite(opts);
  bool ok = tba::suite_passed(results);
  std::printf("%s\n", ok ? "ALL CRITERIA PASS" : "CRITERIA FAILED");
  return ok ? 0 : 1;
}
