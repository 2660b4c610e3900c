// One line per acceptance criterion; nonzero exit if any fails.
#include <cstdio>

#include "sdc/paper_checks.hpp"

int main() {
  const auto results = sdc::run_paper_checks();
  int failed = 0;
  for (const auto& r : results) {
    std::printf("%s  %2d  %s: %s\n", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(), r.detail.c_str());
    if (!r.passed) ++failed;
  }
  std::printf("%zu criteria, %d failed\n", results.size(), failed);
  return failed == 0 ? 0 : 1;
}
