// Runs the full acceptance suite and prints one verdict line per criterion.
// Exit status 0 means every criterion passed.
#include <cstdio>
#include <exception>

#include "pnc/interval.hpp"
#include "pnc/selftest.hpp"

int main() {
  try {
    pnc::kernel_selftest();
  } catch (const std::exception& e) {
    std::fprintf(stderr, "kernel self test failed: %s\n", e.what());
    return 1;
  }

  std::vector<pnc::CheckResult> results;
  try {
    results = pnc::run_acceptance_suite();
  } catch (const std::exception& e) {
    std::fprintf(stderr, "acceptance suite aborted: %s\n", e.what());
    return 1;
  }

  int failed = 0;
  for (const pnc::CheckResult& r : results) {
    std::printf("%s %s: %s\n", r.passed ? "PASS" : "FAIL", r.name.c_str(),
                r.detail.c_str());
    if (!r.passed) ++failed;
  }
  std::printf("%zu criteria, %d failed\n", results.size(), failed);
  return failed == 0 ? 0 : 1;
}
