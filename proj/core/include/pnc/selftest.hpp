#pragma once

#include <string>
#include <vector>

namespace pnc {

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;
};

// Quick confidence suite, a few seconds: arithmetic kernel references,
// structural practicality test against the subset-sum reference up to 5000,
// weight sandwich over the primes below 100, and one residual spot value.
std::vector<CheckResult> run_fast_selftest();

// Full suite, minutes of work: the ten checks the artifact is judged by,
// including the desk-scale bound computations at n_max 2^20 and 2^22.
std::vector<CheckResult> run_acceptance_suite();

}  // namespace pnc
