#pragma once

#include <cstdint>

#include "pnc/interval.hpp"

namespace pnc {

// Truncated divisor weight of a prime q at truncation order J, with a bound
// on how far the truncation sits above the full series.
struct PrimeWeight {
  std::uint64_t q;
  int order;
  Interval value;           // closed form, exceeds the full series
  double remainder_bound;   // upper bound on the excess

  // The full series lies in [value.lo - remainder_bound, value.hi].
};

// Closed form: -log(1-1/q)/q - sum_{1<=j<=J} (q-1)/(j q^{j+1} (q^{j+1}-1)).
// Production path; one call per prime in the big sums.
PrimeWeight prime_weight(std::uint64_t q, int order);

// Direct defining series, summed term by term with a certified tail
// interval.  Slow reference path used by tests as an independent check of
// the closed form.
Interval prime_weight_series(std::uint64_t q, int terms);

// Upper bound on the total truncation excess summed over all primes:
// 1/(J 2^(2J+3)), valid for J >= 2.
Interval weight_remainder_total_bound(int order);

}  // namespace pnc
