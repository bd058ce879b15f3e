#pragma once

#include <cstdint>

#include "pnc/interval.hpp"

namespace pnc {

// eta(x) = sum_{p<=x} log p/(p-1) - log x + gamma.  The quantity whose
// supremum controls the final bound width.
Interval log_sum_residual(std::uint64_t x);

// Certified upper bound on sup over [a, b] of |eta|.  Between primes eta
// only decreases, so the candidate extrema are the values at both range
// endpoints plus, at every prime in [a, b], the value after the jump and the
// left limit just before it; the maximum of their upper endpoints covers the
// whole range.
double log_sum_residual_sup(std::uint64_t a, std::uint64_t b);

// eta(x) + sum_{x<p<=tail_cutoff} log p/(p(p-1)) + [0, (1+log T)/T] with
// T = tail_cutoff; the completed residual including its prime tail.
Interval log_sum_residual_completed(std::uint64_t x, std::uint64_t tail_cutoff);

// Frozen table of certified bounds on sup_{y>=2^k} |eta(y)| for k = 24..38,
// stored as exact decimal-scaled integers and converted upward exactly once.
class ResidualBoundTable {
 public:
  static constexpr int kMinExponent = 24;
  static constexpr int kMaxExponent = 38;

  // Bound for sup_{y>=x}|eta|, from the largest row with 2^k <= x.
  // Requires x >= 2^24.
  static double sup_bound(std::uint64_t x);

  // Rescans [2^k, span_limit] and reports whether the row k bound covers the
  // recomputed sup.  A partial consistency check, not a full verification.
  static bool verify_prefix(int k, std::uint64_t span_limit);
};

// sup_{y>=x}|eta| upper bound for any x >= 2: the table row when x >= 2^24,
// otherwise max(scan of [x, 2^k0], row k0) with k0 = extension_k0.
double residual_sup_bound(std::uint64_t x, int extension_k0);

}  // namespace pnc
