#pragma once

#include <cstdint>

#include "pnc/interval.hpp"
#include "pnc/pipeline.hpp"

namespace pnc {

// Sum of truncated divisor weights over primes q <= limit, tagged with the
// inputs so assembly can reject mismatched pieces.
struct WeightSum {
  std::uint64_t limit;
  int order;
  Interval value;
};

WeightSum weight_sum_over_primes(std::uint64_t limit, int order);

// Residual sup bound at x, tagged with x for the same reason.
struct ResidualBound {
  std::uint64_t x;
  double value;
};

ResidualBound residual_bound_at(std::uint64_t x, int extension_k0);

struct BoundsReport {
  std::uint64_t n_max = 0;
  int weight_order = 0;
  Interval alpha_partial;       // reported as alpha_N
  Interval tail_mass;           // reported as eps_N
  Interval log_ratio_sum;       // reported as U_N
  Interval weight_term;         // reported as A_NJ
  Interval prime_weight_total;  // reported as Y_2NJ
  double residual_sup = 0.0;    // reported as E_2N
  double alpha_lo = 0.0;
  double alpha_hi = 0.0;
  double c_lo = 0.0;
  double c_hi = 0.0;
  double predicted_gap = 0.0;   // diagnostic, not part of the certificate
};

// Assembles the certified alpha and c bounds from pieces computed for the
// same n_max and order.  Every endpoint is rounded toward the safe side.
BoundsReport assemble(const Aggregates& agg, const WeightSum& weights,
                      const ResidualBound& residual);

// enumerate + pipeline + weight sum + residual bound + assemble.
BoundsReport compute_bounds(const PipelineConfig& cfg, int extension_k0);

}  // namespace pnc
