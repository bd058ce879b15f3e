#pragma once

#include <cstdint>
#include <vector>

#include "pnc/interval.hpp"
#include "pnc/practical.hpp"

namespace pnc {

// Running sums over an ascending prime stream: after advancing past primes
// p1 < ... < pm the accumulator holds their Mertens product, the sum of
// log p/(p-1), and the sum of truncated divisor weights.
class PrimeAccumulator {
 public:
  explicit PrimeAccumulator(int weight_order);

  // Requires p > position(); p must be the next prime the caller streams.
  void advance(std::uint64_t p);

  std::uint64_t position() const { return position_; }
  int weight_order() const { return weight_order_; }
  const Interval& mertens() const { return mertens_; }
  const Interval& log_weight_sum() const { return log_weight_sum_; }
  const Interval& weight_sum() const { return weight_sum_; }

 private:
  std::uint64_t position_ = 1;
  int weight_order_;
  Interval mertens_ = Interval::one();
  Interval log_weight_sum_ = Interval::zero();
  Interval weight_sum_ = Interval::zero();
};

// A practical row joined with the accumulator snapshot taken at exactly the
// row's threshold (all primes p <= threshold included, none beyond).
struct AugmentedRow {
  PracticalRow row;
  Interval mertens;
  Interval log_weight_sum;
  Interval weight_sum;

  friend bool operator==(const AugmentedRow&, const AugmentedRow&) = default;
};

struct Aggregates {
  std::uint64_t n_max = 0;
  int weight_order = 0;
  Interval alpha_partial;  // sum of (1/n) mertens (logsum - log n)
  Interval tail_mass;      // 1 - sum of (1/n) mertens
  Interval log_ratio_sum;  // sum of (1/n) mertens log(sigma/n)
  Interval weight_term;    // sum of (1/n) mertens wsum
};

struct PipelineConfig {
  std::uint64_t n_max = 0;
  int weight_order = 13;
  int threads = 1;
  std::uint64_t mem_budget_bytes = std::uint64_t{2} << 30;
};

// Joins rows with accumulator snapshots: sorts an index by (threshold, n),
// advances one prime stream, and stores each snapshot back in original row
// order.  Returned rows are ascending in n.
std::vector<AugmentedRow> augment_rows(const std::vector<PracticalRow>& rows,
                                       int weight_order);

// Deterministic ascending-n fold of the four aggregates.
Aggregates fold_rows(const std::vector<AugmentedRow>& rows, std::uint64_t n_max,
                     int weight_order);

// enumerate + augment + fold.
Aggregates run_pipeline(const PipelineConfig& cfg);

// Sum over practical n <= n_max of (1/n) prod_{p<=theta(n)} (1-1/p); equals
// 1 - tail mass, stays below 1, and grows toward 1 as n_max does.
Interval identity_partial_sum(std::uint64_t n_max);

// Upper endpoint of |L - ((1-1/q)/q^h) R| where L restricts the partial sum
// to rows with q-exponent exactly h and R to rows with threshold >= q.  Both
// truncation tails are pieces of the full tail, so the value stays within
// (1 + (1-1/q)/q^h) times the tail mass.
double slice_identity_residual(std::uint64_t q, int h, std::uint64_t n_max);

}  // namespace pnc
