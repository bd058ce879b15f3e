#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <vector>

#include "pnc/errors.hpp"
#include "pnc/interval.hpp"
#include "pnc/pipeline.hpp"
#include "pnc/practical.hpp"
#include "pnc/primes.hpp"

using namespace pnc;

TEST_CASE("accumulator running sums") {
  PrimeAccumulator acc(13);
  CHECK(acc.position() == 1);
  CHECK(acc.mertens() == Interval::one());
  CHECK(acc.log_weight_sum() == Interval::zero());
  CHECK(acc.weight_sum() == Interval::zero());

  acc.advance(2);
  CHECK(acc.position() == 2);
  CHECK(acc.mertens().contains(0.5));
  CHECK(acc.log_weight_sum().contains(0.69314718055994531));
  CHECK(acc.weight_sum().contains(0.2526081216858980728));

  acc.advance(3);
  CHECK(acc.mertens().contains(1.0 / 3.0));
  CHECK(acc.mertens().width() < 1e-15);

  CHECK_THROWS_AS(acc.advance(3), ConsistencyError);
  CHECK_THROWS_AS(acc.advance(2), ConsistencyError);
  CHECK_THROWS_AS(PrimeAccumulator(1), ConfigError);
}

TEST_CASE("accumulator over a longer stream") {
  PrimeAccumulator acc(13);
  for (std::uint32_t p : small_primes(100)) acc.advance(p);
  CHECK(acc.mertens().contains(0.1203172904749351885));
  CHECK(acc.mertens().width() < 1e-14);
  CHECK(acc.log_weight_sum().contains(4.114893977075376509));
  CHECK(acc.log_weight_sum().width() < 1e-13);
  CHECK(acc.weight_sum().contains(0.4438952609584613875));
  CHECK(acc.weight_sum().width() < 1e-13);
}

TEST_CASE("augmented snapshots match fresh accumulators") {
  auto rows = enumerate_practical(2000);
  auto augmented = augment_rows(rows, 5);
  REQUIRE(augmented.size() == rows.size());

  for (std::size_t i = 0; i < augmented.size(); i += 7) {
    const AugmentedRow& ar = augmented[i];
    CHECK(ar.row == rows[i]);
    PrimeAccumulator fresh(5);
    for (std::uint32_t p : small_primes(10000)) {
      if (p > ar.row.threshold()) break;
      fresh.advance(p);
    }
    // Same operation sequence, so the snapshots must match bit for bit.
    CHECK(ar.mertens == fresh.mertens());
    CHECK(ar.log_weight_sum == fresh.log_weight_sum());
    CHECK(ar.weight_sum == fresh.weight_sum());
  }
}

TEST_CASE("fold hand values at n_max 1") {
  PipelineConfig cfg;
  cfg.n_max = 1;
  Aggregates agg = run_pipeline(cfg);
  CHECK(agg.n_max == 1);
  CHECK(agg.weight_order == 13);
  CHECK(agg.alpha_partial.contains(0.3465735902799726547));  // (log 2)/2
  CHECK(agg.alpha_partial.width() < 1e-14);
  CHECK(agg.tail_mass.contains(0.5));
  CHECK(agg.tail_mass.width() < 1e-15);
  CHECK(agg.log_ratio_sum == Interval::zero());
  CHECK(agg.weight_term.contains(0.1263040608429490364));  // W(2,13)/2
}

TEST_CASE("fold hand values at n_max 2") {
  PipelineConfig cfg;
  cfg.n_max = 2;
  Aggregates agg = run_pipeline(cfg);
  CHECK(agg.alpha_partial.contains(0.4381246143356484623));
  CHECK(agg.tail_mass.contains(1.0 / 3.0));
  CHECK(agg.tail_mass.width() < 1e-15);
  CHECK(agg.log_ratio_sum.contains(0.067577518018027397));  // log(3/2)/6
  CHECK(agg.weight_term.contains(0.1860455049337751433));
}

TEST_CASE("fold rejects rows out of order") {
  auto rows = enumerate_practical(30);
  auto augmented = augment_rows(rows, 5);
  std::swap(augmented[3], augmented[4]);
  CHECK_THROWS_AS(fold_rows(augmented, 30, 5), ConsistencyError);
}

TEST_CASE("threading leaves the aggregates unchanged") {
  PipelineConfig serial;
  serial.n_max = 100000;
  PipelineConfig parallel = serial;
  parallel.threads = 4;
  Aggregates a = run_pipeline(serial);
  Aggregates b = run_pipeline(parallel);
  CHECK(a.alpha_partial == b.alpha_partial);
  CHECK(a.tail_mass == b.tail_mass);
  CHECK(a.log_ratio_sum == b.log_ratio_sum);
  CHECK(a.weight_term == b.weight_term);
}

TEST_CASE("tail mass shrinks as the range grows") {
  double prev_hi = 1.0;
  for (std::uint64_t n : {10, 100, 1000, 10000, 100000}) {
    PipelineConfig cfg;
    cfg.n_max = n;
    Aggregates agg = run_pipeline(cfg);
    CHECK(agg.tail_mass.lo > 0.0);
    CHECK(agg.tail_mass.hi < prev_hi);
    prev_hi = agg.tail_mass.hi;
  }
}

TEST_CASE("partial identity sum") {
  CHECK(identity_partial_sum(1).contains(0.5));
  CHECK(identity_partial_sum(2).contains(2.0 / 3.0));

  double prev_hi = 0.0;
  for (std::uint64_t n : {10, 100, 1000, 10000, 100000}) {
    Interval s = identity_partial_sum(n);
    CHECK(s.hi < 1.0);
    CHECK(s.lo > prev_hi);
    prev_hi = s.hi;
  }
}

TEST_CASE("slice identities hold within the tail allowance") {
  const std::uint64_t n_max = 10000;
  PipelineConfig cfg;
  cfg.n_max = n_max;
  double eps_hi = run_pipeline(cfg).tail_mass.hi;

  struct Slice {
    std::uint64_t q;
    int h;
  };
  for (Slice s : {Slice{2, 1}, Slice{2, 2}, Slice{3, 1}, Slice{5, 1}}) {
    double factor = 1.0;
    for (int i = 0; i < s.h; ++i) factor /= static_cast<double>(s.q);
    factor *= 1.0 - 1.0 / static_cast<double>(s.q);
    double bound = eps_hi * (1.0 + factor) * (1.0 + 1e-9);
    CHECK(slice_identity_residual(s.q, s.h, n_max) <= bound);
  }

  // A slice with no members reduces to a tiny scaled tail.
  CHECK(slice_identity_residual(2, 40, 1000) < 1e-11);

  CHECK_THROWS_AS(slice_identity_residual(1, 1, 100), ConfigError);
  CHECK_THROWS_AS(slice_identity_residual(2, 0, 100), ConfigError);
}

TEST_CASE("pipeline config guards") {
  PipelineConfig zero;
  zero.n_max = 0;
  CHECK_THROWS_AS(run_pipeline(zero), ConfigError);

  PipelineConfig bad_order;
  bad_order.n_max = 10;
  bad_order.weight_order = 1;
  CHECK_THROWS_AS(run_pipeline(bad_order), ConfigError);

  PipelineConfig tiny;
  tiny.n_max = 1000000;
  tiny.mem_budget_bytes = 1 << 12;
  CHECK_THROWS_AS(run_pipeline(tiny), ConfigError);
}
