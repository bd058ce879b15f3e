#include "pnc/bounds.hpp"

#include <cmath>
#include <cstdio>

#include "pnc/errors.hpp"
#include "pnc/primes.hpp"
#include "pnc/residual_table.hpp"
#include "pnc/weights.hpp"

namespace pnc {

WeightSum weight_sum_over_primes(std::uint64_t limit, int order) {
  if (limit < 2) throw ConfigError("weight sum requires limit >= 2");
  Interval sum = Interval::zero();
  for_each_prime(2, limit, [&](std::uint64_t q) {
    sum += prime_weight(q, order).value;
  });
  return {limit, order, sum};
}

ResidualBound residual_bound_at(std::uint64_t x, int extension_k0) {
  return {x, residual_sup_bound(x, extension_k0)};
}

BoundsReport assemble(const Aggregates& agg, const WeightSum& weights,
                      const ResidualBound& residual) {
  if (agg.n_max < 1) throw ConfigError("assembly requires n_max >= 1");
  std::uint64_t twice_n = 2 * agg.n_max;
  if (weights.limit != twice_n || residual.x != twice_n) {
    throw ConsistencyError("bounds pieces were computed for a different limit");
  }
  if (weights.order != agg.weight_order) {
    throw ConsistencyError("bounds pieces were computed for a different order");
  }
  const Interval eps = agg.tail_mass;
  if (!(eps.lo > 0.0 && eps.hi < 1.0)) {
    throw ConsistencyError("tail mass escaped (0, 1)");
  }

  const Interval gamma = euler_gamma();
  // The sup bound is a certified upper bound; treating it as exact keeps
  // both directions safe because it enters negatively below and positively
  // above, in each case multiplied by the positive tail mass.
  const Interval sup = Interval::point(residual.value);
  const Interval core = agg.alpha_partial + agg.weight_term - agg.log_ratio_sum;
  const Interval total_excess = weight_remainder_total_bound(agg.weight_order);
  const Interval low = core - total_excess + eps * (weights.value - gamma - sup);
  const Interval inv_n = Interval::from_ratio(1, agg.n_max);
  const Interval high = core + eps * (weights.value + inv_n - gamma + sup);

  BoundsReport report;
  report.n_max = agg.n_max;
  report.weight_order = agg.weight_order;
  report.alpha_partial = agg.alpha_partial;
  report.tail_mass = eps;
  report.log_ratio_sum = agg.log_ratio_sum;
  report.weight_term = agg.weight_term;
  report.prime_weight_total = weights.value;
  report.residual_sup = residual.value;
  report.alpha_lo = low.lo;
  report.alpha_hi = high.hi;
  if (!(report.alpha_lo < report.alpha_hi)) {
    throw ConsistencyError("alpha bounds inverted; aborting rather than clamping");
  }

  const Interval denom = one_minus_exp_neg_gamma();
  report.c_lo = (Interval{report.alpha_lo, report.alpha_lo} / denom).lo;
  report.c_hi = (Interval{report.alpha_hi, report.alpha_hi} / denom).hi;
  if (!(report.c_lo < report.c_hi)) {
    throw ConsistencyError("c bounds inverted; aborting rather than clamping");
  }

  // Diagnostic width prediction from the asymptotic gap; plain doubles.
  if (agg.n_max >= 2) {
    double c_mid = 0.5 * (report.c_lo + report.c_hi);
    double exp_neg_gamma = std::exp(-gamma.mid());
    report.predicted_gap = 2.0 * c_mid * exp_neg_gamma * residual.value /
                           ((1.0 - exp_neg_gamma) * std::log(double(agg.n_max)));
  }

  // The three-term gap decomposition describes the realized width exactly
  // only while the global excess bound stays at least as fine as 1/N.
  std::uint64_t excess_scale = std::uint64_t(agg.weight_order)
                               << (2 * agg.weight_order + 3);
  if (excess_scale < agg.n_max) {
    std::fprintf(stderr,
                 "warning: weight order %d is small for n_max %llu; "
                 "the width diagnostic loses accuracy\n",
                 agg.weight_order,
                 static_cast<unsigned long long>(agg.n_max));
  }
  return report;
}

BoundsReport compute_bounds(const PipelineConfig& cfg, int extension_k0) {
  Aggregates agg = run_pipeline(cfg);
  WeightSum weights = weight_sum_over_primes(2 * cfg.n_max, cfg.weight_order);
  ResidualBound residual = residual_bound_at(2 * cfg.n_max, extension_k0);
  return assemble(agg, weights, residual);
}

}  // namespace pnc
