#include "pnc/selftest.hpp"

#include <cmath>
#include <cstdio>

#include "pnc/bounds.hpp"
#include "pnc/errors.hpp"
#include "pnc/interval.hpp"
#include "pnc/pipeline.hpp"
#include "pnc/practical.hpp"
#include "pnc/primes.hpp"
#include "pnc/report.hpp"
#include "pnc/residual_table.hpp"
#include "pnc/weights.hpp"

namespace pnc {

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

std::string span(double lo, double hi) {
  return "[" + num(lo) + ", " + num(hi) + "]";
}

constexpr double kReferenceLo = 1.33607322;
constexpr double kReferenceHi = 1.33607654;

PipelineConfig desk_config(std::uint64_t n_max, int threads) {
  PipelineConfig cfg;
  cfg.n_max = n_max;
  cfg.weight_order = 13;
  cfg.threads = threads;
  return cfg;
}

CheckResult practical_equivalence(std::uint64_t limit) {
  for (std::uint64_t n = 1; n <= limit; ++n) {
    if (is_practical(n) != is_practical_subset_sum(n)) {
      return {"practical-equivalence", false,
              "mismatch at n = " + std::to_string(n)};
    }
  }
  return {"practical-equivalence", true,
          "structural test matches the subset-sum reference for n <= " +
              std::to_string(limit)};
}

CheckResult weight_sandwich(const std::vector<std::uint64_t>& qs,
                            const std::vector<int>& orders) {
  for (std::uint64_t q : qs) {
    Interval direct = prime_weight_series(q, 200);
    Interval cap = Interval::from_ratio(1, q * (q - 1));
    if (!(direct.hi < cap.lo)) {
      return {"weight-sandwich", false,
              "series cap fails at q = " + std::to_string(q)};
    }
    for (int order : orders) {
      PrimeWeight w = prime_weight(q, order);
      Interval diff = w.value - direct;
      if (!(diff.hi >= 0.0 && diff.lo <= w.remainder_bound)) {
        return {"weight-sandwich", false,
                "closed form strays at q = " + std::to_string(q) +
                    ", order " + std::to_string(order) + ", diff " +
                    span(diff.lo, diff.hi) + ", bound " +
                    num(w.remainder_bound)};
      }
    }
  }
  return {"weight-sandwich", true,
          "closed form sits within its remainder bound of the series"};
}

CheckResult residual_spot_values() {
  Interval gamma = euler_gamma();
  Interval at2 = log_sum_residual(2);
  bool ok2 = at2.contains(gamma);
  Interval at10 = log_sum_residual(10);
  bool ok10 = at10.lo <= 0.243760 + 1e-5 && at10.hi >= 0.243760 - 1e-5;
  Interval at24 = log_sum_residual(std::uint64_t{1} << 24);
  bool ok24 = at24.mag() <= 36.80e-5;
  bool ok = ok2 && ok10 && ok24;
  return {"residual-spot-values", ok,
          "residual(2) = " + span(at2.lo, at2.hi) + ", residual(10) = " +
              span(at10.lo, at10.hi) + ", |residual(2^24)| <= " +
              num(at24.mag())};
}

}  // namespace

std::vector<CheckResult> run_fast_selftest() {
  std::vector<CheckResult> out;
  try {
    kernel_selftest();
    out.push_back({"kernel-references", true,
                   "log and exp enclosures contain the frozen brackets"});
  } catch (const std::exception& e) {
    out.push_back({"kernel-references", false, e.what()});
    return out;
  }
  out.push_back(practical_equivalence(5000));
  std::vector<std::uint64_t> qs;
  for (std::uint32_t q : small_primes(100)) qs.push_back(q);
  out.push_back(weight_sandwich(qs, {13}));
  out.push_back(residual_spot_values());
  return out;
}

std::vector<CheckResult> run_acceptance_suite() {
  std::vector<CheckResult> out;

  // 1: the structural test must agree with the subset-sum reference.
  out.push_back(practical_equivalence(20000));

  // 2: desk-scale certified intervals must overlap the reference interval
  // 1.33607322 < c < 1.33607654, and the larger run must be tighter.
  BoundsReport r20 = compute_bounds(desk_config(std::uint64_t{1} << 20, 1), 24);
  BoundsReport r22 = compute_bounds(desk_config(std::uint64_t{1} << 22, 1), 24);
  {
    bool overlap20 = r20.c_lo < kReferenceHi && r20.c_hi > kReferenceLo;
    bool overlap22 = r22.c_lo < kReferenceHi && r22.c_hi > kReferenceLo;
    bool tighter = (r22.c_hi - r22.c_lo) < (r20.c_hi - r20.c_lo);
    out.push_back({"reference-interval-overlap",
                   overlap20 && overlap22 && tighter,
                   "c at 2^20 " + span(r20.c_lo, r20.c_hi) + ", at 2^22 " +
                       span(r22.c_lo, r22.c_hi)});
  }

  // 3: realized width against the asymptotic prediction, order of magnitude.
  {
    double ratio = (r20.c_hi - r20.c_lo) / r20.predicted_gap;
    out.push_back({"width-prediction-ratio", ratio >= 0.3 && ratio <= 3.0,
                   "width / predicted = " + num(ratio)});
  }

  // 4: tail mass decays like c e^-gamma / log N.
  {
    double target = 1.336 * std::exp(-euler_gamma().mid());
    double value = r20.tail_mass.mid() * std::log(1048576.0);
    bool ok = value >= 0.8 * target && value <= 1.2 * target;
    out.push_back({"tail-mass-decay", ok,
                   "eps log N = " + num(value) + ", target " + num(target)});
  }

  // 5: closed-form weights against the direct series.
  out.push_back(weight_sandwich({2, 3, 5, 7, 11, 101}, {2, 5, 13}));

  // 6: truncated slice identity at n_max 10^5.
  {
    Interval eps = Interval::one() - identity_partial_sum(100000);
    bool ok = true;
    std::string detail;
    const std::pair<std::uint64_t, int> slices[] = {{2, 1}, {2, 2}, {3, 1}, {5, 1}};
    for (auto [q, h] : slices) {
      double residual = slice_identity_residual(q, h, 100000);
      Interval qv = Interval::from_uint(q);
      Interval factor = Interval::one() - Interval::one() / qv;
      for (int i = 0; i < h; ++i) factor = factor / qv;
      double allowance = eps.hi * (Interval::one() + factor).hi;
      if (!detail.empty()) detail += ", ";
      detail += "(" + std::to_string(q) + "," + std::to_string(h) + ") " +
                num(residual) + " <= " + num(allowance);
      ok = ok && residual <= allowance;
    }
    out.push_back({"slice-identity", ok, detail});
  }

  // 7: residual spot values.
  out.push_back(residual_spot_values());

  // 8: rescans of the first two frozen table rows.
  {
    bool ok24 = ResidualBoundTable::verify_prefix(24, std::uint64_t{1} << 26);
    bool ok25 = ResidualBoundTable::verify_prefix(25, std::uint64_t{1} << 26);
    out.push_back({"residual-table-prefix", ok24 && ok25,
                   std::string("row 24 ") + (ok24 ? "holds" : "fails") +
                       ", row 25 " + (ok25 ? "holds" : "fails") +
                       " over [2^k, 2^26]"});
  }

  // 9: doubling the outward widening must not narrow the certificate, and
  // the partial-sum identity must stay below 1 and keep growing.
  {
    bool contained;
    double wide_lo;
    double wide_hi;
    {
      WideningGuard guard(2 * widening_steps());
      BoundsReport wide = compute_bounds(desk_config(std::uint64_t{1} << 20, 1), 24);
      wide_lo = wide.c_lo;
      wide_hi = wide.c_hi;
      contained = wide.c_lo <= r20.c_lo && wide.c_hi >= r20.c_hi;
    }
    bool sums_ok = true;
    double prev_hi = 0.0;
    for (std::uint64_t n : {std::uint64_t{100}, std::uint64_t{1000},
                            std::uint64_t{10000}, std::uint64_t{100000},
                            std::uint64_t{1000000}}) {
      Interval s = identity_partial_sum(n);
      sums_ok = sums_ok && s.hi < 1.0 && s.lo > prev_hi;
      prev_hi = s.hi;
    }
    out.push_back({"widening-regression", contained && sums_ok,
                   "widened c " + span(wide_lo, wide_hi) +
                       (sums_ok ? ", partial sums < 1 and increasing"
                                : ", partial sums misbehave")});
  }

  // 10: byte-identical reports across reruns and thread counts.
  {
    std::string first =
        report_serialize(compute_bounds(desk_config(std::uint64_t{1} << 20, 1), 24),
                         ReportFormat::json);
    std::string second =
        report_serialize(compute_bounds(desk_config(std::uint64_t{1} << 20, 1), 24),
                         ReportFormat::json);
    std::string threaded =
        report_serialize(compute_bounds(desk_config(std::uint64_t{1} << 20, 4), 24),
                         ReportFormat::json);
    bool ok = first == second && first == threaded;
    out.push_back({"determinism", ok,
                   ok ? "three reruns agree byte for byte"
                      : "rerun reports differ"});
  }

  return out;
}

}  // namespace pnc
