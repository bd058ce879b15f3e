#include "pnc/pipeline.hpp"

#include <algorithm>
#include <numeric>

#include "pnc/errors.hpp"
#include "pnc/primes.hpp"
#include "pnc/weights.hpp"

namespace pnc {

namespace {

// Row visit order for the single prime stream: ascending threshold, ties by n.
std::vector<std::uint32_t> threshold_order(const std::vector<PracticalRow>& rows) {
  if (rows.size() > std::size_t{1} << 32) {
    throw ConsistencyError("row index exceeds 32 bits");
  }
  std::vector<std::uint32_t> order(rows.size());
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (rows[a].sigma != rows[b].sigma) return rows[a].sigma < rows[b].sigma;
    return rows[a].n < rows[b].n;
  });
  return order;
}

// Mertens products at each row's threshold, indexed like rows.
std::vector<Interval> mertens_snapshots(const std::vector<PracticalRow>& rows) {
  std::vector<std::uint32_t> order = threshold_order(rows);
  std::vector<Interval> out(rows.size());
  if (rows.empty()) return out;
  std::uint64_t max_threshold = rows[order.back()].threshold();
  Interval mertens = Interval::one();
  const Interval one = Interval::one();
  PrimeStream primes(2, max_threshold);
  std::uint64_t next_prime = primes.next();
  for (std::uint32_t idx : order) {
    std::uint64_t t = rows[idx].threshold();
    while (next_prime != 0 && next_prime <= t) {
      mertens *= one - one / Interval::from_uint(next_prime);
      next_prime = primes.next();
    }
    out[idx] = mertens;
  }
  return out;
}

int q_exponent(std::uint64_t n, std::uint64_t q) {
  int e = 0;
  while (n % q == 0) {
    n /= q;
    ++e;
  }
  return e;
}

}  // namespace

PrimeAccumulator::PrimeAccumulator(int weight_order) : weight_order_(weight_order) {
  if (weight_order < 2) throw ConfigError("weight order must be at least 2");
}

void PrimeAccumulator::advance(std::uint64_t p) {
  if (p <= position_) {
    throw ConsistencyError("prime accumulator requires strictly ascending primes");
  }
  Interval pv = Interval::from_uint(p);
  mertens_ *= Interval::one() - Interval::one() / pv;
  log_weight_sum_ += iv_log(pv) / Interval::from_uint(p - 1);
  weight_sum_ += prime_weight(p, weight_order_).value;
  position_ = p;
}

std::vector<AugmentedRow> augment_rows(const std::vector<PracticalRow>& rows,
                                       int weight_order) {
  std::vector<std::uint32_t> order = threshold_order(rows);
  std::vector<AugmentedRow> out(rows.size());
  if (rows.empty()) return out;
  std::uint64_t max_threshold = rows[order.back()].threshold();
  PrimeAccumulator acc(weight_order);
  PrimeStream primes(2, max_threshold);
  std::uint64_t next_prime = primes.next();
  std::uint64_t prev_threshold = 0;
  for (std::uint32_t idx : order) {
    std::uint64_t t = rows[idx].threshold();
    if (t < prev_threshold) {
      throw ConsistencyError("threshold order regressed during augmentation");
    }
    prev_threshold = t;
    while (next_prime != 0 && next_prime <= t) {
      acc.advance(next_prime);
      next_prime = primes.next();
    }
    out[idx] = {rows[idx], acc.mertens(), acc.log_weight_sum(), acc.weight_sum()};
  }
  return out;
}

Aggregates fold_rows(const std::vector<AugmentedRow>& rows, std::uint64_t n_max,
                     int weight_order) {
  Interval alpha = Interval::zero();
  Interval mass = Interval::zero();
  Interval log_ratio = Interval::zero();
  Interval weight = Interval::zero();
  std::uint64_t prev_n = 0;
  for (const AugmentedRow& r : rows) {
    if (r.row.n <= prev_n) {
      throw ConsistencyError("fold requires rows strictly ascending in n");
    }
    prev_n = r.row.n;
    Interval nv = Interval::from_uint(r.row.n);
    Interval base = r.mertens / nv;
    Interval log_n = iv_log(nv);
    alpha += base * (r.log_weight_sum - log_n);
    mass += base;
    log_ratio += base * (iv_log(Interval::from_uint(r.row.sigma)) - log_n);
    weight += base * r.weight_sum;
  }
  Aggregates out;
  out.n_max = n_max;
  out.weight_order = weight_order;
  out.alpha_partial = alpha;
  out.tail_mass = Interval::one() - mass;
  out.log_ratio_sum = log_ratio;
  out.weight_term = weight;
  return out;
}

Aggregates run_pipeline(const PipelineConfig& cfg) {
  if (cfg.n_max < 1) throw ConfigError("pipeline requires n_max >= 1");
  if (cfg.weight_order < 2) throw ConfigError("weight order must be at least 2");
  EnumerateConfig ecfg;
  ecfg.n_max = cfg.n_max;
  ecfg.threads = cfg.threads;
  ecfg.mem_budget_bytes = cfg.mem_budget_bytes;
  std::vector<PracticalRow> rows = enumerate_practical(ecfg);
  std::uint64_t augmented_bytes = rows.size() * sizeof(AugmentedRow);
  if (augmented_bytes > cfg.mem_budget_bytes) {
    throw ConfigError("augmented table would exceed the memory budget");
  }
  std::vector<AugmentedRow> augmented = augment_rows(rows, cfg.weight_order);
  return fold_rows(augmented, cfg.n_max, cfg.weight_order);
}

Interval identity_partial_sum(std::uint64_t n_max) {
  std::vector<PracticalRow> rows = enumerate_practical(n_max);
  std::vector<Interval> mertens = mertens_snapshots(rows);
  Interval mass = Interval::zero();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    mass += mertens[i] / Interval::from_uint(rows[i].n);
  }
  return mass;
}

double slice_identity_residual(std::uint64_t q, int h, std::uint64_t n_max) {
  if (q < 2 || h < 1) throw ConfigError("slice identity requires q >= 2, h >= 1");
  std::vector<PracticalRow> rows = enumerate_practical(n_max);
  std::vector<Interval> mertens = mertens_snapshots(rows);
  Interval left = Interval::zero();
  Interval right = Interval::zero();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    Interval term = mertens[i] / Interval::from_uint(rows[i].n);
    if (q_exponent(rows[i].n, q) == h) left += term;
    if (rows[i].threshold() >= q) right += term;
  }
  Interval qv = Interval::from_uint(q);
  Interval factor = Interval::one() - Interval::one() / qv;  // (1-1/q)
  for (int i = 0; i < h; ++i) factor = factor / qv;          // / q^h
  return (left - factor * right).mag();
}

}  // namespace pnc
