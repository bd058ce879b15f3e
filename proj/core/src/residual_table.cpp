#include "pnc/residual_table.hpp"

#include <algorithm>
#include <array>

#include "pnc/errors.hpp"
#include "pnc/primes.hpp"

namespace pnc {

namespace {

// Rows for exponents 24..38, scaled by 1e-8 (e.g. 36800 means 3.6800e-4).
constexpr std::uint64_t kBoundScaled[] = {36800, 27650, 17600, 13040, 8173,
                                          6377,  5122,  3143,  2174,  1654,
                                          1101,  833,   569,   438,   305};
constexpr int kRows = 15;

double row_value(int k) {
  static const std::array<double, kRows> values = [] {
    std::array<double, kRows> v{};
    for (int i = 0; i < kRows; ++i) {
      v[static_cast<std::size_t>(i)] =
          (Interval::from_uint(kBoundScaled[i]) / Interval::from_uint(100000000)).hi;
    }
    return v;
  }();
  if (k < ResidualBoundTable::kMinExponent || k > ResidualBoundTable::kMaxExponent) {
    throw ConfigError("residual bound table covers exponents 24 through 38 only");
  }
  return values[static_cast<std::size_t>(k - ResidualBoundTable::kMinExponent)];
}

Interval prime_term(std::uint64_t p) {
  return iv_log(Interval::from_uint(p)) / Interval::from_uint(p - 1);
}

}  // namespace

Interval log_sum_residual(std::uint64_t x) {
  if (x < 2) throw ConfigError("log_sum_residual requires x >= 2");
  Interval sum = Interval::zero();
  for_each_prime(2, x, [&](std::uint64_t p) { sum += prime_term(p); });
  return sum - iv_log(Interval::from_uint(x)) + euler_gamma();
}

double log_sum_residual_sup(std::uint64_t a, std::uint64_t b) {
  if (a < 2 || b < a) {
    throw ConfigError("log_sum_residual_sup requires 2 <= a <= b");
  }
  const Interval gamma = euler_gamma();
  Interval sum = Interval::zero();
  double sup = 0.0;
  bool seen_a = false;
  PrimeStream primes(2, b);
  while (std::uint64_t p = primes.next()) {
    if (!seen_a && p > a) {
      sup = std::max(sup, (sum - iv_log(Interval::from_uint(a)) + gamma).mag());
      seen_a = true;
    }
    Interval log_p = iv_log(Interval::from_uint(p));
    Interval term = log_p / Interval::from_uint(p - 1);
    if (p >= a) {
      sup = std::max(sup, (sum - log_p + gamma).mag());  // left limit at p
      sum += term;
      sup = std::max(sup, (sum - log_p + gamma).mag());  // value at p
    } else {
      sum += term;
    }
  }
  if (!seen_a) {
    sup = std::max(sup, (sum - iv_log(Interval::from_uint(a)) + gamma).mag());
  }
  sup = std::max(sup, (sum - iv_log(Interval::from_uint(b)) + gamma).mag());
  return sup;
}

Interval log_sum_residual_completed(std::uint64_t x, std::uint64_t tail_cutoff) {
  if (tail_cutoff < x) throw ConfigError("tail cutoff below evaluation point");
  Interval value = log_sum_residual(x);
  Interval partial = Interval::zero();
  for_each_prime(x + 1, tail_cutoff, [&](std::uint64_t p) {
    partial += iv_log(Interval::from_uint(p)) /
               (Interval::from_uint(p) * Interval::from_uint(p - 1));
  });
  Interval tail_cap = (Interval::one() + iv_log(Interval::from_uint(tail_cutoff))) /
                      Interval::from_uint(tail_cutoff);
  return value + partial + Interval{0.0, tail_cap.hi};
}

double ResidualBoundTable::sup_bound(std::uint64_t x) {
  if (x < (std::uint64_t{1} << kMinExponent)) {
    throw ConfigError("residual bound table starts at 2^24");
  }
  int k = kMinExponent;
  while (k < kMaxExponent && (std::uint64_t{1} << (k + 1)) <= x) ++k;
  return row_value(k);
}

bool ResidualBoundTable::verify_prefix(int k, std::uint64_t span_limit) {
  double bound = row_value(k);
  double scanned = log_sum_residual_sup(std::uint64_t{1} << k, span_limit);
  return scanned <= bound;
}

double residual_sup_bound(std::uint64_t x, int extension_k0) {
  if (x < 2) throw ConfigError("residual_sup_bound requires x >= 2");
  if (x >= (std::uint64_t{1} << ResidualBoundTable::kMinExponent)) {
    return ResidualBoundTable::sup_bound(x);
  }
  if (extension_k0 < ResidualBoundTable::kMinExponent ||
      extension_k0 > ResidualBoundTable::kMaxExponent) {
    throw ConfigError("extension anchor must lie in [24, 38]");
  }
  double scanned = log_sum_residual_sup(x, std::uint64_t{1} << extension_k0);
  return std::max(scanned, row_value(extension_k0));
}

}  // namespace pnc
