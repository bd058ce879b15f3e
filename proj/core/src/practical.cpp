#include "pnc/practical.hpp"

#include <atomic>
#include <thread>

#include "pnc/errors.hpp"
#include "pnc/primes.hpp"

namespace pnc {

namespace {

constexpr std::uint64_t kMaxEnumerate = std::uint64_t{1} << 26;
constexpr std::uint64_t kOracleGuard = 100000;
constexpr std::uint64_t kEnumSegment = std::uint64_t{1} << 20;

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw ConsistencyError("divisor sum overflows 64 bits");
  }
  return r;
}

// sigma(p^e) = 1 + p + ... + p^e, overflow checked.
std::uint64_t prime_power_divisor_sum(std::uint64_t p, int e) {
  std::uint64_t s = 1;
  std::uint64_t pw = 1;
  for (int i = 0; i < e; ++i) {
    pw = checked_mul(pw, p);
    if (__builtin_add_overflow(s, pw, &s)) {
      throw ConsistencyError("divisor sum overflows 64 bits");
    }
  }
  return s;
}

// Emits the practical rows with n in [lo, hi] using the shared base primes.
void enumerate_segment(std::uint64_t lo, std::uint64_t hi,
                       const std::vector<std::uint32_t>& base,
                       std::vector<PracticalRow>& out) {
  std::size_t len = static_cast<std::size_t>(hi - lo + 1);
  std::vector<std::uint32_t> cofactor(len);
  std::vector<std::uint64_t> prefix_sigma(len, 1);
  std::vector<std::uint8_t> alive(len, 1);
  for (std::size_t i = 0; i < len; ++i) {
    cofactor[i] = static_cast<std::uint32_t>(lo + i);
  }
  for (std::uint32_t p : base) {
    if (std::uint64_t{p} * p > hi) break;
    std::uint64_t start = (lo + p - 1) / p * p;
    for (std::uint64_t m = start; m <= hi; m += p) {
      std::size_t i = static_cast<std::size_t>(m - lo);
      if (!alive[i]) continue;
      if (p > prefix_sigma[i] + 1) {
        alive[i] = 0;
        continue;
      }
      std::uint32_t c = cofactor[i];
      std::uint64_t pps = 1;
      std::uint64_t pw = 1;
      while (c % p == 0) {
        c /= p;
        pw *= p;
        pps += pw;
      }
      cofactor[i] = c;
      prefix_sigma[i] *= pps;
    }
  }
  for (std::size_t i = 0; i < len; ++i) {
    if (!alive[i]) continue;
    std::uint64_t n = lo + i;
    std::uint64_t sigma = prefix_sigma[i];
    std::uint64_t rest = cofactor[i];  // prime with exponent 1, or 1
    if (rest > 1) {
      if (rest > sigma + 1) continue;
      sigma *= rest + 1;
    }
    if (n >= 2 && sigma + 1 < 2 * n) {
      throw ConsistencyError("practical row with threshold below 2n");
    }
    out.push_back({n, sigma});
  }
}

}  // namespace

std::uint64_t divisor_sum(std::uint64_t n) {
  if (n == 0) throw ConfigError("divisor_sum requires n >= 1");
  std::uint64_t sigma = 1;
  std::uint64_t m = n;
  for (std::uint64_t p = 2; p * p <= m; p += p == 2 ? 1 : 2) {
    if (m % p != 0) continue;
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    sigma = checked_mul(sigma, prime_power_divisor_sum(p, e));
  }
  if (m > 1) sigma = checked_mul(sigma, prime_power_divisor_sum(m, 1));
  return sigma;
}

bool is_practical(std::uint64_t n) {
  if (n == 0) throw ConfigError("is_practical requires n >= 1");
  if (n == 1) return true;
  if (n & 1) return false;  // the first prime factor must be 2
  std::uint64_t prefix_sigma = 1;
  std::uint64_t m = n;
  for (std::uint64_t p = 2; p * p <= m; p += p == 2 ? 1 : 2) {
    if (m % p != 0) continue;
    if (p > prefix_sigma + 1) return false;
    std::uint64_t pps = 1;
    std::uint64_t pw = 1;
    while (m % p == 0) {
      m /= p;
      pw = checked_mul(pw, p);
      if (__builtin_add_overflow(pps, pw, &pps)) {
        throw ConsistencyError("divisor sum overflows 64 bits");
      }
    }
    prefix_sigma = checked_mul(prefix_sigma, pps);
  }
  if (m > 1) {
    if (m > prefix_sigma + 1) return false;
    prefix_sigma = checked_mul(prefix_sigma, m + 1);
  }
  return true;
}

bool is_practical_subset_sum(std::uint64_t n) {
  if (n == 0) throw ConfigError("is_practical_subset_sum requires n >= 1");
  if (n > kOracleGuard) {
    throw ConfigError("subset-sum reference refuses n > 100000");
  }
  std::vector<std::uint64_t> divisors;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    divisors.push_back(d);
    if (d != n / d) divisors.push_back(n / d);
  }
  // reachable[m] = 1 iff m is a sum of distinct divisors; bits above n are
  // irrelevant and allowed to be stale.
  std::size_t words = static_cast<std::size_t>(n / 64) + 1;
  std::vector<std::uint64_t> reachable(words, 0);
  reachable[0] = 1;
  for (std::uint64_t d : divisors) {
    std::size_t word_shift = static_cast<std::size_t>(d / 64);
    unsigned bit_shift = static_cast<unsigned>(d % 64);
    for (std::size_t i = words; i-- > word_shift;) {
      std::uint64_t v = reachable[i - word_shift] << bit_shift;
      if (bit_shift != 0 && i - word_shift > 0) {
        v |= reachable[i - word_shift - 1] >> (64 - bit_shift);
      }
      reachable[i] |= v;
    }
  }
  for (std::uint64_t m = 1; m <= n; ++m) {
    if (!((reachable[m >> 6] >> (m & 63)) & 1)) return false;
  }
  return true;
}

std::vector<PracticalRow> enumerate_practical(const EnumerateConfig& cfg) {
  if (cfg.n_max < 1) throw ConfigError("enumeration requires n_max >= 1");
  if (cfg.n_max > kMaxEnumerate) {
    throw ConfigError("enumeration limit above 2^26 is not supported");
  }
  if (cfg.threads < 1) throw ConfigError("thread count must be at least 1");

  std::size_t nseg = static_cast<std::size_t>((cfg.n_max + kEnumSegment - 1) / kEnumSegment);
  int threads = static_cast<int>(std::min<std::size_t>(cfg.threads, nseg));
  std::uint64_t estimate = std::uint64_t(threads) * kEnumSegment * 13  // segment arrays
                           + (cfg.n_max / 4 + 64) * sizeof(PracticalRow);
  if (estimate > cfg.mem_budget_bytes) {
    throw ConfigError("enumeration would exceed the memory budget");
  }

  std::vector<std::uint32_t> base =
      small_primes(static_cast<std::uint32_t>(isqrt(cfg.n_max)));
  std::vector<std::vector<PracticalRow>> parts(nseg);
  auto run_segment = [&](std::size_t s) {
    std::uint64_t lo = 1 + s * kEnumSegment;
    std::uint64_t hi = std::min(cfg.n_max, lo + kEnumSegment - 1);
    enumerate_segment(lo, hi, base, parts[s]);
  };
  if (threads == 1) {
    for (std::size_t s = 0; s < nseg; ++s) run_segment(s);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> failures(static_cast<std::size_t>(threads));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        try {
          for (std::size_t s = next.fetch_add(1); s < nseg; s = next.fetch_add(1)) {
            run_segment(s);
          }
        } catch (...) {
          failures[static_cast<std::size_t>(t)] = std::current_exception();
        }
      });
    }
    for (std::thread& t : pool) t.join();
    for (const std::exception_ptr& e : failures) {
      if (e) std::rethrow_exception(e);
    }
  }

  std::vector<PracticalRow> rows;
  std::size_t total = 0;
  for (const auto& part : parts) total += part.size();
  rows.reserve(total);
  for (const auto& part : parts) rows.insert(rows.end(), part.begin(), part.end());
  return rows;
}

}  // namespace pnc
