#pragma once

#include <cstdint>
#include <vector>

namespace pnc {

struct PracticalRow {
  std::uint64_t n;
  std::uint64_t sigma;

  // Largest prime allowed to extend n while keeping the structure intact.
  std::uint64_t threshold() const { return sigma + 1; }

  friend bool operator==(const PracticalRow&, const PracticalRow&) = default;
};

// Exact sum of divisors, computed from the factorization.
std::uint64_t divisor_sum(std::uint64_t n);

// Structural test: factor n in ascending prime order and require each new
// prime to be at most one more than the divisor sum of the prefix before it
// (ties accepted).
bool is_practical(std::uint64_t n);

// Brute-force reference: true iff every m in [1, n] is a sum of distinct
// divisors of n, decided by a subset-sum bitset.  Test only; refuses n above
// the cost guard of 100000.
bool is_practical_subset_sum(std::uint64_t n);

struct EnumerateConfig {
  std::uint64_t n_max = 0;
  int threads = 1;
  std::uint64_t mem_budget_bytes = std::uint64_t{2} << 30;
};

// Every practical n <= n_max with its exact divisor sum, ascending in n.
// Cost is sieve-like: each slot is touched once per prime dividing it.
std::vector<PracticalRow> enumerate_practical(const EnumerateConfig& cfg);

inline std::vector<PracticalRow> enumerate_practical(std::uint64_t n_max) {
  EnumerateConfig cfg;
  cfg.n_max = n_max;
  return enumerate_practical(cfg);
}

}  // namespace pnc
