#include "pnc/primes.hpp"

#include <algorithm>
#include <cmath>

#include "pnc/errors.hpp"

namespace pnc {

namespace {
std::uint64_t g_prime_limit_guard = std::uint64_t{1} << 34;
}

std::uint64_t prime_limit_guard() { return g_prime_limit_guard; }

void set_prime_limit_guard(std::uint64_t v) { g_prime_limit_guard = v; }

std::uint64_t isqrt(std::uint64_t n) {
  if (n == 0) return 0;
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r > n / r) --r;
  while (r + 1 <= n / (r + 1)) ++r;
  return r;
}

std::vector<std::uint32_t> small_primes(std::uint32_t n) {
  std::vector<std::uint32_t> out;
  if (n < 2) return out;
  std::vector<bool> composite(std::size_t{n} + 1, false);
  for (std::uint32_t i = 2; i <= n; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = std::uint64_t{i} * i; j <= n; j += i) {
      composite[static_cast<std::size_t>(j)] = true;
    }
  }
  return out;
}

PrimeStream::PrimeStream(std::uint64_t lo, std::uint64_t hi) : hi_(hi) {
  if (hi > prime_limit_guard()) {
    throw ConfigError("prime range endpoint exceeds the configured limit guard");
  }
  cursor_ = std::max<std::uint64_t>(lo, 2);
  if (cursor_ <= hi_) {
    base_ = small_primes(static_cast<std::uint32_t>(isqrt(hi_)));
  }
}

std::uint64_t PrimeStream::next() {
  while (pos_ == out_.size()) {
    if (cursor_ > hi_) return 0;
    refill();
  }
  return out_[pos_++];
}

void PrimeStream::refill() {
  out_.clear();
  pos_ = 0;
  std::uint64_t seg_lo = cursor_;
  std::uint64_t seg_hi = std::min(hi_, seg_lo + (kSegmentIntegers - 1));
  cursor_ = seg_hi + 1;
  if (seg_lo <= 2 && 2 <= seg_hi) out_.push_back(2);
  std::uint64_t first = seg_lo | 1;  // first odd candidate
  if (first < 3) first = 3;
  if (first > seg_hi) return;
  std::uint64_t nbits = (seg_hi - first) / 2 + 1;
  std::vector<std::uint64_t> composite((nbits + 63) / 64, 0);
  for (std::uint32_t p : base_) {
    if (p == 2) continue;
    std::uint64_t pp = std::uint64_t{p} * p;
    if (pp > seg_hi) break;
    std::uint64_t start = std::max(pp, (first + p - 1) / p * p);
    if ((start & 1) == 0) start += p;
    for (std::uint64_t m = start; m <= seg_hi; m += 2 * std::uint64_t{p}) {
      std::uint64_t idx = (m - first) / 2;
      composite[idx >> 6] |= std::uint64_t{1} << (idx & 63);
    }
  }
  for (std::uint64_t i = 0; i < nbits; ++i) {
    if (!((composite[i >> 6] >> (i & 63)) & 1)) out_.push_back(first + 2 * i);
  }
}

}  // namespace pnc
