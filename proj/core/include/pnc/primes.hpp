#pragma once

#include <cstdint>
#include <vector>

namespace pnc {

// Hard ceiling on any prime enumeration endpoint.  Guards against runaway
// ranges; the sieve itself runs in fixed-size segments regardless.
std::uint64_t prime_limit_guard();
void set_prime_limit_guard(std::uint64_t v);

std::uint64_t isqrt(std::uint64_t n);

// Primes <= n by a plain sieve; meant for base primes and tests.
std::vector<std::uint32_t> small_primes(std::uint32_t n);

// Ascending stream of the primes in [lo, hi], backed by a segmented sieve
// with odd-only bit packing (256 KiB of bits per segment).
class PrimeStream {
 public:
  static constexpr std::uint64_t kSegmentIntegers = std::uint64_t{1} << 22;

  PrimeStream(std::uint64_t lo, std::uint64_t hi);
  explicit PrimeStream(std::uint64_t hi) : PrimeStream(2, hi) {}

  // Next prime in increasing order, or 0 after the last one.
  std::uint64_t next();

 private:
  void refill();

  std::uint64_t hi_;
  std::uint64_t cursor_;  // start of the segment to sieve next
  std::vector<std::uint32_t> base_;
  std::vector<std::uint64_t> out_;
  std::size_t pos_ = 0;
};

template <typename Fn>
void for_each_prime(std::uint64_t lo, std::uint64_t hi, Fn&& fn) {
  PrimeStream s(lo, hi);
  while (std::uint64_t p = s.next()) fn(p);
}

}  // namespace pnc
