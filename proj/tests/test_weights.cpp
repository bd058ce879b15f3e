#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>

#include "pnc/errors.hpp"
#include "pnc/interval.hpp"
#include "pnc/primes.hpp"
#include "pnc/weights.hpp"

using namespace pnc;

TEST_CASE("closed form matches hand computed values") {
  // q = 3, J = 2: -log(2/3)/3 - 2/(1*9*8) - 2/(2*27*26).
  PrimeWeight w32 = prime_weight(3, 2);
  CHECK(w32.q == 3);
  CHECK(w32.order == 2);
  CHECK(w32.value.contains(0.1059527568337755917));
  CHECK(w32.value.width() < 1e-14);

  Interval hand = -iv_log(Interval::from_ratio(2, 3)) / Interval::point(3.0) -
                  Interval::from_ratio(2, 72) - Interval::from_ratio(2, 1404);
  CHECK(hand.lo <= w32.value.hi);
  CHECK(w32.value.lo <= hand.hi);

  CHECK(prime_weight(2, 13).value.contains(0.2526081216858980728));
  CHECK(prime_weight(2, 2).value.contains(0.2543116855180678928));
}

TEST_CASE("remainder bounds") {
  // q = 2, J = 13: 1/(13 * 2^28 * 3).
  PrimeWeight w = prime_weight(2, 13);
  CHECK(w.remainder_bound > 0.0);
  CHECK(w.remainder_bound >= 1.0 / 10468982784.0);
  CHECK(w.remainder_bound < 1.1 / 10468982784.0);

  Interval total2 = weight_remainder_total_bound(2);
  CHECK(total2.contains(0.00390625));  // 1/256
  CHECK(total2.width() < 1e-17);

  Interval total13 = weight_remainder_total_bound(13);
  CHECK(total13.contains(1.0 / 6979321856.0));  // 1/(13 * 2^29)

  // Per prime remainders summed over many primes stay under the global cap.
  for (int order : {2, 5, 13}) {
    Interval acc = Interval::zero();
    for (std::uint32_t q : small_primes(10000)) {
      acc += Interval::point(prime_weight(q, order).remainder_bound);
    }
    CHECK(acc.hi <= weight_remainder_total_bound(order).hi);
  }
}

TEST_CASE("closed form sandwiches the direct series") {
  for (std::uint32_t q : small_primes(1000)) {
    for (int order : {2, 5, 13}) {
      PrimeWeight w = prime_weight(q, order);
      Interval s = prime_weight_series(q, 200);
      Interval diff = w.value - s;
      // The truncation sits above the full series by at most the remainder.
      CHECK(diff.hi >= 0.0);
      CHECK(diff.lo <= w.remainder_bound);
      // And the full series stays below 1/(q(q-1)).
      Interval cap = Interval::one() /
                     (Interval::from_uint(q) * Interval::from_uint(q - 1));
      CHECK(s.hi < cap.lo);
      CHECK(s.lo > 0.0);
    }
  }
}

TEST_CASE("weights decrease as the truncation order grows") {
  // Strict decrease while the correction term is above double resolution,
  // never an increase once it drowns in rounding.
  for (std::uint64_t q : {2, 3, 5}) {
    double prev = prime_weight(q, 2).value.mid();
    for (int order = 3; order <= 20; ++order) {
      double cur = prime_weight(q, order).value.mid();
      if (order <= 8) {
        CHECK(cur < prev);
      } else {
        CHECK(cur <= prev);
      }
      prev = cur;
    }
  }
}

TEST_CASE("weights decrease in q roughly like 1/q^2") {
  double prev = prime_weight(2, 13).value.mid();
  for (std::uint32_t q : {3, 5, 7, 11, 13}) {
    double cur = prime_weight(q, 13).value.mid();
    CHECK(cur < prev);
    prev = cur;
  }
  CHECK(prime_weight(101, 13).value.hi < 1.0 / (101.0 * 100.0));
  CHECK(prime_weight(9973, 13).value.hi < 1.1e-8);
}

TEST_CASE("argument guards") {
  CHECK_THROWS_AS(prime_weight(2, 1), ConfigError);
  CHECK_THROWS_AS(prime_weight(2, 29), ConfigError);
  CHECK_THROWS_AS(prime_weight(1, 5), ConfigError);
  CHECK_THROWS_AS(prime_weight(0, 5), ConfigError);
  CHECK_THROWS_AS(weight_remainder_total_bound(1), ConfigError);
  CHECK_THROWS_AS(weight_remainder_total_bound(29), ConfigError);
  CHECK_THROWS_AS(prime_weight_series(1, 50), ConfigError);
  CHECK_THROWS_AS(prime_weight_series(2, 0), ConfigError);
  CHECK_NOTHROW(prime_weight(4, 5));  // only primality is the caller's duty
}
