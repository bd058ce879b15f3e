// Randomized cross validation of the interval kernel against mpfr running at
// 256 bits.  The oracle value is accurate to far below one double ulp, so
// comparing it directly against the computed endpoints decides containment
// for every argument that is not itself an exact double result (the only
// such cases, log 1 and exp 0, are checked separately).
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "pnc/interval.hpp"

using namespace pnc;

namespace {

constexpr mpfr_prec_t kPrec = 256;

// True iff the oracle value lies inside [iv.lo, iv.hi].
bool oracle_inside(mpfr_t y, const Interval& iv) {
  return mpfr_cmp_d(y, iv.lo) >= 0 && mpfr_cmp_d(y, iv.hi) <= 0;
}

double random_positive(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> expo(-300, 300);
  std::uniform_real_distribution<double> frac(1.0, 2.0);
  return std::ldexp(frac(rng), expo(rng));
}

}  // namespace

TEST_CASE("log enclosures contain the oracle value") {
  std::mt19937_64 rng(1);
  mpfr_t x, y;
  mpfr_init2(x, kPrec);
  mpfr_init2(y, kPrec);
  int failures = 0;
  for (int i = 0; i < 10000; ++i) {
    double v = random_positive(rng);
    Interval r = iv_log(Interval::point(v));
    mpfr_set_d(x, v, MPFR_RNDN);
    mpfr_log(y, x, MPFR_RNDN);
    if (!oracle_inside(y, r)) ++failures;
  }
  CHECK(failures == 0);
  mpfr_clear(x);
  mpfr_clear(y);
}

TEST_CASE("exp enclosures contain the oracle value") {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> arg(-700.0, 700.0);
  mpfr_t x, y;
  mpfr_init2(x, kPrec);
  mpfr_init2(y, kPrec);
  int failures = 0;
  for (int i = 0; i < 10000; ++i) {
    double v = arg(rng);
    Interval r = iv_exp(Interval::point(v));
    mpfr_set_d(x, v, MPFR_RNDN);
    mpfr_exp(y, x, MPFR_RNDN);
    if (!oracle_inside(y, r)) ++failures;
  }
  CHECK(failures == 0);

  // Deep underflow: the enclosure may touch zero but must stay an enclosure.
  for (double v : {-745.0, -800.0, -5000.0}) {
    Interval r = iv_exp(Interval::point(v));
    mpfr_set_d(x, v, MPFR_RNDN);
    mpfr_exp(y, x, MPFR_RNDN);
    CHECK(oracle_inside(y, r));
  }
  mpfr_clear(x);
  mpfr_clear(y);
}

TEST_CASE("arithmetic enclosures contain the exact endpoint combinations") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> mag(-1e8, 1e8);
  auto draw = [&] {
    double u = mag(rng), v = mag(rng);
    return Interval{std::min(u, v), std::max(u, v)};
  };

  mpfr_t xa, xb, t, lo, hi;
  mpfr_init2(xa, kPrec);
  mpfr_init2(xb, kPrec);
  mpfr_init2(t, kPrec);
  mpfr_init2(lo, kPrec);
  mpfr_init2(hi, kPrec);

  // op(y, a, b) at 256 bits is exact for + - * on double inputs and within
  // 2^-200 relative for /, so min and max over the four endpoint products
  // pin down the exact range of the operation.
  auto check_op = [&](const Interval& a, const Interval& b, const Interval& r,
                      int op) {
    bool first = true;
    for (double da : {a.lo, a.hi}) {
      for (double db : {b.lo, b.hi}) {
        mpfr_set_d(xa, da, MPFR_RNDN);
        mpfr_set_d(xb, db, MPFR_RNDN);
        switch (op) {
          case 0: mpfr_add(t, xa, xb, MPFR_RNDN); break;
          case 1: mpfr_sub(t, xa, xb, MPFR_RNDN); break;
          case 2: mpfr_mul(t, xa, xb, MPFR_RNDN); break;
          default: mpfr_div(t, xa, xb, MPFR_RNDN); break;
        }
        if (first || mpfr_cmp(t, lo) < 0) mpfr_set(lo, t, MPFR_RNDN);
        if (first || mpfr_cmp(t, hi) > 0) mpfr_set(hi, t, MPFR_RNDN);
        first = false;
      }
    }
    return mpfr_cmp_d(lo, r.lo) >= 0 && mpfr_cmp_d(hi, r.hi) <= 0;
  };

  int failures = 0;
  for (int i = 0; i < 100000; ++i) {
    Interval a = draw();
    Interval b = draw();
    if (!check_op(a, b, a + b, 0)) ++failures;
    if (!check_op(a, b, a - b, 1)) ++failures;
    if (!check_op(a, b, a * b, 2)) ++failures;
    if (b.lo > 0.0 || b.hi < 0.0) {
      if (!check_op(a, b, a / b, 3)) ++failures;
    }
  }
  CHECK(failures == 0);

  mpfr_clear(xa);
  mpfr_clear(xb);
  mpfr_clear(t);
  mpfr_clear(lo);
  mpfr_clear(hi);
}

TEST_CASE("compound expressions stay enclosures") {
  // gamma related constants against the oracle.
  mpfr_t g, t;
  mpfr_init2(g, kPrec);
  mpfr_init2(t, kPrec);
  mpfr_const_euler(g, MPFR_RNDN);
  CHECK(oracle_inside(g, euler_gamma()));

  mpfr_neg(t, g, MPFR_RNDN);
  mpfr_exp(t, t, MPFR_RNDN);
  mpfr_ui_sub(t, 1, t, MPFR_RNDN);
  CHECK(oracle_inside(t, one_minus_exp_neg_gamma()));
  mpfr_clear(g);
  mpfr_clear(t);
}
