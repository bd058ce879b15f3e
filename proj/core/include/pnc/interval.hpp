#pragma once

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdint>
#include <limits>

#include "pnc/errors.hpp"

namespace pnc {

// Number of outward steps applied to every endpoint that is not provably
// exact.  The default of 1 is already sound; raising it only widens results.
// Not thread safe: set it before any worker threads run interval code.
int widening_steps();
void set_widening_steps(int k);

// Temporarily overrides the widening step count and restores it on scope exit.
class WideningGuard {
 public:
  explicit WideningGuard(int k) : saved_(widening_steps()) {
    set_widening_steps(k);
  }
  ~WideningGuard() { set_widening_steps(saved_); }
  WideningGuard(const WideningGuard&) = delete;
  WideningGuard& operator=(const WideningGuard&) = delete;

 private:
  int saved_;
};

inline double next_up(double x) {
  return std::nextafter(x, std::numeric_limits<double>::infinity());
}

inline double next_down(double x) {
  return std::nextafter(x, -std::numeric_limits<double>::infinity());
}

inline double step_up(double x, int k) {
  for (int i = 0; i < k; ++i) x = next_up(x);
  return x;
}

inline double step_down(double x, int k) {
  for (int i = 0; i < k; ++i) x = next_down(x);
  return x;
}

// Closed interval [lo, hi] of doubles that is guaranteed to contain the exact
// real value it tracks.  Every operation rounds outward, so containment
// survives arbitrary composition.  Endpoints are computed in the default
// round-to-nearest mode and then stepped outward; error-free transforms
// detect exact results and skip the step.  This requires that the compiler
// does not contract floating point expressions (the build forces
// -ffp-contract=off on every consumer of this header).
struct Interval {
  double lo;
  double hi;

  static Interval point(double x) {
    assert(std::isfinite(x));
    return {x, x};
  }
  static Interval zero() { return {0.0, 0.0}; }
  static Interval one() { return {1.0, 1.0}; }
  // Exact for n < 2^53, otherwise a 1 ulp outward bracket of n.
  static Interval from_uint(std::uint64_t n);
  static Interval from_ratio(std::uint64_t num, std::uint64_t den);

  bool contains(double x) const { return lo <= x && x <= hi; }
  bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }
  double width() const { return hi - lo; }
  double mid() const { return 0.5 * (lo + hi); }
  // Upper bound on |x| over the interval.
  double mag() const { return std::max(std::fabs(lo), std::fabs(hi)); }
  bool valid() const { return lo <= hi && std::isfinite(lo) && std::isfinite(hi); }

  friend bool operator==(const Interval&, const Interval&) = default;
};

namespace detail {

// 2Sum: err == 0 certifies that a + b rounded to nearest is exact.
inline bool add_is_exact(double a, double b, double s) {
  if (!std::isfinite(s)) return false;
  double bb = s - a;
  double err = (a - (s - bb)) + (b - bb);
  return err == 0.0;
}

struct RoundedProduct {
  double p;
  bool exact;
};

inline RoundedProduct rounded_product(double a, double b) {
  double p = a * b;
  double err = std::fma(a, b, -p);
  return {p, err == 0.0 && std::isfinite(p)};
}

inline double scrub_zero(double x) { return x == 0.0 ? 0.0 : x; }

}  // namespace detail

inline Interval operator-(const Interval& a) { return {-a.hi, -a.lo}; }

inline Interval operator+(const Interval& a, const Interval& b) {
  assert(a.valid() && b.valid());
  int k = widening_steps();
  double lo = a.lo + b.lo;
  if (!detail::add_is_exact(a.lo, b.lo, lo)) lo = step_down(lo, k);
  double hi = a.hi + b.hi;
  if (!detail::add_is_exact(a.hi, b.hi, hi)) hi = step_up(hi, k);
  return {detail::scrub_zero(lo), detail::scrub_zero(hi)};
}

inline Interval operator-(const Interval& a, const Interval& b) {
  return a + (-b);
}

inline Interval operator*(const Interval& a, const Interval& b) {
  assert(a.valid() && b.valid());
  if ((a.lo == 0.0 && a.hi == 0.0) || (b.lo == 0.0 && b.hi == 0.0)) {
    return Interval::zero();
  }
  using detail::rounded_product;
  detail::RoundedProduct c[4] = {
      rounded_product(a.lo, b.lo), rounded_product(a.lo, b.hi),
      rounded_product(a.hi, b.lo), rounded_product(a.hi, b.hi)};
  // On ties prefer the inexact candidate: an inexact product rounded to the
  // same double may hide a real value just beyond it, so it must be widened.
  int ilo = 0;
  int ihi = 0;
  for (int i = 1; i < 4; ++i) {
    if (c[i].p < c[ilo].p || (c[i].p == c[ilo].p && !c[i].exact)) ilo = i;
    if (c[i].p > c[ihi].p || (c[i].p == c[ihi].p && !c[i].exact)) ihi = i;
  }
  int k = widening_steps();
  double lo = c[ilo].exact ? c[ilo].p : step_down(c[ilo].p, k);
  double hi = c[ihi].exact ? c[ihi].p : step_up(c[ihi].p, k);
  return {detail::scrub_zero(lo), detail::scrub_zero(hi)};
}

inline Interval operator/(const Interval& a, const Interval& b) {
  assert(a.valid() && b.valid());
  if (b.lo <= 0.0 && 0.0 <= b.hi) {
    throw ConsistencyError("interval division by an interval containing zero");
  }
  if (a.lo == 0.0 && a.hi == 0.0) return Interval::zero();
  // Quotients are rarely exact; widen unconditionally.
  double q[4] = {a.lo / b.lo, a.lo / b.hi, a.hi / b.lo, a.hi / b.hi};
  int k = widening_steps();
  double lo = step_down(*std::min_element(q, q + 4), k);
  double hi = step_up(*std::max_element(q, q + 4), k);
  return {detail::scrub_zero(lo), detail::scrub_zero(hi)};
}

inline Interval& operator+=(Interval& a, const Interval& b) { return a = a + b; }
inline Interval& operator-=(Interval& a, const Interval& b) { return a = a - b; }
inline Interval& operator*=(Interval& a, const Interval& b) { return a = a * b; }

// Enclosure of log over the interval.  The libm result is faithful but not
// correctly rounded, so endpoints get twice the usual widening; the kernel
// self test checks this margin against independently computed references.
inline Interval iv_log(const Interval& a) {
  assert(a.valid());
  if (!(a.lo > 0.0)) {
    throw ConsistencyError("iv_log requires a strictly positive interval");
  }
  int k2 = 2 * widening_steps();
  double lo = a.lo == 1.0 ? 0.0 : step_down(std::log(a.lo), k2);
  double hi = a.hi == 1.0 ? 0.0 : step_up(std::log(a.hi), k2);
  return {lo, hi};
}

inline Interval iv_exp(const Interval& a) {
  assert(a.valid());
  int k2 = 2 * widening_steps();
  double lo = a.lo == 0.0 ? 1.0 : step_down(std::exp(a.lo), k2);
  double hi = a.hi == 0.0 ? 1.0 : step_up(std::exp(a.hi), k2);
  return {detail::scrub_zero(lo), hi};
}

// Bracket of Euler's constant, about 2 ulp wide.
Interval euler_gamma();

// 1 - exp(-gamma), always derived through interval operations.
Interval one_minus_exp_neg_gamma();

// Verifies the arithmetic kernel against frozen independently computed
// references: bracket containment for log and exp on a fixed point set plus
// a handful of algebraic identities.  Throws ConsistencyError on the first
// violation.  Cheap enough to run at every program start.
void kernel_selftest();

}  // namespace pnc
