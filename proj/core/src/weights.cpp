#include "pnc/weights.hpp"

#include "pnc/errors.hpp"

namespace pnc {

namespace {

void check_order(int order) {
  if (order < 2) throw ConfigError("weight order must be at least 2");
  // Order 28 keeps J * 2^(2J+3) inside 64 bits for the total bound.
  if (order > 28) throw ConfigError("weight order above 28 is not supported");
}

void check_q(std::uint64_t q) {
  if (q < 2) throw ConfigError("prime weight requires q >= 2");
}

}  // namespace

PrimeWeight prime_weight(std::uint64_t q, int order) {
  check_order(order);
  check_q(q);
  const Interval one = Interval::one();
  const Interval qv = Interval::from_uint(q);
  const Interval one_minus_qinv = one - one / qv;
  const Interval head = -iv_log(one_minus_qinv) / qv;
  const Interval qm1 = Interval::from_uint(q - 1);
  Interval sum = Interval::zero();
  Interval qpow = qv;  // q^j before the update below
  for (int j = 1; j <= order; ++j) {
    qpow *= qv;  // q^(j+1)
    sum += qm1 / (Interval::point(j) * qpow * (qpow - one));
  }
  // After the loop qpow = q^(J+1), so its square is the q^(2J+2) needed by
  // the remainder bound 1/(J q^(2J+2) (q+1)).
  Interval rb = one / (Interval::point(order) * (qpow * qpow) * Interval::from_uint(q + 1));
  return {q, order, head - sum, rb.hi};
}

Interval prime_weight_series(std::uint64_t q, int terms) {
  check_q(q);
  if (terms < 1) throw ConfigError("prime weight series needs at least one term");
  const Interval one = Interval::one();
  const Interval qv = Interval::from_uint(q);
  const Interval qinv = one / qv;
  const Interval one_minus_qinv = one - qinv;
  const Interval log_omq = iv_log(one_minus_qinv);  // negative
  Interval qpow_inv = one;  // q^-h
  Interval sum = Interval::zero();
  for (int h = 1; h <= terms; ++h) {
    qpow_inv *= qinv;
    Interval f = one - qpow_inv * qinv;  // 1 - q^-(h+1)
    sum += one_minus_qinv * qpow_inv * (iv_log(f) - log_omq);
  }
  // Every dropped term is positive and bounded by the h_max term pattern with
  // the log factor frozen at its supremum; the geometric sum collapses to
  // -log(1-1/q) * (1-1/q) * q^-h_max * q/(q-1).
  Interval tail_cap = -log_omq * one_minus_qinv * qpow_inv * (qv / (qv - one));
  return sum + Interval{0.0, tail_cap.hi};
}

Interval weight_remainder_total_bound(int order) {
  check_order(order);
  std::uint64_t denom = std::uint64_t(order) << (2 * order + 3);
  return Interval::from_ratio(1, denom);
}

}  // namespace pnc
