#include "pnc/interval.hpp"

#include <cstdio>
#include <string>

namespace pnc {

namespace {

int g_widening_steps = 1;

// Reference bracket for a unary function: f(x) lies in [lo, hi], where the
// bracket was produced by 60 digit arithmetic rounded outward to adjacent
// doubles.  The tables below are frozen; regenerating them with any correct
// multiprecision library must reproduce them bit for bit.
struct FnRef {
  double x;
  double lo;
  double hi;
};

// log reference table
static constexpr FnRef kLogRefs[] = {
    {0x1.1c0d57f10c894p-29, -0x1.3ff4e42f831e2p+4, -0x1.3ff4e42f831e1p+4},
    {0x1.43f04a6ece53dp-26, -0x1.1c954ca24dc12p+4, -0x1.1c954ca24dc11p+4},
    {0x1.e2b8410510668p-23, -0x1.e9dc2bcdd8506p+3, -0x1.e9dc2bcdd8505p+3},
    {0x1.d5f2e30a9e501p-20, -0x1.a82d08c8882d2p+3, -0x1.a82d08c8882d1p+3},
    {0x1.535c8ea8a4e05p-17, -0x1.700d37a69fbcep+3, -0x1.700d37a69fbcdp+3},
    {0x1.8f7b1bac9609ep-14, -0x1.284a5172a6460p+3, -0x1.284a5172a645fp+3},
    {0x1.cb3af63658795p-11, -0x1.c2935dec982ddp+2, -0x1.c2935dec982dcp+2},
    {0x1.6438f14dfe833p-8, -0x1.4dbf46965d6b8p+2, -0x1.4dbf46965d6b7p+2},
    {0x1.d0af9825c659fp-5, -0x1.6f4d77aec1dbbp+1, -0x1.6f4d77aec1dbap+1},
    {0x1.302bd02b522a8p-2, -0x1.36c0ec84c05eep+0, -0x1.36c0ec84c05edp+0},
    {0x1.fd70522e931f7p+1, 0x1.619b8667aafc2p+0, 0x1.619b8667aafc3p+0},
    {0x1.fba9a1630e23bp+4, 0x1.ba86758ccc53dp+1, 0x1.ba86758ccc53ep+1},
    {0x1.29616ccb5e001p+7, 0x1.401e907fe5466p+2, 0x1.401e907fe5467p+2},
    {0x1.d37bf421a1818p+10, 0x1.e2277bd9d0c9ap+2, 0x1.e2277bd9d0c9bp+2},
    {0x1.7a5b1baa844c0p+13, 0x1.2cd9abc603935p+3, 0x1.2cd9abc603936p+3},
    {0x1.552e421879d83p+16, 0x1.6c1536f4d7920p+3, 0x1.6c1536f4d7921p+3},
    {0x1.a92e8eaf3493dp+19, 0x1.b5ab1913628b6p+3, 0x1.b5ab1913628b7p+3},
    {0x1.5fe48bdeead11p+22, 0x1.f22808c5e7535p+3, 0x1.f22808c5e7536p+3},
    {0x1.618d3e487ffb5p+25, 0x1.1a6cacb2be64ap+4, 0x1.1a6cacb2be64bp+4},
    {0x1.5cd158ba16a76p+28, 0x1.3b7ada2b9b557p+4, 0x1.3b7ada2b9b558p+4},
    {0x1.07727df42b81cp-29, -0x1.412956d6c7dc9p+4, -0x1.412956d6c7dc8p+4},
    {0x1.16e635e91fb5ap-26, -0x1.1efa7c16ee641p+4, -0x1.1efa7c16ee640p+4},
    {0x1.38c4ac26c846fp-23, -0x1.f7bf48b06af9dp+3, -0x1.f7bf48b06af9cp+3},
    {0x1.8ade8c37577c5p-20, -0x1.adbf0189c7575p+3, -0x1.adbf0189c7574p+3},
    {0x1.a7e5b8ad61158p-17, -0x1.68ef1c11a85e9p+3, -0x1.68ef1c11a85e8p+3},
    {0x1.83785723e5c9cp-14, -0x1.294465d5f144dp+3, -0x1.294465d5f144cp+3},
    {0x1.dab33022a4b9cp-11, -0x1.c0748c32529f7p+2, -0x1.c0748c32529f6p+2},
    {0x1.41b96ab112ea4p-8, -0x1.5444282e271aep+2, -0x1.5444282e271adp+2},
    {0x1.4b0e14fa2fee1p-5, -0x1.9ab45937bc1e8p+1, -0x1.9ab45937bc1e7p+1},
    {0x1.7402f3fb0a0a5p-2, -0x1.033646c502ebbp+0, -0x1.033646c502ebap+0},
    {0x1.f33082c146e3dp+1, 0x1.5c67948cea763p+0, 0x1.5c67948cea764p+0},
    {0x1.087799f31d30cp+4, 0x1.670e7343c38d9p+1, 0x1.670e7343c38dap+1},
    {0x1.0c996e223db1ap+7, 0x1.399ace71cb88bp+2, 0x1.399ace71cb88cp+2},
    {0x1.e7860860627a8p+10, 0x1.e4d72bc019110p+2, 0x1.e4d72bc019111p+2},
    {0x1.c360b934d02e7p+13, 0x1.327f4f1757776p+3, 0x1.327f4f1757777p+3},
    {0x1.48a12d9e7a7f7p+16, 0x1.6ae22bb54683dp+3, 0x1.6ae22bb54683ep+3},
    {0x1.7c5b2a840d01ap+19, 0x1.b21a6f684bef0p+3, 0x1.b21a6f684bef1p+3},
    {0x1.36aed0278207cp+22, 0x1.ee2bb081f193cp+3, 0x1.ee2bb081f193dp+3},
    {0x1.2f32df6d0cf03p+25, 0x1.17f75c095c3cep+4, 0x1.17f75c095c3cfp+4},
    {0x1.11aadb8d2d7a8p+28, 0x1.379903d1a5818p+4, 0x1.379903d1a5819p+4},
    {0x1.0000000000000p+1, 0x1.62e42fefa39efp-1, 0x1.62e42fefa39f0p-1},
    {0x1.4000000000000p+3, 0x1.26bb1bbb55515p+1, 0x1.26bb1bbb55516p+1},
    {0x1.0000000000000p-1, -0x1.62e42fefa39f0p-1, -0x1.62e42fefa39efp-1},
    {0x1.8000000000000p+1, 0x1.193ea7aad030ap+0, 0x1.193ea7aad030bp+0},
    {0x1.0000000400000p+0, 0x1.fffffffc00000p-31, 0x1.fffffffc00001p-31},
    {0x1.d8e64b2314014p+2, 0x1.ffffffc67ed9ap+0, 0x1.ffffffc67ed9bp+0},
    {0x1.e848000000000p+19, 0x1.ba18a998fffa0p+3, 0x1.ba18a998fffa1p+3},
    {0x1.0c6f7a0b5ed8dp-20, -0x1.ba18a998fffa1p+3, -0x1.ba18a998fffa0p+3},
};

// exp reference table
static constexpr FnRef kExpRefs[] = {
    {0x1.6c8dbf8268000p+3, 0x1.5a3cdfb15fb20p+16, 0x1.5a3cdfb15fb21p+16},
    {0x1.3eb6b55b7e278p+1, 0x1.81f11d5c7b3d4p+3, 0x1.81f11d5c7b3d5p+3},
    {-0x1.a7241a7c10636p+3, 0x1.e5653b72f03a1p-20, 0x1.e5653b72f03a2p-20},
    {-0x1.cf0a2332b6438p+3, 0x1.1704ed155866bp-21, 0x1.1704ed155866cp-21},
    {-0x1.aa2768e9efe82p+3, 0x1.b9c77be0ed1e4p-20, 0x1.b9c77be0ed1e5p-20},
    {0x1.6e46f92d4e7b8p+3, 0x1.6d65ce5851c0dp+16, 0x1.6d65ce5851c0ep+16},
    {-0x1.f92286b1fe231p+3, 0x1.2b7ebd58b37c7p-23, 0x1.2b7ebd58b37c8p-23},
    {0x1.5c7b93f7a1b44p+2, 0x1.cf36dbe87fc98p+7, 0x1.cf36dbe87fc99p+7},
    {-0x1.2fd55f6735e72p+2, 0x1.1c3cc018415dfp-7, 0x1.1c3cc018415e0p-7},
    {0x1.1794ac152fe94p+4, 0x1.27fb1ae1004a3p+25, 0x1.27fb1ae1004a4p+25},
    {0x1.a499c197d77e8p+3, 0x1.f2d88e0527f42p+18, 0x1.f2d88e0527f43p+18},
    {0x1.5fd27eec043e8p+2, 0x1.e806cc6c2868ep+7, 0x1.e806cc6c2868fp+7},
    {0x1.b772fc0d468b8p+2, 0x1.dfbda3e834326p+9, 0x1.dfbda3e834327p+9},
    {-0x1.8d7d3fd5b0466p+3, 0x1.0e8110722b6cdp-18, 0x1.0e8110722b6cep-18},
    {0x1.30d4c8c1f3ceep+4, 0x1.6694939a9ae91p+27, 0x1.6694939a9ae92p+27},
    {-0x1.e223aafd92a00p-1, 0x1.8f5505461996dp-2, 0x1.8f5505461996ep-2},
    {0x1.8cd742f72066cp+3, 0x1.dad3f14a05814p+17, 0x1.dad3f14a05815p+17},
    {-0x1.f4ca6f2842a20p+1, 0x1.478c214ddd86bp-6, 0x1.478c214ddd86cp-6},
    {-0x1.67e83ea543636p+3, 0x1.b5b84edb575e4p-17, 0x1.b5b84edb575e5p-17},
    {-0x1.0c859767f8f70p+3, 0x1.dbb2b18816a6bp-13, 0x1.dbb2b18816a6cp-13},
    {-0x1.eed5308d96428p+1, 0x1.5727705c659f6p-6, 0x1.5727705c659f7p-6},
    {-0x1.24916d6ccaed4p+4, 0x1.89543d812e1afp-27, 0x1.89543d812e1b0p-27},
    {0x1.c294083a9fc70p+2, 0x1.1d6da40909896p+10, 0x1.1d6da40909897p+10},
    {0x1.e569eaa51bd10p+1, 0x1.62dd579c6b48ep+5, 0x1.62dd579c6b48fp+5},
    {-0x1.2b716be4676e8p+4, 0x1.ffe3928363f3cp-28, 0x1.ffe3928363f3dp-28},
    {-0x1.20574fcf23bf3p+4, 0x1.002174687e52cp-26, 0x1.002174687e52dp-26},
    {0x1.4490b74133d08p+2, 0x1.3ec5f19c39becp+7, 0x1.3ec5f19c39bedp+7},
    {-0x1.40157344c4380p-1, 0x1.12024e2e822d3p-1, 0x1.12024e2e822d4p-1},
    {-0x1.9efc0425a4aaep+2, 0x1.906bde7e36418p-10, 0x1.906bde7e36419p-10},
    {0x1.ed12f55013834p+3, 0x1.2c37693806fecp+22, 0x1.2c37693806fedp+22},
    {0x1.364e56868d388p+4, 0x1.f8e259959ae22p+27, 0x1.f8e259959ae23p+27},
    {-0x1.579825340c9ebp+3, 0x1.6c62753639f1ap-16, 0x1.6c62753639f1bp-16},
    {-0x1.183ad90038680p-1, 0x1.28309a61b4868p-1, 0x1.28309a61b4869p-1},
    {-0x1.70e7b57801f13p+3, 0x1.4a6e1267c7e70p-17, 0x1.4a6e1267c7e71p-17},
    {0x1.762fbac15d174p+3, 0x1.d3d9bdca8d862p+16, 0x1.d3d9bdca8d863p+16},
    {-0x1.256e5f43681e6p+2, 0x1.4e671b2551262p-7, 0x1.4e671b2551263p-7},
    {-0x1.131de1a0051c8p+2, 0x1.bd31859d2d64fp-7, 0x1.bd31859d2d650p-7},
    {0x1.a7c5c75fb72a0p+3, 0x1.1369e115b3326p+19, 0x1.1369e115b3327p+19},
    {0x1.37f512bf5f06cp+4, 0x1.17e3454105c79p+28, 0x1.17e3454105c7ap+28},
    {0x1.535506b9d7f60p+1, 0x1.c565a4173324ep+3, 0x1.c565a4173324fp+3},
    {0x1.0000000000000p+0, 0x1.5bf0a8b145769p+1, 0x1.5bf0a8b14576ap+1},
    {-0x1.0000000000000p+0, 0x1.78b56362cef37p-2, 0x1.78b56362cef38p-2},
    {0x1.0000000000000p-1, 0x1.a61298e1e069bp+0, 0x1.a61298e1e069cp+0},
    {-0x1.2788cfc6fb619p-1, 0x1.1f779e0fe5cbep-1, 0x1.1f779e0fe5cbfp-1},
    {0x1.4000000000000p+4, 0x1.ceb088b68e804p+28, 0x1.ceb088b68e805p+28},
    {-0x1.4000000000000p+4, 0x1.1b48655f37266p-29, 0x1.1b48655f37267p-29},
    {0x1.8000000000000p+1, 0x1.415e5bf6fb105p+4, 0x1.415e5bf6fb106p+4},
    {0x1.999999999999ap-4, 0x1.1aec7b35a00d3p+0, 0x1.1aec7b35a00d4p+0},
};

void fail(const char* what, double x) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "kernel self test failed: %s at x=%.17g", what, x);
  throw ConsistencyError(buf);
}

}  // namespace

int widening_steps() { return g_widening_steps; }

void set_widening_steps(int k) {
  if (k < 1 || k > 64) {
    throw ConfigError("widening_steps must be between 1 and 64");
  }
  g_widening_steps = k;
}

Interval Interval::from_uint(std::uint64_t n) {
  double d = static_cast<double>(n);
  if (d < 9007199254740992.0 || static_cast<std::uint64_t>(d) == n) {
    // Conversion is exact (always the case below 2^53).
    return {d, d};
  }
  return {next_down(d), next_up(d)};
}

Interval Interval::from_ratio(std::uint64_t num, std::uint64_t den) {
  if (den == 0) throw ConsistencyError("from_ratio with zero denominator");
  return from_uint(num) / from_uint(den);
}

Interval euler_gamma() {
  // Two decimal literals straddling Euler's constant; both round to the
  // nearest double, and one outward step on each side makes the bracket safe
  // regardless of the direction the parser rounded.
  const double a = 0.57721566490153286060;
  const double b = 0.57721566490153286061;
  return {next_down(std::min(a, b)), next_up(std::max(a, b))};
}

Interval one_minus_exp_neg_gamma() {
  return Interval::one() - iv_exp(-euler_gamma());
}

void kernel_selftest() {
  // The gamma bracket must be tight and must contain the best known decimal
  // approximation truncated to double precision.
  Interval g = euler_gamma();
  if (!(g.valid() && g.contains(0.57721566490153286) && g.width() < 8e-16)) {
    fail("gamma bracket", g.lo);
  }

  // Function enclosures must contain the frozen reference brackets.
  for (const FnRef& r : kLogRefs) {
    Interval y = iv_log(Interval::point(r.x));
    if (!(y.lo <= r.lo && r.hi <= y.hi)) fail("log containment", r.x);
    if (!(y.width() < 1e-13 * (1.0 + std::fabs(y.lo)))) fail("log width", r.x);
  }
  for (const FnRef& r : kExpRefs) {
    Interval y = iv_exp(Interval::point(r.x));
    if (!(y.lo <= r.lo && r.hi <= y.hi)) fail("exp containment", r.x);
    if (!(y.width() < 1e-13 * (1.0 + std::fabs(y.hi)))) fail("exp width", r.x);
  }

  // Exactness detection: small integer arithmetic must stay degenerate.
  Interval fifteen = Interval::point(3.0) * Interval::point(5.0);
  if (!(fifteen.lo == 15.0 && fifteen.hi == 15.0)) fail("exact product", 15.0);
  Interval sum = Interval::point(0.25) + Interval::point(1.5);
  if (!(sum.lo == 1.75 && sum.hi == 1.75)) fail("exact sum", 1.75);
  Interval z = Interval::zero() * Interval{-3.0, 7.0};
  if (!(z.lo == 0.0 && z.hi == 0.0)) fail("zero product", 0.0);
  if (!(iv_log(Interval::one()) == Interval::zero())) fail("log(1)", 1.0);
  if (!(iv_exp(Interval::zero()) == Interval::one())) fail("exp(0)", 0.0);

  // Round trips and simple identities must enclose their exact values.
  Interval two = Interval::point(2.0);
  if (!iv_exp(iv_log(two)).contains(2.0)) fail("exp(log(2))", 2.0);
  Interval third = Interval::one() / Interval::point(3.0);
  if (!(third.contains(1.0 / 3.0) && third.width() > 0.0)) fail("1/3", 3.0);
  Interval back = third * Interval::point(3.0);
  if (!back.contains(1.0)) fail("(1/3)*3", 3.0);
  Interval denom = one_minus_exp_neg_gamma();
  if (!(denom.contains(0.43854051643311482) && denom.width() < 1e-14)) {
    fail("1-exp(-gamma)", denom.lo);
  }
}

}  // namespace pnc
