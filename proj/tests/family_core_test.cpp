#include <doctest.h>

#include <cmath>
#include <random>

#include "jordan/family.hpp"
#include "oracle.hpp"

using namespace jordan;

namespace {

// Frozen 50-digit reference values (see tests/oracle.hpp for the generator
// formulas; digits truncated to double precision).
constexpr double kSincQuarterPi = 0.90031631615710607;
constexpr double kPhiTwoParam = 0.10661691111003506;     // p=0.1 q=1 x=pi/4
constexpr double kDphiDq = -1.0183795455542598;          // p=0.1 q=2 x=pi/4
constexpr double kDphiADq = -0.12593799012732106;        // q=1 x=pi/4
constexpr double kDphiBDq = 0.09767428603113908;         // q=1 x=pi/4
constexpr double kGaQuarterPi = 1.8660506315749379;
constexpr double kGaSmallX = 1.9896601286519558;         // x = 1e-5
constexpr double kGbSmallX = 1.9785920303998007;         // x = 1e-5
constexpr double kDphiADx2 = -0.01270852409035544;       // q=1.9 x=0.7 order 2

const double kQ1A = 2.0 / (kPi - 2.0);
const double kQ1B = kPi * kPi / 4.0 - 1.0;

// Relative agreement with an absolute floor: sample points can sit near a
// derivative's own zero, where a pure relative test is meaningless.
double fd_vs(double lib_value, const oracle::Real& fd) {
  const double f = static_cast<double>(fd);
  return std::abs(lib_value - f) / std::max(1e-2, std::abs(f));
}

}  // namespace

TEST_CASE("sinc: values, continuity, domain") {
  CHECK(std::abs(sinc(kHalfPi) - 2.0 / kPi) < 1e-15);
  CHECK(std::abs(sinc(kPi / 4.0) - kSincQuarterPi) < 1e-15);
  CHECK(sinc(0.0) == 1.0);
  CHECK(std::abs(sinc(1e-12) - 1.0) < 1e-15);
  const double at = 0x1p-26;
  CHECK(std::abs(sinc(std::nextafter(at, 0.0)) - sinc(at)) < 1e-15);
  CHECK(std::abs(sinc(at * (1 + 1e-9)) - sinc(at)) < 1e-15);
  CHECK_THROWS_AS(sinc(-0.1), std::domain_error);
}

TEST_CASE("coefficient functions match quoted values and decrease") {
  CHECK(std::abs(coeff_A(1) - 0.11566) < 1e-5);
  CHECK(std::abs(coeff_B(1) - 0.20264) < 1e-5);
  CHECK(std::abs(coeff_A(2) - 0.036818) < 1e-5);
  CHECK(std::abs(coeff_B(2) - 0.032251) < 1e-5);
  CHECK(std::abs(coeff_A(3) - 0.011719) < 1e-5);
  CHECK(std::abs(coeff_B(3) - 0.0068439) < 1e-5);
  CHECK(std::abs(coeff_A(4) - 0.0037304) < 1e-5);
  CHECK(std::abs(coeff_B(4) - 0.0016338) < 1e-5);
  for (double q = 0.25; q < 6.0; q += 0.25) {
    CHECK(coeff_A(q) > coeff_A(q + 0.25));
    CHECK(coeff_B(q) > coeff_B(q + 0.25));
  }
}

TEST_CASE("phi: spot values and kind equivalences") {
  const double x = kPi / 4.0;
  CHECK(std::abs(phi(FamilySpec::two_param(0.1, 1.0), x) - kPhiTwoParam) < 1e-13);
  CHECK(std::abs(phi(FamilySpec::a_type(kQ1A), x) - 0.0082048) < 1e-5);
  CHECK(std::abs(phi(FamilySpec::a_type(2.0), x) - (-0.0088386)) < 1e-5);

  for (double q : {0.7, 1.5, 2.0, 3.3}) {
    for (double xx : {0.3, 0.9, 1.4}) {
      CHECK(phi(FamilySpec::a_type(q), xx) ==
            phi(FamilySpec::two_param(coeff_A(q), q), xx));
      CHECK(phi(FamilySpec::b_type(q), xx) ==
            phi(FamilySpec::two_param(coeff_B(q), q), xx));
    }
  }
  CHECK(phi(FamilySpec::fixed_q(2, 0.034), 1.0) ==
        phi(FamilySpec::two_param(0.034, 2.0), 1.0));
}

TEST_CASE("phi: domain and spec validation") {
  const FamilySpec s = FamilySpec::two_param(0.1, 1.0);
  CHECK_THROWS_AS(phi(s, 0.0), std::domain_error);
  CHECK_THROWS_AS(phi(s, kHalfPi), std::domain_error);
  CHECK_THROWS_AS(phi(s, -0.5), std::domain_error);
  CHECK_THROWS_AS(FamilySpec::two_param(0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(FamilySpec::two_param(0.1, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(FamilySpec::fixed_q(5, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(FamilySpec::fixed_q(0, 0.1), std::invalid_argument);
}

TEST_CASE("phi limits at the interval ends") {
  CHECK(phi_limit_zero(FamilySpec::a_type(1.3)) == 0.0);
  CHECK(std::abs(phi_limit_zero(FamilySpec::b_type(kQ1B)) - (-0.070461)) < 1e-5);
  const FamilySpec f = FamilySpec::fixed_q(2, 0.034);
  CHECK(std::abs(phi_limit_zero(f) -
                 (1.0 - 2.0 / kPi - 0.034 * kPi * kPi)) < 1e-15);
  for (const FamilySpec& s : {FamilySpec::a_type(1.9), FamilySpec::b_type(1.6), f}) {
    const Interval01 iv = phi_interval(s);
    CHECK(iv.lo == 0.0);
    CHECK(iv.hi == kHalfPi);
    CHECK(iv.hi_limit == 0.0);
    CHECK(std::abs(phi(s, kHalfPi - 1e-8) - iv.hi_limit) < 1e-6);
    CHECK(std::abs(phi(s, 1e-7) - iv.lo_limit) < 1e-5);
  }
}

TEST_CASE("parameter derivatives: frozen values and signs") {
  const double x = kPi / 4.0;
  CHECK(std::abs(dphi_dq(FamilySpec::two_param(0.1, 2.0), x) - kDphiDq) < 1e-12);
  CHECK(std::abs(dphiA_dq(1.0, x) - kDphiADq) < 1e-13);
  CHECK(std::abs(dphiB_dq(1.0, x) - kDphiBDq) < 1e-13);

  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> ux(1e-3, kHalfPi - 1e-3);
  std::uniform_real_distribution<double> uq(0.2, 5.0);
  std::uniform_real_distribution<double> up(1e-3, 0.5);
  for (int i = 0; i < 1000; ++i) {
    const double xx = ux(rng);
    const double q = uq(rng);
    const double p = up(rng);
    CHECK(dphi_dp(FamilySpec::two_param(p, q), xx) < 0.0);
    CHECK(dphi_dq(FamilySpec::two_param(p, q), xx) < 0.0);
    CHECK(dphiA_dq(q, xx) < 0.0);
    CHECK(dphiB_dq(q, xx) > 0.0);
  }
  CHECK(std::abs(dphi_dp(FamilySpec::two_param(0.1, 1.0), kHalfPi - 1e-9)) < 1e-8);
  CHECK_THROWS_AS(dphi_dp(FamilySpec::a_type(1.5), 0.5), std::invalid_argument);
  CHECK_THROWS_AS(dphi_dq(FamilySpec::b_type(1.5), 0.5), std::invalid_argument);
}

TEST_CASE("stratification: phi decreases in p and in q") {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> ux(1e-3, kHalfPi - 1e-3);
  std::uniform_real_distribution<double> uq(0.2, 5.0);
  std::uniform_real_distribution<double> up(1e-3, 0.5);
  for (int i = 0; i < 1000; ++i) {
    const double x = ux(rng);
    double p1 = up(rng), p2 = up(rng);
    if (p1 > p2) std::swap(p1, p2);
    double q1 = uq(rng), q2 = uq(rng);
    if (q1 > q2) std::swap(q1, q2);
    const double q = uq(rng), p = up(rng);
    if (p2 > p1) {
      CHECK(phi(FamilySpec::two_param(p1, q), x) > phi(FamilySpec::two_param(p2, q), x));
    }
    if (q2 > q1) {
      CHECK(phi(FamilySpec::two_param(p, q1), x) > phi(FamilySpec::two_param(p, q2), x));
      CHECK(phi(FamilySpec::a_type(q1), x) > phi(FamilySpec::a_type(q2), x));
      CHECK(phi(FamilySpec::b_type(q1), x) < phi(FamilySpec::b_type(q2), x));
    }
  }
}

TEST_CASE("x-derivatives of the A family: frozen value, FD agreement, order 4 sign") {
  CHECK(std::abs(dphiA_dx(1.9, 0.7, 2) - kDphiADx2) < 1e-12);
  CHECK_THROWS_AS(dphiA_dx(1.9, 0.7, 5), std::invalid_argument);
  CHECK_THROWS_AS(dphiA_dx(1.9, 0.7, 0), std::invalid_argument);

  const oracle::Real h("1e-5");
  for (double q : {0.7, 1.3, 1.8482350504034136, 2.5}) {
    const oracle::Real oq(q);
    const auto f = [&oq](const oracle::Real& t) { return oracle::phi_a(oq, t); };
    for (double x : {0.2, 0.5, 0.9, 1.2, 1.5}) {
      const oracle::Real ox(x);
      CHECK(fd_vs(dphiA_dx(q, x, 1), oracle::fd1(f, ox, h)) < 1e-6);
      CHECK(fd_vs(dphiA_dx(q, x, 2), oracle::fd2(f, ox, h)) < 1e-6);
      CHECK(fd_vs(dphiA_dx(q, x, 3), oracle::fd3(f, ox, h)) < 1e-6);
      CHECK(fd_vs(dphiA_dx(q, x, 4), oracle::fd4(f, ox, h)) < 1e-6);
    }
  }
  for (double q : {1.76, 1.85, 1.99}) {
    for (double x = 0.05; x < kHalfPi; x += 0.05) {
      CHECK(dphiA_dx(q, x, 4) > 0.0);
    }
  }
  for (double x = 0.05; x < kHalfPi; x += 0.05) {
    CHECK(dphiA_trig_factor(x, 4) > 0.0);
  }
}

TEST_CASE("x-derivatives: B family and generic members against FD") {
  const oracle::Real h("1e-5");
  for (double q : {1.5, 1.7228764275920154, 2.0}) {
    const oracle::Real oq(q);
    const auto f = [&oq](const oracle::Real& t) { return oracle::phi_b(oq, t); };
    for (double x : {0.3, 0.8, 1.3}) {
      CHECK(fd_vs(dphiB_dx(q, x), oracle::fd1(f, oracle::Real(x), h)) < 1e-6);
    }
  }
  for (double p : {0.05, 0.13}) {
    for (double q : {1.0, 2.0}) {
      const oracle::Real op(p), oq(q);
      const auto f = [&](const oracle::Real& t) { return oracle::phi(op, oq, t); };
      const FamilySpec s = FamilySpec::two_param(p, q);
      for (double x : {0.4, 1.0, 1.4}) {
        CHECK(fd_vs(dphi_dx(s, x), oracle::fd1(f, oracle::Real(x), h)) < 1e-6);
      }
    }
  }
  const oracle::Real hq("1e-6");
  for (double q : {0.8, 1.6, 3.0}) {
    for (double x : {0.4, 1.1}) {
      const oracle::Real ox(x);
      const auto fa = [&ox](const oracle::Real& t) { return oracle::phi_a(t, ox); };
      const auto fb = [&ox](const oracle::Real& t) { return oracle::phi_b(t, ox); };
      CHECK(fd_vs(dphiA_dq(q, x), oracle::fd1(fa, oracle::Real(q), hq)) < 1e-6);
      CHECK(fd_vs(dphiB_dq(q, x), oracle::fd1(fb, oracle::Real(q), hq)) < 1e-6);
    }
  }
}

TEST_CASE("boundary exponent functions: roots, monotonicity, limits") {
  CHECK(std::abs(gA(kPi / 4.0) - kGaQuarterPi) < 1e-12);
  CHECK(std::abs(gA(1e-5) - kGaSmallX) < 1e-5);
  CHECK(std::abs(gB(1e-5) - kGbSmallX) < 1e-5);
  for (double x = 0.05; x < kHalfPi - 0.01; x += 0.07) {
    CHECK(std::abs(phi(FamilySpec::a_type(gA(x)), x)) < 1e-12);
    CHECK(std::abs(dphiB_dx(gB(x), x)) < 1e-12);
  }
  double prev_a = gA(0.01), prev_b = gB(0.01);
  for (int i = 1; i <= 1000; ++i) {
    const double x = 0.01 + (kHalfPi - 0.02) * i / 1000.0;
    const double a = gA(x), b = gB(x);
    CHECK(a < prev_a);
    CHECK(b < prev_b);
    prev_a = a;
    prev_b = b;
  }
  CHECK(gA(1e-4) < gA(1e-5));
  CHECK(gA(1e-5) < 2.0);
  CHECK(gB(1e-5) < 2.0);
  CHECK(std::abs(gA(kHalfPi - 1e-6) - kQ1A) < 1e-5);
  CHECK(std::abs(gB(kHalfPi - 1e-6) - kQ1B) < 1e-5);
}

TEST_CASE("endpoint limits: quoted values and numeric extrapolation") {
  const EndpointLimits at_q1a = endpoint_limits(kQ1A);
  CHECK(std::abs(at_q1a.a_slope_quarter_pi - (-0.0053418)) < 1e-5);
  CHECK(std::abs(at_q1a.a_curvature_half_pi - 0.073414) < 1e-5);
  CHECK(std::abs(at_q1a.a_third_half_pi - 0.19968) < 1e-5);
  CHECK(std::abs(at_q1a.a_slope_quarter_pi - (-0.005341841842566449)) < 1e-14);
  CHECK(std::abs(at_q1a.a_curvature_half_pi - 0.073414114579594889) < 1e-14);
  CHECK(std::abs(at_q1a.a_third_half_pi - 0.199681773801678376) < 1e-14);
  CHECK(std::abs(endpoint_limits(kQ1B).b_value_zero - (-0.070461461766225685)) < 1e-14);
  CHECK(std::abs(endpoint_limits(kQ1B).b_quad_half_pi) < 1e-15);

  for (double q : {1.2, kQ1A, 1.9, 2.4}) {
    const EndpointLimits lim = endpoint_limits(q);
    CHECK(std::abs(lim.a_slope_quarter_pi - dphiA_dx(q, kPi / 4.0, 1)) < 1e-14);
    CHECK(std::abs(lim.a_slope_half_pi - dphiA_dx(q, kHalfPi - 1e-7, 1)) < 1e-6);
    CHECK(std::abs(lim.a_curvature_half_pi - dphiA_dx(q, kHalfPi - 1e-7, 2)) < 1e-5);
    CHECK(std::abs(lim.a_third_half_pi - dphiA_dx(q, kHalfPi - 1e-6, 3)) < 1e-4);
    CHECK(std::abs(lim.b_value_zero - phi(FamilySpec::b_type(q), 1e-7)) < 1e-8);
    const double h = 1e-3;
    const double v1 = phi(FamilySpec::b_type(q), kHalfPi - h) / (h * h);
    const double v2 = phi(FamilySpec::b_type(q), kHalfPi - h / 2) / (h * h / 4);
    CHECK(std::abs(lim.b_quad_half_pi - (2 * v2 - v1)) < 1e-6);
  }
  const EndpointLimits slope = endpoint_limits(2.0);
  CHECK(std::abs(slope.a_slope_half_pi - 2.0 * (2.0 * (kPi - 2.0) - 2.0) / (kPi * kPi)) <
        1e-15);
}
