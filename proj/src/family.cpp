#include "jordan/family.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace jordan {
namespace {

void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw std::invalid_argument(std::string(name) + " must be positive and finite");
  }
}

void require_interior(double x) {
  if (!(x > 0.0 && x < kHalfPi)) {
    throw std::domain_error("x must lie in the open interval (0, pi/2)");
  }
}

double pow_2x(double x, double q) { return std::pow(2.0 * x, q); }

// Below this cutoff the closed forms of the trig kernels cancel to rounding
// noise (x cos x - sin x is -x^3/3 + ..., which underflows the noise of its
// two terms near x ~ 1e-8 and can come out with the wrong sign).
constexpr double kTrigSeriesCutoff = 0.05;

double x_minus_sin(double x) {
  if (x < kTrigSeriesCutoff) {
    const double x2 = x * x;
    return x * x2 * (1.0 / 6.0 + x2 * (-1.0 / 120.0 + x2 / 5040.0));
  }
  return x - std::sin(x);
}

}  // namespace

FamilySpec FamilySpec::two_param(double p, double q) {
  require_positive(p, "p");
  require_positive(q, "q");
  return {FamilyKind::TwoParam, p, q};
}

FamilySpec FamilySpec::a_type(double q) {
  require_positive(q, "q");
  return {FamilyKind::AType, 0.0, q};
}

FamilySpec FamilySpec::b_type(double q) {
  require_positive(q, "q");
  return {FamilyKind::BType, 0.0, q};
}

FamilySpec FamilySpec::fixed_q(int q, double p) {
  if (q < 1 || q > 4) {
    throw std::invalid_argument("fixed exponent must be one of 1, 2, 3, 4");
  }
  require_positive(p, "p");
  return {FamilyKind::FixedQ, p, static_cast<double>(q)};
}

double FamilySpec::effective_p() const {
  switch (kind) {
    case FamilyKind::AType:
      return coeff_A(q);
    case FamilyKind::BType:
      return coeff_B(q);
    case FamilyKind::TwoParam:
    case FamilyKind::FixedQ:
      return p;
  }
  throw std::logic_error("unreachable family kind");
}

double sinc(double x) {
  if (!(x >= 0.0)) {
    throw std::domain_error("sinc requires x >= 0");
  }
  if (x < 0x1p-26) {
    const double x2 = x * x;
    return 1.0 - x2 / 6.0 + x2 * x2 / 120.0 - x2 * x2 * x2 / 5040.0;
  }
  return std::sin(x) / x;
}

double coeff_A(double q) {
  require_positive(q, "q");
  return (kPi - 2.0) / std::pow(kPi, q + 1.0);
}

double coeff_B(double q) {
  require_positive(q, "q");
  return 2.0 / (q * std::pow(kPi, q + 1.0));
}

double phi(const FamilySpec& spec, double x) {
  require_interior(x);
  const double p = spec.effective_p();
  return sinc(x) - 2.0 / kPi - p * (std::pow(kPi, spec.q) - pow_2x(x, spec.q));
}

double phi_limit_zero(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilyKind::AType:
      return 0.0;
    case FamilyKind::BType:
      return ((kPi - 2.0) * spec.q - 2.0) / (kPi * spec.q);
    case FamilyKind::TwoParam:
    case FamilyKind::FixedQ:
      return 1.0 - 2.0 / kPi - spec.p * std::pow(kPi, spec.q);
  }
  throw std::logic_error("unreachable family kind");
}

Interval01 phi_interval(const FamilySpec& spec) {
  Interval01 iv;
  iv.lo_limit = phi_limit_zero(spec);
  iv.hi_limit = 0.0;
  return iv;
}

double dphi_dp(const FamilySpec& spec, double x) {
  if (spec.kind != FamilyKind::TwoParam && spec.kind != FamilyKind::FixedQ) {
    throw std::invalid_argument("dphi_dp needs a member with a free coefficient");
  }
  require_interior(x);
  return pow_2x(x, spec.q) - std::pow(kPi, spec.q);
}

double dphi_dq(const FamilySpec& spec, double x) {
  if (spec.kind != FamilyKind::TwoParam && spec.kind != FamilyKind::FixedQ) {
    throw std::invalid_argument("dphi_dq needs a member with a free coefficient");
  }
  require_interior(x);
  return spec.p * (pow_2x(x, spec.q) * std::log(2.0 * x) -
                   std::pow(kPi, spec.q) * std::log(kPi));
}

double dphiA_dq(double q, double x) {
  require_positive(q, "q");
  require_interior(x);
  const double t = std::pow(2.0 * x / kPi, q);
  return (1.0 - 2.0 / kPi) * t * std::log(2.0 * x / kPi);
}

double dphiB_dq(double q, double x) {
  require_positive(q, "q");
  require_interior(x);
  const double t = std::pow(2.0 * x / kPi, q);
  return 2.0 / (q * q * kPi) * t * (std::log(t) + 1.0 / t - 1.0);
}

double dphiA_param_factor(double q, int order) {
  require_positive(q, "q");
  if (order < 1 || order > 4) {
    throw std::invalid_argument("derivative order must be 1..4");
  }
  double falling = q;
  for (int k = 1; k < order; ++k) falling *= q - k;
  return std::pow(kPi, -q - 1.0) * std::pow(2.0, q) * falling * (kPi - 2.0);
}

double dphiA_trig_factor(double x, int order) {
  if (x < kTrigSeriesCutoff) {
    const double x2 = x * x;
    const double x3 = x * x2;
    const double x5 = x3 * x2;
    switch (order) {
      case 1:
        return x3 * (-1.0 / 3.0 + x2 * (1.0 / 30.0 + x2 * (-1.0 / 840.0 + x2 / 45360.0)));
      case 2:
        return x3 * (-1.0 / 3.0 + x2 * (1.0 / 10.0 + x2 * (-1.0 / 168.0 + x2 / 6480.0)));
      case 3:
        return x5 * (1.0 / 5.0 + x2 * (-1.0 / 42.0 + x2 / 1080.0));
      case 4:
        return x5 * (1.0 / 5.0 + x2 * (-1.0 / 14.0 + x2 / 216.0));
      default:
        throw std::invalid_argument("derivative order must be 1..4");
    }
  }
  const double s = std::sin(x);
  const double c = std::cos(x);
  switch (order) {
    case 1:
      return x * c - s;
    case 2:
      return -2.0 * x * c - (x * x - 2.0) * s;
    case 3:
      return (-x * x * x + 6.0 * x) * c + (3.0 * x * x - 6.0) * s;
    case 4:
      return 4.0 * x * (x * x - 6.0) * c + (x * x * x * x - 12.0 * x * x + 24.0) * s;
    default:
      throw std::invalid_argument("derivative order must be 1..4");
  }
}

double dphiA_dx(double q, double x, int order) {
  require_positive(q, "q");
  require_interior(x);
  const double f = dphiA_param_factor(q, order);
  const double h = dphiA_trig_factor(x, order);
  return (std::pow(x, q + 1.0) * f + h) / std::pow(x, order + 1.0);
}

double dphiB_dx(double q, double x) {
  require_positive(q, "q");
  require_interior(x);
  const double num = dphiA_trig_factor(x, 1) + std::pow(2.0 * x / kPi, q + 1.0);
  return num / (x * x);
}

double dphi_dx(const FamilySpec& spec, double x) {
  switch (spec.kind) {
    case FamilyKind::AType:
      return dphiA_dx(spec.q, x, 1);
    case FamilyKind::BType:
      return dphiB_dx(spec.q, x);
    case FamilyKind::TwoParam:
    case FamilyKind::FixedQ: {
      require_interior(x);
      const double core = dphiA_trig_factor(x, 1) / (x * x);
      return core + 2.0 * spec.p * spec.q * std::pow(2.0 * x, spec.q - 1.0);
    }
  }
  throw std::logic_error("unreachable family kind");
}

double gA(double x) {
  require_interior(x);
  const double arg = x * (kPi - 2.0) / (kPi * x_minus_sin(x));
  return std::log(arg) / std::log(kPi / (2.0 * x));
}

double gB(double x) {
  require_interior(x);
  const double arg = 2.0 * x / (kPi * -dphiA_trig_factor(x, 1));
  return std::log(arg) / std::log(kPi / (2.0 * x));
}

EndpointLimits endpoint_limits(double q) {
  require_positive(q, "q");
  EndpointLimits lim;
  const double pi2 = kPi * kPi;
  lim.a_slope_quarter_pi =
      (std::pow(2.0, -q) * q * (4.0 * kPi - 8.0) + 2.0 * std::sqrt(2.0) * (kPi - 4.0)) / pi2;
  lim.a_curvature_half_pi =
      8.0 / (pi2 * kPi) * (q * (q - 1.0) * (kPi - 2.0) / 2.0 + 2.0 - pi2 / 4.0);
  lim.a_third_half_pi =
      16.0 / (pi2 * pi2) *
      (q * (q - 1.0) * (q - 2.0) * (kPi - 2.0) / 2.0 + 3.0 * pi2 / 4.0 - 6.0);
  lim.a_slope_half_pi = 2.0 * (q * (kPi - 2.0) - 2.0) / pi2;
  lim.b_value_zero = ((kPi - 2.0) * q - 2.0) / (kPi * q);
  lim.b_quad_half_pi = (4.0 * q - pi2 + 4.0) / (pi2 * kPi);
  return lim;
}

}  // namespace jordan
