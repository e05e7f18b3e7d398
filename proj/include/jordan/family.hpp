#pragma once

#include <numbers>

namespace jordan {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kHalfPi = kPi / 2.0;

enum class FamilyKind { TwoParam, AType, BType, FixedQ };

/// One member of the stratified sinc-bound families
///
///   phi(x) = sin(x)/x - 2/pi - p * (pi^q - (2x)^q),   x in (0, pi/2),
///
/// with p, q > 0.  AType and BType tie the coefficient to the exponent
/// through coeff_A / coeff_B; FixedQ pins the exponent to a small integer
/// and varies the coefficient.
struct FamilySpec {
  FamilyKind kind = FamilyKind::TwoParam;
  double p = 0.0;
  double q = 0.0;

  static FamilySpec two_param(double p, double q);
  static FamilySpec a_type(double q);
  static FamilySpec b_type(double q);
  static FamilySpec fixed_q(int q, double p);

  /// Coefficient that actually multiplies (pi^q - (2x)^q).
  double effective_p() const;
};

/// Open interval (0, pi/2) together with the analytic one-sided limits of
/// the subject function at both ends.
struct Interval01 {
  double lo = 0.0;
  double hi = kHalfPi;
  double lo_limit = 0.0;
  double hi_limit = 0.0;
};

/// sin(x)/x extended continuously to 0.  Requires x >= 0.
double sinc(double x);

/// (pi - 2) / pi^(q+1), the coefficient making the family vanish with zero
/// slope-defect at 0+.
double coeff_A(double q);

/// 2 / (q pi^(q+1)), the coefficient making the family stationary at pi/2-.
double coeff_B(double q);

double phi(const FamilySpec& spec, double x);

/// Analytic limit of phi at 0+.
double phi_limit_zero(const FamilySpec& spec);

/// Interval record for phi of this member; the pi/2- limit is 0 for every
/// member.
Interval01 phi_interval(const FamilySpec& spec);

/// d phi / dp at fixed q.  Defined for TwoParam and FixedQ members.
double dphi_dp(const FamilySpec& spec, double x);

/// d phi / dq at fixed p.  Defined for TwoParam and FixedQ members.
double dphi_dq(const FamilySpec& spec, double x);

/// d/dq of the AType member (coefficient varying with q).
double dphiA_dq(double q, double x);

/// d/dq of the BType member (coefficient varying with q).
double dphiB_dq(double q, double x);

/// k-th x-derivative of the AType member, orders 1..4, evaluated through
/// the exact decomposition
///   (x^(q+1) * param_factor(q, k) + trig_factor(x, k)) / x^(k+1).
double dphiA_dx(double q, double x, int order);
double dphiA_param_factor(double q, int order);
double dphiA_trig_factor(double x, int order);

/// First x-derivative of the BType member.
double dphiB_dx(double q, double x);

/// First x-derivative of phi for any family kind.
double dphi_dx(const FamilySpec& spec, double x);

/// Exponent at which the AType member vanishes at x.  Strictly decreasing
/// on (0, pi/2) with limits 2 at 0+ and 2/(pi-2) at pi/2-.
double gA(double x);

/// Exponent whose BType member is stationary at x.  Strictly decreasing
/// on (0, pi/2) with limits 2 at 0+ and pi^2/4 - 1 at pi/2-.
double gB(double x);

/// One-sided limits used by the boundary analysis of the A and B families.
struct EndpointLimits {
  double a_slope_quarter_pi;   // d phi_A / dx at x = pi/4
  double a_curvature_half_pi;  // limit of d2 phi_A / dx2 at pi/2-
  double a_third_half_pi;      // limit of d3 phi_A / dx3 at pi/2-
  double a_slope_half_pi;      // limit of d phi_A / dx at pi/2-
  double b_value_zero;         // limit of phi_B at 0+
  double b_quad_half_pi;       // quadratic Taylor coefficient of phi_B at pi/2
};
EndpointLimits endpoint_limits(double q);

}  // namespace jordan
