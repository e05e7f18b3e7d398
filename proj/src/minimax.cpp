#include "jordan/minimax.hpp"

#include <cmath>
#include <stdexcept>

namespace jordan {
namespace {

constexpr int kDefaultGrid = 1024;

/// Below this the value of an AType member drowns in rounding noise (its
/// 0+ limit cancels exactly), so the crossing scan must not look there.
constexpr double kValueScanFloor = 1e-6;

double abs_or_zero(const std::vector<ExtremumRecord>& ext, ExtremumKind kind) {
  for (const auto& e : ext) {
    if (e.kind == kind) return std::abs(e.value);
  }
  return 0.0;
}

/// Bisection on a monotone-orientation-agnostic objective: requires a sign
/// change of D over (lo, hi) but assumes nothing about which end is which.
double equalize(const std::function<double(double)>& D, double lo, double hi, double tol) {
  double dlo = D(lo);
  double dhi = D(hi);
  if (dlo == 0.0) return lo;
  if (dhi == 0.0) return hi;
  if ((dlo > 0.0) == (dhi > 0.0)) {
    throw std::runtime_error("equalization objective does not change sign over the regime");
  }
  while (hi - lo > tol) {
    const double mid = lo + (hi - lo) / 2.0;
    if (mid <= lo || mid >= hi) break;
    const double dm = D(mid);
    if (dm == 0.0) return mid;
    if ((dm > 0.0) == (dlo > 0.0)) {
      lo = mid;
      dlo = dm;
    } else {
      hi = mid;
    }
  }
  return lo + (hi - lo) / 2.0;
}

MinimaxWitness witness(WitnessSite site, double x, double value) {
  return {site, x, value};
}

}  // namespace

CriticalConstants critical_constants() {
  CriticalConstants cc;
  cc.a_lower_q = 2.0 / (kPi - 2.0);
  cc.a_upper_q = 2.0;
  cc.b_upper_q = kPi * kPi / 4.0 - 1.0;
  cc.b_lower_q = 2.0 / (kPi - 2.0);
  for (int q = 1; q <= 4; ++q) {
    const double a = coeff_A(q);
    const double b = coeff_B(q);
    cc.p_range[q - 1] = {std::min(a, b), std::max(a, b)};
  }
  return cc;
}

RegimeClassification classify(const FamilySpec& spec, int grid_n, double tol) {
  const CriticalConstants cc = critical_constants();
  double lo_crit = 0.0;
  double hi_crit = 0.0;
  bool lower_first = true;  // GlobalLower at or below lo_crit
  switch (spec.kind) {
    case FamilyKind::AType:
      lo_crit = cc.a_lower_q;
      hi_crit = cc.a_upper_q;
      break;
    case FamilyKind::BType:
      lo_crit = cc.b_upper_q;
      hi_crit = cc.b_lower_q;
      lower_first = false;
      break;
    case FamilyKind::FixedQ: {
      const auto& r = cc.p_range[static_cast<int>(spec.q) - 1];
      lo_crit = r.lo;
      hi_crit = r.hi;
      break;
    }
    case FamilyKind::TwoParam:
      throw std::invalid_argument("classify needs a one-parameter member");
  }
  const double param = spec.kind == FamilyKind::FixedQ ? spec.p : spec.q;
  RegimeClassification rc;
  if (param <= lo_crit) {
    rc.regime = lower_first ? Regime::GlobalLower : Regime::GlobalUpper;
    return rc;
  }
  if (param >= hi_crit) {
    rc.regime = lower_first ? Regime::GlobalUpper : Regime::GlobalLower;
    return rc;
  }
  rc.regime = Regime::Crossing;
  const auto f = [&spec](double x) { return phi(spec, x); };
  const auto pts = interior_scan_points(grid_n);
  std::optional<Bracket> found;
  int prev_sign = 0;
  double prev_x = 0.0;
  for (const double x : pts) {
    // Skip the outermost ladder points: members touching zero at an endpoint
    // dip below double rounding noise there and would show phantom signs.
    if (x < kValueScanFloor || x > kHalfPi - kValueScanFloor) continue;
    const double v = f(x);
    const int s = (v > 0.0) - (v < 0.0);
    if (s == 0) continue;
    if (prev_sign != 0 && s != prev_sign) {
      if (found) {
        throw std::runtime_error("multiple sign changes found in the crossing regime");
      }
      found = Bracket{prev_x, x};
    }
    prev_sign = s;
    prev_x = x;
  }
  if (!found) {
    throw std::runtime_error("no sign change found in the crossing regime");
  }
  rc.crossing_x = bisect(f, *found, tol);
  return rc;
}

MinimaxResult solve_minimax_A(double tol) {
  const CriticalConstants cc = critical_constants();
  const double width = cc.a_upper_q - cc.a_lower_q;
  const double lo = cc.a_lower_q + width * 1e-6;
  const double hi = cc.a_upper_q - width * 1e-6;
  const auto D = [tol](double q) {
    const auto ext = find_extrema(FamilySpec::a_type(q), kDefaultGrid, tol);
    return abs_or_zero(ext, ExtremumKind::Max) - abs_or_zero(ext, ExtremumKind::Min);
  };
  const double q0 = equalize(D, lo, hi, tol);

  MinimaxResult res;
  res.family_kind = FamilyKind::AType;
  res.param0 = q0;
  const FamilySpec spec = FamilySpec::a_type(q0);
  const auto ext = find_extrema(spec, kDefaultGrid, tol);
  for (const auto& e : ext) {
    res.witnesses.push_back(witness(
        e.kind == ExtremumKind::Max ? WitnessSite::InteriorMax : WitnessSite::InteriorMin,
        e.x, e.value));
  }
  res.residual = std::abs(abs_or_zero(ext, ExtremumKind::Max) -
                          abs_or_zero(ext, ExtremumKind::Min));
  res.d0 = sup_abs_deviation(spec, kDefaultGrid, tol);
  return res;
}

MinimaxResult solve_minimax_B(double tol) {
  const CriticalConstants cc = critical_constants();
  const double width = cc.b_lower_q - cc.b_upper_q;
  const double lo = cc.b_upper_q + width * 1e-6;
  const double hi = cc.b_lower_q - width * 1e-6;
  const auto D = [tol](double q) {
    const FamilySpec spec = FamilySpec::b_type(q);
    const auto ext = find_extrema(spec, kDefaultGrid, tol);
    return std::abs(phi_limit_zero(spec)) - abs_or_zero(ext, ExtremumKind::Max);
  };
  const double q0 = equalize(D, lo, hi, tol);

  MinimaxResult res;
  res.family_kind = FamilyKind::BType;
  res.param0 = q0;
  const FamilySpec spec = FamilySpec::b_type(q0);
  res.witnesses.push_back(witness(WitnessSite::EndpointZero, 0.0, phi_limit_zero(spec)));
  const auto ext = find_extrema(spec, kDefaultGrid, tol);
  for (const auto& e : ext) {
    res.witnesses.push_back(witness(
        e.kind == ExtremumKind::Max ? WitnessSite::InteriorMax : WitnessSite::InteriorMin,
        e.x, e.value));
  }
  res.residual = std::abs(std::abs(phi_limit_zero(spec)) -
                          abs_or_zero(ext, ExtremumKind::Max));
  res.d0 = sup_abs_deviation(spec, kDefaultGrid, tol);
  return res;
}

MinimaxResult solve_minimax_fixed_q(int q, double tol) {
  if (q < 1 || q > 4) {
    throw std::invalid_argument("fixed exponent must be one of 1, 2, 3, 4");
  }
  const CriticalConstants cc = critical_constants();
  const auto& r = cc.p_range[q - 1];
  const double width = r.hi - r.lo;
  const double lo = r.lo + width * 1e-6;
  const double hi = r.hi - width * 1e-6;
  const auto interior_mag = [q, tol](double p) {
    const auto ext = find_extrema(FamilySpec::fixed_q(q, p), kDefaultGrid, tol);
    double best = 0.0;
    for (const auto& e : ext) best = std::max(best, std::abs(e.value));
    return best;
  };
  const auto D = [&](double p) {
    return std::abs(phi_limit_zero(FamilySpec::fixed_q(q, p))) - interior_mag(p);
  };
  const double p0 = equalize(D, lo, hi, tol);

  MinimaxResult res;
  res.family_kind = FamilyKind::FixedQ;
  res.param0 = p0;
  const FamilySpec spec = FamilySpec::fixed_q(q, p0);
  res.witnesses.push_back(witness(WitnessSite::EndpointZero, 0.0, phi_limit_zero(spec)));
  const auto ext = find_extrema(spec, kDefaultGrid, tol);
  for (const auto& e : ext) {
    res.witnesses.push_back(witness(
        e.kind == ExtremumKind::Max ? WitnessSite::InteriorMax : WitnessSite::InteriorMin,
        e.x, e.value));
  }
  res.residual = std::abs(std::abs(phi_limit_zero(spec)) - interior_mag(p0));
  res.d0 = sup_abs_deviation(spec, kDefaultGrid, tol);
  return res;
}

DeviationTables deviation_tables(int grid_n, double tol) {
  DeviationTables t;
  const CriticalConstants cc = critical_constants();
  const auto dev = [grid_n, tol](const FamilySpec& spec) {
    return sup_abs_deviation(spec, grid_n, tol);
  };
  const auto row = [&dev](std::string id, std::string expr, FamilySpec spec,
                          double ref, bool exact) {
    DeviationRow r;
    r.id = std::move(id);
    r.expression = std::move(expr);
    r.spec = spec;
    r.reference = ref;
    r.reference_exact = exact;
    r.computed = dev(spec);
    return r;
  };

  t.upper.push_back(row("U1", "(2/pi^2) (pi - 2x)",
                        FamilySpec::fixed_q(1, coeff_B(1)), (4.0 - kPi) / kPi, true));
  t.upper.push_back(row("U2", "((pi-2)/pi^3) (pi^2 - 4x^2)",
                        FamilySpec::a_type(2.0), 0.011612, false));
  t.upper.push_back(row("U3", "((pi-2)/pi^4) (pi^3 - 8x^3)",
                        FamilySpec::a_type(3.0), 0.065358, false));
  t.upper.push_back(row("U4", "((pi-2)/pi^5) (pi^4 - 16x^4)",
                        FamilySpec::a_type(4.0), 0.10245, false));
  t.upper.push_back(row("U5", "(2/(q pi^(q+1))) (pi^q - (2x)^q) at q = pi^2/4 - 1",
                        FamilySpec::b_type(cc.b_upper_q),
                        (4.0 + 2.0 * kPi - kPi * kPi) / (kPi * kPi - 4.0), true));

  t.lower.push_back(row("L1", "((pi-2)/pi^2) (pi - 2x)",
                        FamilySpec::fixed_q(1, coeff_A(1)), 0.082395, false));
  t.lower.push_back(row("L2", "(1/pi^3) (pi^2 - 4x^2)",
                        FamilySpec::b_type(2.0), (kPi - 3.0) / kPi, true));
  t.lower.push_back(row("L3", "(2/(3 pi^4)) (pi^3 - 8x^3)",
                        FamilySpec::b_type(3.0), (3.0 * kPi - 8.0) / (3.0 * kPi), true));
  t.lower.push_back(row("L4", "(1/(2 pi^5)) (pi^4 - 16x^4)",
                        FamilySpec::b_type(4.0), (2.0 * kPi - 5.0) / (2.0 * kPi), true));
  t.lower.push_back(row("L5", "((pi-2)/pi^(q+1)) (pi^q - (2x)^q) at q = 2/(pi-2)",
                        FamilySpec::a_type(cc.a_lower_q), 0.0085153, false));
  return t;
}

bool verify_pair_bounds(double q1, double q2, int n) {
  if (n < 2) throw std::invalid_argument("grid must have at least two points");
  if (!(q1 > 0.0) || !(q2 > 0.0)) {
    throw std::domain_error("exponents must be positive");
  }
  const CriticalConstants cc = critical_constants();
  bool low_regime;
  if (q1 <= cc.b_upper_q && q2 <= cc.a_lower_q) {
    low_regime = true;
  } else if (q1 >= cc.b_lower_q && q2 >= cc.a_upper_q) {
    low_regime = false;
  } else {
    throw std::domain_error("exponent pair lies outside both sandwich regimes");
  }
  const double b1 = coeff_B(q1);
  const double a2 = coeff_A(q2);
  const double pq1 = std::pow(kPi, q1);
  const double pq2 = std::pow(kPi, q2);
  constexpr double slack = 1e-12;
  for (int i = 1; i <= n; ++i) {
    const double x = kHalfPi * i / n;
    const double s = sinc(x);
    const double b_side = 2.0 / kPi + b1 * (pq1 - std::pow(2.0 * x, q1));
    const double a_side = 2.0 / kPi + a2 * (pq2 - std::pow(2.0 * x, q2));
    if (low_regime) {
      if (b_side < s - slack || s < a_side - slack) return false;
    } else {
      if (b_side > s + slack || s > a_side + slack) return false;
    }
  }
  return true;
}

}  // namespace jordan
