#include "jordan/solve.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace jordan {
namespace {

constexpr double kEndpointGap = 1e-9;

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

void check_grid_n(int n) {
  if (n < 64 || n > (1 << 20)) {
    throw std::invalid_argument("grid size must lie in [64, 2^20]");
  }
}

void check_tol(double tol) {
  if (!(tol > 0.0) || tol > 1e-3) {
    throw std::invalid_argument("tolerance must lie in (0, 1e-3]");
  }
}

}  // namespace

std::vector<Bracket> bracket_scan(const ScalarFn& f, double lo, double hi, int n) {
  if (!(lo < hi)) throw std::invalid_argument("bracket_scan needs lo < hi");
  if (n < 2) throw std::invalid_argument("bracket_scan needs at least two points");
  std::vector<Bracket> out;
  const double step = (hi - lo) / (n + 1);
  double prev_x = lo + step;
  int prev_sign = sign_of(f(prev_x));
  for (int i = 2; i <= n; ++i) {
    const double x = lo + i * step;
    const int s = sign_of(f(x));
    if (prev_sign != 0 && s != 0 && s != prev_sign) {
      out.push_back({prev_x, x});
    }
    prev_x = x;
    prev_sign = s;
  }
  return out;
}

RootRecord bisect(const ScalarFn& f, Bracket bracket, double tol) {
  check_tol(tol);
  double lo = bracket.lo;
  double hi = bracket.hi;
  if (!(lo < hi)) throw std::invalid_argument("bisect needs lo < hi");
  int slo = sign_of(f(lo));
  const int shi = sign_of(f(hi));
  if (slo == 0 || shi == 0 || slo == shi) {
    throw std::invalid_argument("bisect needs a strict sign change on the bracket");
  }
  while (hi - lo > tol) {
    const double mid = lo + (hi - lo) / 2.0;
    if (mid <= lo || mid >= hi) break;
    const int sm = sign_of(f(mid));
    if (sm == 0) {
      return {mid, 0.0, {lo, hi}};
    }
    if (sm == slo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return {lo + (hi - lo) / 2.0, (hi - lo) / 2.0, {lo, hi}};
}

std::vector<double> interior_scan_points(int grid_n) {
  check_grid_n(grid_n);
  const double lo = kEndpointGap;
  const double hi = kHalfPi - kEndpointGap;
  const double step = (hi - lo) / (grid_n + 1);
  std::vector<double> pts;
  pts.reserve(grid_n + 256);
  const double ratio = std::pow(10.0, 1.0 / 16.0);
  for (double x = lo; x < lo + step; x *= ratio) pts.push_back(x);
  for (double d = kEndpointGap; d < step; d *= ratio) pts.push_back(kHalfPi - d);
  for (int i = 1; i <= grid_n; ++i) pts.push_back(lo + i * step);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

std::vector<ExtremumRecord> find_extrema(const FamilySpec& spec, int grid_n, double tol) {
  check_tol(tol);
  const auto pts = interior_scan_points(grid_n);
  const auto deriv = [&spec](double x) { return dphi_dx(spec, x); };
  std::vector<ExtremumRecord> out;
  int prev_sign = 0;
  double prev_x = 0.0;
  for (const double x : pts) {
    const int s = sign_of(deriv(x));
    if (s == 0) continue;
    if (prev_sign != 0 && s != prev_sign) {
      const RootRecord root = bisect(deriv, {prev_x, x}, tol);
      ExtremumRecord rec;
      rec.x = root.x;
      rec.value = phi(spec, root.x);
      rec.kind = prev_sign > 0 ? ExtremumKind::Max : ExtremumKind::Min;
      out.push_back(rec);
    }
    prev_sign = s;
    prev_x = x;
  }
  return out;
}

double sup_abs_deviation(const FamilySpec& spec, const Interval01& interval, int grid_n,
                         double tol) {
  double best = std::max(std::abs(interval.lo_limit), std::abs(interval.hi_limit));
  for (const auto& e : find_extrema(spec, grid_n, tol)) {
    best = std::max(best, std::abs(e.value));
  }
  return best;
}

double sup_abs_deviation(const FamilySpec& spec, int grid_n, double tol) {
  return sup_abs_deviation(spec, phi_interval(spec), grid_n, tol);
}

}  // namespace jordan
