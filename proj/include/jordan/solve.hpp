#pragma once

#include <functional>
#include <vector>

#include "jordan/family.hpp"

namespace jordan {

struct Bracket {
  double lo = 0.0;
  double hi = 0.0;
};

/// A bisected root.  `residual` is the positional uncertainty (half the
/// final bracket width), not the function value at `x`.
struct RootRecord {
  double x = 0.0;
  double residual = 0.0;
  Bracket bracket;
};

enum class ExtremumKind { Max, Min };

struct ExtremumRecord {
  double x = 0.0;
  double value = 0.0;
  ExtremumKind kind = ExtremumKind::Max;
};

using ScalarFn = std::function<double(double)>;

/// Evaluates f at n equally spaced interior points of (lo, hi) and returns
/// every consecutive pair with a strict sign change.
std::vector<Bracket> bracket_scan(const ScalarFn& f, double lo, double hi, int n);

/// Standard bisection on a sign-changing bracket; stops once the bracket
/// width is at most tol (at most ceil(log2(width/tol)) + 2 evaluations
/// beyond the endpoints).
RootRecord bisect(const ScalarFn& f, Bracket bracket, double tol);

/// Locates the interior extrema of phi for the given member by scanning
/// the sign of its x-derivative.  The scan combines a uniform grid with
/// geometrically spaced points near both ends of the interval (down to
/// 1e-9 from either endpoint): near the regime boundaries the extrema
/// migrate exponentially close to the endpoints and a uniform grid alone
/// cannot see them.  Records are sorted by x.
std::vector<ExtremumRecord> find_extrema(const FamilySpec& spec, int grid_n = 1024,
                                         double tol = 1e-12);

/// Supremum of |phi| over the closure of the interval: the larger of the
/// endpoint limit magnitudes and the located interior extremum magnitudes.
double sup_abs_deviation(const FamilySpec& spec, const Interval01& interval,
                         int grid_n = 1024, double tol = 1e-12);
double sup_abs_deviation(const FamilySpec& spec, int grid_n = 1024, double tol = 1e-12);

/// Shared scan abscissae used by the extremum and crossing searches:
/// grid_n uniform interior points plus the geometric end ladders.
std::vector<double> interior_scan_points(int grid_n);

}  // namespace jordan
