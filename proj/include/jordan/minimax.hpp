#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "jordan/family.hpp"
#include "jordan/solve.hpp"

namespace jordan {

struct ParamRange {
  double lo = 0.0;
  double hi = 0.0;
};

/// Regime boundaries of the one-parameter families.  Members are global
/// lower (resp. upper) bounds of sinc outside the open range between the
/// two constants and cross zero once inside it.
struct CriticalConstants {
  double a_lower_q;  // AType: global lower bound for q <= this, 2/(pi-2)
  double a_upper_q;  // AType: global upper bound for q >= this, 2
  double b_upper_q;  // BType: global upper bound for q <= this, pi^2/4 - 1
  double b_lower_q;  // BType: global lower bound for q >= this, 2/(pi-2)
  std::array<ParamRange, 4> p_range;  // fixed exponents 1..4: (lower-side p, upper-side p)
};
CriticalConstants critical_constants();

enum class Regime { GlobalLower, GlobalUpper, Crossing };

struct RegimeClassification {
  Regime regime = Regime::GlobalLower;
  std::optional<RootRecord> crossing_x;  // present only in the crossing regime
};

/// Places a one-parameter member (AType, BType or FixedQ) in its regime and,
/// inside the crossing strip, locates the unique sign change of phi.
RegimeClassification classify(const FamilySpec& spec, int grid_n = 1024,
                              double tol = 1e-12);

enum class WitnessSite { EndpointZero, InteriorMax, InteriorMin };

struct MinimaxWitness {
  WitnessSite site = WitnessSite::InteriorMax;
  double x = 0.0;
  double value = 0.0;
};

struct MinimaxResult {
  FamilyKind family_kind = FamilyKind::AType;
  double param0 = 0.0;     // equalizing parameter (exponent for A/B, coefficient for FixedQ)
  double d0 = 0.0;         // minimax deviation at param0
  std::vector<MinimaxWitness> witnesses;
  double residual = 0.0;   // | |w1| - |w2| | at the solution
};

/// Equalizes the two deviation witnesses of the AType family (interior max
/// vs interior min) by bisection on the exponent.
MinimaxResult solve_minimax_A(double tol = 1e-12);

/// Equalizes the 0+ endpoint deviation against the interior max of the
/// BType family.
MinimaxResult solve_minimax_B(double tol = 1e-12);

/// Equalizes the 0+ endpoint deviation against the interior extremum for a
/// fixed integer exponent q in 1..4.
MinimaxResult solve_minimax_fixed_q(int q, double tol = 1e-12);

struct DeviationRow {
  std::string id;
  std::string expression;   // bound written out, offset 2/pi omitted
  FamilySpec spec;
  double reference = 0.0;   // closed form where one exists, else quoted decimal
  bool reference_exact = false;
  double computed = 0.0;
};

struct DeviationTables {
  std::vector<DeviationRow> upper;
  std::vector<DeviationRow> lower;
};

/// Sup-norm deviations of the five classical upper and five classical lower
/// bounds in the stratified form.
DeviationTables deviation_tables(int grid_n = 1024, double tol = 1e-12);

/// Checks the two-sided sandwich with a BType exponent q1 on one side and
/// an AType exponent q2 on the other over an n-point closed grid.  The pair
/// must lie either in the low-exponent regime (q1 <= pi^2/4 - 1 and
/// q2 <= 2/(pi-2), B above / A below) or in the high-exponent regime
/// (q1 >= 2/(pi-2) and q2 >= 2, sides swapped); other pairs throw.
bool verify_pair_bounds(double q1, double q2, int n);

}  // namespace jordan
