#pragma once

#include <span>
#include <vector>

#include "jordan/rational.hpp"

namespace jordan {

/// Dense univariate polynomial with exact rational coefficients,
/// coefficient i multiplying x^i.  Trailing zero coefficients are dropped on
/// construction; the zero polynomial has degree -1.
class RationalPoly {
 public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<Rational> coeffs);
  static RationalPoly monomial(const Rational& c, int degree);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const Rational& coeff(int i) const;
  std::span<const Rational> coeffs() const { return coeffs_; }

  Rational eval(const Rational& x) const;
  RationalPoly derivative() const;

  /// Multiplicity of the root at 0 (0 for the zero polynomial).
  int trailing_zero_count() const;
  /// Exact division by x^m; requires at least m trailing zeros.
  RationalPoly shift_down(int m) const;

  RationalPoly operator-() const;
  friend RationalPoly operator+(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator-(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator*(const Rational& c, const RationalPoly& a);
  bool operator==(const RationalPoly& other) const = default;

  /// Polynomial remainder of a by b (b nonzero).
  static RationalPoly remainder(const RationalPoly& a, const RationalPoly& b);

  /// "2/2835 x^9 - 1/240 x^7" style, highest degree first; "0" when zero.
  std::string text() const;

 private:
  std::vector<Rational> coeffs_;
};

}  // namespace jordan
