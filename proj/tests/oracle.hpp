#pragma once

// Independent 50-digit reference implementations used only by tests.  These
// re-derive every formula from scratch on a wide float type; they must not
// call into the library under test.

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace oracle {

using Real = boost::multiprecision::cpp_bin_float_50;

inline const Real kPi = boost::multiprecision::atan(Real(1)) * 4;

inline Real sinc(const Real& x) {
  if (x == 0) return Real(1);
  return boost::multiprecision::sin(x) / x;
}

inline Real coeff_a(const Real& q) {
  return (kPi - 2) / boost::multiprecision::pow(kPi, q + 1);
}

inline Real coeff_b(const Real& q) {
  return 2 / (q * boost::multiprecision::pow(kPi, q + 1));
}

inline Real phi(const Real& p, const Real& q, const Real& x) {
  using boost::multiprecision::pow;
  return sinc(x) - 2 / kPi - p * (pow(kPi, q) - pow(2 * x, q));
}

inline Real phi_a(const Real& q, const Real& x) { return phi(coeff_a(q), q, x); }
inline Real phi_b(const Real& q, const Real& x) { return phi(coeff_b(q), q, x); }

// Central finite differences, orders 1..4.
template <class F>
Real fd1(F f, const Real& x, const Real& h) {
  return (f(x + h) - f(x - h)) / (2 * h);
}

template <class F>
Real fd2(F f, const Real& x, const Real& h) {
  return (f(x + h) - 2 * f(x) + f(x - h)) / (h * h);
}

template <class F>
Real fd3(F f, const Real& x, const Real& h) {
  return (f(x + 2 * h) - 2 * f(x + h) + 2 * f(x - h) - f(x - 2 * h)) / (2 * h * h * h);
}

template <class F>
Real fd4(F f, const Real& x, const Real& h) {
  return (f(x + 2 * h) - 4 * f(x + h) + 6 * f(x) - 4 * f(x - h) + f(x - 2 * h)) /
         (h * h * h * h);
}

}  // namespace oracle
