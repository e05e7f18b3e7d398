#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace jordan {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline int sign(const Rational& v) { return v.sign(); }

/// Parses "n", "-n" or "n/d" with integer n, d (d > 0 after normalization).
Rational parse_rational(std::string_view text);

/// Reduced fraction, "n" or "n/d"; never a decimal.
std::string rational_text(const Rational& v);

}  // namespace jordan
