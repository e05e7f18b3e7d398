#include "jordan/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace jordan {

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) {
      return Rational(BigInt(std::string(text)));
    }
    const BigInt num{std::string(text.substr(0, slash))};
    const BigInt den{std::string(text.substr(slash + 1))};
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("not a rational literal: " + std::string(text));
  }
}

std::string rational_text(const Rational& v) {
  const BigInt num = numerator(v);
  const BigInt den = denominator(v);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

RationalPoly::RationalPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

RationalPoly RationalPoly::monomial(const Rational& c, int degree) {
  if (degree < 0) throw std::invalid_argument("monomial degree must be >= 0");
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return RationalPoly(std::move(v));
}

const Rational& RationalPoly::coeff(int i) const {
  static const Rational zero{0};
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return zero;
  return coeffs_[i];
}

Rational RationalPoly::eval(const Rational& x) const {
  Rational acc{0};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

RationalPoly RationalPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> v(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    v[i - 1] = coeffs_[i] * static_cast<int>(i);
  }
  return RationalPoly(std::move(v));
}

int RationalPoly::trailing_zero_count() const {
  int m = 0;
  while (m < static_cast<int>(coeffs_.size()) && coeffs_[m] == 0) ++m;
  return is_zero() ? 0 : m;
}

RationalPoly RationalPoly::shift_down(int m) const {
  if (m == 0) return *this;
  if (m < 0 || trailing_zero_count() < m) {
    throw std::invalid_argument("shift_down needs at least m roots at zero");
  }
  return RationalPoly({coeffs_.begin() + m, coeffs_.end()});
}

RationalPoly RationalPoly::operator-() const {
  std::vector<Rational> v(coeffs_.size());
  std::transform(coeffs_.begin(), coeffs_.end(), v.begin(),
                 [](const Rational& c) { return -c; });
  return RationalPoly(std::move(v));
}

RationalPoly operator+(const RationalPoly& a, const RationalPoly& b) {
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
  }
  return RationalPoly(std::move(v));
}

RationalPoly operator-(const RationalPoly& a, const RationalPoly& b) { return a + (-b); }

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return RationalPoly(std::move(v));
}

RationalPoly operator*(const Rational& c, const RationalPoly& a) {
  std::vector<Rational> v(a.coeffs_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = c * a.coeffs_[i];
  return RationalPoly(std::move(v));
}

RationalPoly RationalPoly::remainder(const RationalPoly& a, const RationalPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("remainder by the zero polynomial");
  std::vector<Rational> r = a.coeffs_;
  const int db = b.degree();
  const Rational& lead = b.coeffs_.back();
  for (int d = static_cast<int>(r.size()) - 1; d >= db; --d) {
    if (r[d] == 0) continue;
    const Rational f = r[d] / lead;
    for (int i = 0; i <= db; ++i) {
      r[d - db + i] -= f * b.coeffs_[i];
    }
    r[d] = 0;
  }
  return RationalPoly(std::move(r));
}

std::string RationalPoly::text() const {
  if (is_zero()) return "0";
  std::string out;
  for (int d = degree(); d >= 0; --d) {
    const Rational& c = coeffs_[d];
    if (c == 0) continue;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    const Rational mag = abs(c);
    const bool unit = mag == 1 && d > 0;
    if (!unit) out += rational_text(mag);
    if (d > 0) {
      if (!unit) out += " ";
      out += "x";
      if (d > 1) out += "^" + std::to_string(d);
    }
  }
  return out;
}

}  // namespace jordan
