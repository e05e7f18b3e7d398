#include "jordan/certify.hpp"

#include <sstream>
#include <stdexcept>

namespace jordan {
namespace {

int rational_sign(const Rational& v) { return v.sign(); }

BigInt factorial(int n) {
  BigInt f{1};
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

Rational maclaurin_coeff(TrigTarget target, const Rational& scale, int j) {
  const int half = target == TrigTarget::Sin ? (j - 1) / 2 : j / 2;
  Rational c = Rational(pow(numerator(scale), j), pow(denominator(scale), j)) /
               Rational(factorial(j));
  return half % 2 == 0 ? c : -c;
}

Rational max_valid_hi(const Rational& scale, int last_degree) {
  const BigInt s = BigInt(last_degree + 2) * (last_degree + 3);
  const BigInt kn = numerator(scale);
  const BigInt kd = denominator(scale);
  const BigInt t = s * kd * kd * BigInt(1024) * 1024;
  const BigInt kn2 = kn * kn;
  const BigInt quotient = t / kn2;
  BigInt n = sqrt(quotient);
  while ((n + 1) * (n + 1) * kn2 < t) ++n;
  while (n > 0 && n * n * kn2 >= t) --n;
  return Rational(n, 1024);
}

int variations(const std::vector<RationalPoly>& chain, const Rational& t) {
  int var = 0;
  int prev = 0;
  for (const auto& s : chain) {
    const int sg = rational_sign(s.eval(t));
    if (sg == 0) continue;
    if (prev != 0 && sg != prev) ++var;
    prev = sg;
  }
  return var;
}

RationalPoly mono(int num, int den, int degree) {
  return RationalPoly::monomial(Rational(num, den), degree);
}

const char* lemma_id(SignLemma lemma) {
  return lemma == SignLemma::AFamilyNegative ? "mtp-a-negative" : "mtp-b-positive";
}

}  // namespace

std::pair<RationalPoly, Enclosure> maclaurin(TrigTarget target, const Rational& scale,
                                             int degree) {
  if (scale <= 0) throw std::invalid_argument("argument scale must be positive");
  const int want_odd = target == TrigTarget::Sin ? 1 : 0;
  if (degree < want_odd || degree % 2 != want_odd) {
    throw std::invalid_argument("truncation degree must match the parity of the target");
  }
  std::vector<Rational> coeffs(degree + 1);
  for (int j = want_odd; j <= degree; j += 2) {
    coeffs[j] = maclaurin_coeff(target, scale, j);
  }
  Enclosure enc;
  enc.target = target;
  enc.argument_scale = scale;
  enc.degree = degree;
  enc.direction = rational_sign(maclaurin_coeff(target, scale, degree + 2)) > 0
                      ? BoundDirection::Lower
                      : BoundDirection::Upper;
  enc.valid_hi = max_valid_hi(scale, degree);
  return {RationalPoly(std::move(coeffs)), enc};
}

RationalPoly combine_bound(BoundDirection direction, const std::vector<BoundTerm>& terms,
                           const Rational& interval_hi) {
  if (interval_hi <= 0) throw std::invalid_argument("interval_hi must be positive");
  RationalPoly sum;
  for (const auto& term : terms) {
    int nonzero = 0;
    int mono_sign = 0;
    for (const auto& c : term.multiplier.coeffs()) {
      if (c != 0) {
        ++nonzero;
        mono_sign = rational_sign(c);
      }
    }
    if (nonzero != 1) {
      throw std::invalid_argument("multiplier must be a nonzero monomial");
    }
    if (!term.series) {
      sum = sum + term.multiplier;
      continue;
    }
    const auto& [poly, enc] = *term.series;
    if (enc.valid_hi < interval_hi) {
      throw std::invalid_argument("enclosure not certified through the interval");
    }
    const BoundDirection needed =
        (direction == BoundDirection::Upper) == (mono_sign > 0) ? BoundDirection::Upper
                                                                : BoundDirection::Lower;
    if (enc.direction != needed) {
      throw std::invalid_argument("series direction incompatible with the requested bound");
    }
    sum = sum + term.multiplier * poly;
  }
  return sum;
}

SturmCertificate sturm_sign(const RationalPoly& poly, const Rational& lo,
                            const Rational& hi, SignClaim claimed) {
  if (!(lo < hi)) throw std::invalid_argument("sturm_sign needs lo < hi");
  if (poly.is_zero()) throw std::invalid_argument("sturm_sign needs a nonzero polynomial");

  SturmCertificate cert;
  cert.poly = poly;
  cert.lo = lo;
  cert.hi = hi;
  cert.claimed = claimed;

  RationalPoly work = poly;
  if (lo == 0) {
    cert.factored_degree = poly.trailing_zero_count();
    work = poly.shift_down(cert.factored_degree);
  }
  if (work.eval(lo) == 0 || work.eval(hi) == 0) {
    throw std::domain_error("polynomial vanishes at an interval endpoint");
  }

  std::vector<RationalPoly> chain{work};
  if (work.degree() >= 1) {
    chain.push_back(work.derivative());
    while (!chain.back().is_zero()) {
      chain.push_back(-RationalPoly::remainder(chain[chain.size() - 2], chain.back()));
    }
    chain.pop_back();
  }
  cert.chain_length = static_cast<int>(chain.size());
  cert.root_count = variations(chain, lo) - variations(chain, hi);
  cert.midpoint_sign = rational_sign(poly.eval((lo + hi) / 2));
  cert.valid = cert.root_count == 0 &&
               cert.midpoint_sign == (claimed == SignClaim::Positive ? 1 : -1);
  return cert;
}

namespace {

CertificateBundle run_lemma(SignLemma lemma, const Rational& lo, const Rational& hi,
                            bool tampered) {
  CertificateBundle bundle;
  bundle.lemma = lemma;
  bundle.tampered = tampered;

  BoundDirection direction;
  SignClaim claim;
  std::vector<BoundTerm> terms;
  if (lemma == SignLemma::AFamilyNegative) {
    auto cos_x = maclaurin(TrigTarget::Cos, Rational(1), 4);
    auto sin_2x = maclaurin(TrigTarget::Sin, Rational(2), 9);
    auto sin_x_up = maclaurin(TrigTarget::Sin, Rational(1), 5);
    auto sin_x_low = maclaurin(TrigTarget::Sin, Rational(1), tampered ? 3 : 7);
    bundle.enclosures = {cos_x, sin_2x, sin_x_up, sin_x_low};
    terms = {{mono(1, 1, 1), cos_x},
             {mono(1, 2, 0), sin_2x},
             {mono(1, 1, 2), sin_x_up},
             {mono(-1, 1, 0), sin_x_low},
             {mono(-1, 1, 1), std::nullopt}};
    direction = BoundDirection::Upper;
    claim = SignClaim::Negative;
  } else {
    auto cos_2x = maclaurin(TrigTarget::Cos, Rational(2), 6);
    auto sin_2x = maclaurin(TrigTarget::Sin, Rational(2), tampered ? 5 : 7);
    bundle.enclosures = {cos_2x, sin_2x};
    terms = {{mono(1, 1, 0), cos_2x},
             {mono(1, 2, 1), sin_2x},
             {mono(1, 1, 2), std::nullopt},
             {mono(-1, 1, 0), std::nullopt}};
    direction = BoundDirection::Lower;
    claim = SignClaim::Positive;
  }

  for (const auto& [poly, enc] : bundle.enclosures) {
    if (enc.valid_hi < hi) {
      bundle.failure_stage = "enclosure-validity";
      bundle.failure_detail = "enclosure certified only to " + rational_text(enc.valid_hi);
      return bundle;
    }
  }
  try {
    bundle.combined = combine_bound(direction, terms, hi);
  } catch (const std::invalid_argument& e) {
    bundle.failure_stage = "combine-direction";
    bundle.failure_detail = e.what();
    return bundle;
  }
  const SturmCertificate cert = sturm_sign(bundle.combined, lo, hi, claim);
  bundle.certificate = cert;
  if (!cert.valid) {
    bundle.failure_stage = "sturm-sign";
    std::ostringstream detail;
    detail << "root_count=" << cert.root_count << " midpoint_sign=" << cert.midpoint_sign;
    bundle.failure_detail = detail.str();
    return bundle;
  }
  bundle.valid = true;
  return bundle;
}

}  // namespace

CertificateBundle certify_lemma(SignLemma lemma, const Rational& lo, const Rational& hi) {
  return run_lemma(lemma, lo, hi, false);
}

CertificateBundle certify_lemma_tampered(SignLemma lemma, const Rational& lo,
                                         const Rational& hi) {
  return run_lemma(lemma, lo, hi, true);
}

std::string serialize(const CertificateBundle& bundle) {
  std::ostringstream out;
  out << "lemma: " << lemma_id(bundle.lemma) << "\n";
  out << "tampered: " << (bundle.tampered ? "yes" : "no") << "\n";
  out << "status: " << (bundle.valid ? "valid" : "invalid") << "\n";
  if (!bundle.valid) {
    out << "failure-stage: " << bundle.failure_stage << "\n";
    out << "failure-detail: " << bundle.failure_detail << "\n";
  }
  out << "enclosures:\n";
  for (const auto& [poly, enc] : bundle.enclosures) {
    out << "  " << (enc.target == TrigTarget::Sin ? "sin" : "cos") << "("
        << rational_text(enc.argument_scale) << " x) degree " << enc.degree << " "
        << (enc.direction == BoundDirection::Upper ? "upper" : "lower") << " valid-to "
        << rational_text(enc.valid_hi) << "\n";
  }
  out << "combined: " << bundle.combined.text() << "\n";
  if (bundle.certificate) {
    const auto& c = *bundle.certificate;
    out << "interval: (" << rational_text(c.lo) << ", " << rational_text(c.hi) << "]\n";
    out << "claimed-sign: " << (c.claimed == SignClaim::Positive ? "positive" : "negative")
        << "\n";
    out << "factored-monomial-degree: " << c.factored_degree << "\n";
    out << "sturm-chain-length: " << c.chain_length << "\n";
    out << "root-count: " << c.root_count << "\n";
    out << "midpoint-sign: " << c.midpoint_sign << "\n";
  }
  return out.str();
}

}  // namespace jordan
