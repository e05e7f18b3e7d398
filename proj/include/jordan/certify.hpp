#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jordan/poly.hpp"

namespace jordan {

enum class TrigTarget { Sin, Cos };
enum class BoundDirection { Upper, Lower };

/// Provenance of a truncated Maclaurin bound for sin(kx) or cos(kx).
/// The bound direction follows from the sign of the first omitted term and
/// is certified on (0, valid_hi], where valid_hi is the largest multiple of
/// 1/1024 with (k x)^2 < (d+2)(d+3) at x = valid_hi, d the last retained
/// degree.  Beyond the predicate the remainder terms need not decrease and
/// the direction claim lapses.
struct Enclosure {
  TrigTarget target = TrigTarget::Sin;
  Rational argument_scale{1};
  int degree = 0;
  BoundDirection direction = BoundDirection::Lower;
  Rational valid_hi{0};
};

/// Truncated Maclaurin series of sin(kx) / cos(kx) through `degree`, which
/// must match the parity of the target (odd for Sin, even for Cos).
std::pair<RationalPoly, Enclosure> maclaurin(TrigTarget target, const Rational& scale,
                                             int degree);

/// One summand of a certified combination: a monomial multiplier times
/// either a trig enclosure or (when series is absent) nothing, i.e. the
/// multiplier enters exactly.
struct BoundTerm {
  RationalPoly multiplier;
  std::optional<std::pair<RationalPoly, Enclosure>> series;
};

/// Sums the terms into a one-sided polynomial bound of the underlying
/// transcendental expression, valid on (0, interval_hi].  Each multiplier
/// must be a monomial (so its sign is constant on x > 0) and each series
/// direction must agree with the requested direction under that sign;
/// mismatches and enclosures not certified through interval_hi throw.
RationalPoly combine_bound(BoundDirection direction, const std::vector<BoundTerm>& terms,
                           const Rational& interval_hi);

enum class SignClaim { Positive, Negative };

/// Exact sign certificate for a rational polynomial on an interval.
/// root_count counts distinct roots in (lo, hi] by Sturm's theorem after
/// factoring out x^factored_degree (done only when lo = 0).  The
/// certificate is valid when no roots remain and the midpoint sign matches
/// the claim.
struct SturmCertificate {
  RationalPoly poly;
  Rational lo{0};
  Rational hi{0};
  SignClaim claimed = SignClaim::Positive;
  int root_count = 0;
  int chain_length = 0;
  int factored_degree = 0;
  int midpoint_sign = 0;
  bool valid = false;
};

SturmCertificate sturm_sign(const RationalPoly& poly, const Rational& lo,
                            const Rational& hi, SignClaim claimed);

/// The two derivative-quotient sign lemmas behind the monotonicity of the
/// boundary-exponent functions: the A-side combination
///   x cos x + (1/2) sin 2x + x^2 sin x - sin x - x
/// is negative, and the B-side combination
///   cos 2x + (x/2) sin 2x + x^2 - 1
/// is positive, on (0, 8/5] and hence on (0, pi/2).
enum class SignLemma { AFamilyNegative, BFamilyPositive };

struct CertificateBundle {
  SignLemma lemma = SignLemma::AFamilyNegative;
  bool tampered = false;
  std::vector<std::pair<RationalPoly, Enclosure>> enclosures;
  RationalPoly combined;
  std::optional<SturmCertificate> certificate;
  bool valid = false;
  std::string failure_stage;   // "enclosure-validity", "combine-direction" or "sturm-sign"
  std::string failure_detail;
};

CertificateBundle certify_lemma(SignLemma lemma, const Rational& lo = Rational(0),
                                const Rational& hi = Rational(8, 5));

/// Negative control: reruns a lemma with one series truncated at a wrong
/// degree.  The bundle must come back invalid; used to show the pipeline
/// actually rejects broken inputs.
CertificateBundle certify_lemma_tampered(SignLemma lemma, const Rational& lo = Rational(0),
                                         const Rational& hi = Rational(8, 5));

/// Canonical decimal-free text form of a bundle (stable across runs).
std::string serialize(const CertificateBundle& bundle);

}  // namespace jordan
