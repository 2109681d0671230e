#pragma once

#include <optional>
#include <stdexcept>
#include <utility>

#include "tilt3/chern.hpp"
#include "tilt3/quad.hpp"
#include "tilt3/rational.hpp"

namespace tilt3 {

// Stability parameters (alpha^2, beta) for the polarization forms
// omega = alpha*l and B = beta*l.  Only alpha^2 is stored, so the whole
// parameter plane stays rational; quantities that genuinely carry a factor
// of alpha keep it as an explicit sqrt tag (see TaggedCharge).
//
// The distinguished point is alpha^2 = 3/4, beta = 1/2, where
// sqrt(alpha^2) = (1/2)*sqrt(3) lands inside Q(sqrt 3) and every report
// value is exactly representable.
struct StabilityParams {
  Rational alpha_sq;
  Rational beta;

  StabilityParams(Rational a_sq, Rational b)
      : alpha_sq(std::move(a_sq)), beta(std::move(b)) {
    if (sgn(alpha_sq) <= 0)
      throw std::invalid_argument("alpha^2 must be positive");
  }

  static StabilityParams distinguished() {
    return StabilityParams(make_rational(3, 4), make_rational(1, 2));
  }

  friend bool operator==(const StabilityParams& x, const StabilityParams& y) {
    return x.alpha_sq == y.alpha_sq && x.beta == y.beta;
  }
};

// sqrt(s) inside Q(sqrt 3) when it exists: s = t^2 gives t, s = 3 t^2 gives
// t*sqrt(3).  Everything else has no exact representation here.
inline std::optional<QuadScalar> sqrt_as_quad(const Rational& s) {
  int sg = sgn(s);
  if (sg < 0) return std::nullopt;
  if (sg == 0) return QuadScalar();
  auto rational_sqrt = [](const Rational& q) -> std::optional<Rational> {
    const BigInt& num = q.get_num();
    const BigInt& den = q.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) ||
        !mpz_perfect_square_p(den.get_mpz_t()))
      return std::nullopt;
    BigInt rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return make_rational(rn, rd);
  };
  if (auto r = rational_sqrt(s)) return QuadScalar(*r);
  if (auto r = rational_sqrt(Rational(s / 3)))
    return QuadScalar(make_rational(0), *r);
  return std::nullopt;
}

// ch^B = e^{-B} ch: the B-field twist of a character.
inline ChernVector twist_B(const ChernVector& v, const Rational& beta) {
  return exp_twist(v, Rational(-beta));
}

namespace detail {
inline void require_nonzero(const ChernVector& v, const char* what) {
  if (v.is_zero())
    throw std::invalid_argument(std::string(what) + " of the zero character");
}
}  // namespace detail

// Classical slope a1/a0, or +inf on torsion classes (a0 = 0).
inline ExtSlope slope_mu(const ChernVector& v) {
  detail::require_nonzero(v, "slope");
  if (sgn(v.a0) == 0) return ExtSlope::infinity();
  return ExtSlope(Rational(v.a1 / v.a0));
}

// Twisted slope omega^2 ch1^B / ch0^B with l^3 = 6 evaluated, i.e.
// 6*alpha^2*(a1 - beta*a0)/a0; +inf on torsion classes.  At the
// distinguished point this equals (9/2)(mu - 1/2).
inline ExtSlope slope_mu_twisted(const ChernVector& v, const StabilityParams& p) {
  detail::require_nonzero(v, "twisted slope");
  if (sgn(v.a0) == 0) return ExtSlope::infinity();
  Rational num = 6 * p.alpha_sq * (v.a1 - p.beta * v.a0);
  return ExtSlope(Rational(num / v.a0));
}

// Central charge -integral(e^{-B-i.omega} ch) with the sqrt(alpha^2) factor
// of the imaginary part kept as a tag:
//   Re Z = -ch3^B + 3*alpha^2*ch1^B,
//   Im Z = sqrt(alpha^2) * (3*ch2^B - alpha^2*ch0^B).
// Both coefficients are rational for every rational alpha^2, so comparisons
// and sign tests stay exact even when sqrt(alpha^2) is irrational.
struct TaggedCharge {
  Rational re;
  Rational im_coeff;  // Im Z = im_coeff * sqrt(alpha_sq)

  friend bool operator==(const TaggedCharge& x, const TaggedCharge& y) {
    return x.re == y.re && x.im_coeff == y.im_coeff;
  }
};

inline TaggedCharge central_charge_tagged(const ChernVector& v,
                                          const StabilityParams& p) {
  ChernVector t = twist_B(v, p.beta);
  return {Rational(-t.a3 + 3 * p.alpha_sq * t.a1),
          Rational(3 * t.a2 - p.alpha_sq * t.a0)};
}

// The same value as an ExactComplex.  Needs sqrt(alpha^2) to exist in
// Q(sqrt 3) (alpha^2 = t^2 or 3t^2); other parameters have no exact text
// rendering, so the request is rejected.
inline ExactComplex central_charge(const ChernVector& v, const StabilityParams& p) {
  TaggedCharge z = central_charge_tagged(v, p);
  std::optional<QuadScalar> root = sqrt_as_quad(p.alpha_sq);
  if (!root)
    throw std::invalid_argument(
        "alpha^2 = " + to_string(p.alpha_sq) +
        " has no exact square root in Q(sqrt3); use the tagged charge");
  return ExactComplex{QuadScalar(z.re), *root * QuadScalar(z.im_coeff)};
}

// Denominator of the tilt slope: omega^2 ch1^B with l^3 = 6 evaluated.
inline Rational tilt_denominator(const ChernVector& v, const StabilityParams& p) {
  return 6 * p.alpha_sq * (v.a1 - p.beta * v.a0);
}

// Tilt slope Im Z / (omega^2 ch1^B), or +inf when the denominator vanishes.
// Zero numerators short-circuit so that slope-zero classes report exactly 0
// for every rational alpha^2.
inline ExtSlope tilt_slope(const ChernVector& v, const StabilityParams& p) {
  detail::require_nonzero(v, "tilt slope");
  Rational den = tilt_denominator(v, p);
  if (sgn(den) == 0) return ExtSlope::infinity();
  TaggedCharge z = central_charge_tagged(v, p);
  if (sgn(z.im_coeff) == 0) return ExtSlope(QuadScalar());
  std::optional<QuadScalar> root = sqrt_as_quad(p.alpha_sq);
  if (!root)
    throw std::invalid_argument(
        "tilt slope value needs sqrt(alpha^2) in Q(sqrt3); "
        "use tilt_slopes_equal / tilt_slope_sign for general parameters");
  return ExtSlope(*root * QuadScalar(Rational(z.im_coeff / den)));
}

// Sign of a finite tilt slope; exact for every rational alpha^2 because the
// sqrt tag is positive and cancels.
inline int tilt_slope_sign(const ChernVector& v, const StabilityParams& p) {
  detail::require_nonzero(v, "tilt slope");
  Rational den = tilt_denominator(v, p);
  if (sgn(den) == 0)
    throw std::invalid_argument("tilt slope is +inf; it has no sign");
  return sgn(central_charge_tagged(v, p).im_coeff) * sgn(den);
}

// nu(v) = nu(w), exact for every rational alpha^2 (the sqrt tag and the
// common positive factors cancel under cross-multiplication).
inline bool tilt_slopes_equal(const ChernVector& v, const ChernVector& w,
                              const StabilityParams& p) {
  detail::require_nonzero(v, "tilt slope");
  detail::require_nonzero(w, "tilt slope");
  Rational dv = tilt_denominator(v, p);
  Rational dw = tilt_denominator(w, p);
  if (sgn(dv) == 0 || sgn(dw) == 0) return sgn(dv) == 0 && sgn(dw) == 0;
  Rational nv = central_charge_tagged(v, p).im_coeff;
  Rational nw = central_charge_tagged(w, p).im_coeff;
  return nv * dw == nw * dv;
}

// Drezet-style discriminant (omega^2 ch1^B)^2 - 2 (omega^3 ch0^B)(omega ch2^B)
// with l^3 = 6 evaluated.  The sqrt(alpha^2) factors of omega and omega^3
// multiply to alpha^2, so the value is rational for every parameter.
inline QuadScalar discriminant(const ChernVector& v, const StabilityParams& p) {
  ChernVector t = twist_B(v, p.beta);
  Rational first = 6 * p.alpha_sq * t.a1;
  Rational second = 36 * p.alpha_sq * p.alpha_sq * t.a0 * (3 * t.a2) / 6;
  return QuadScalar(Rational(first * first - 2 * second));
}

// Classical Bogomolov-Gieseker inequality in normalized form:
// l(ch1^2 - 2 ch0 ch2) >= 0 becomes a1^2 - a0*a2 >= 0.
inline bool bg_classical(const ChernVector& v) {
  return sgn(Rational(v.a1 * v.a1 - v.a0 * v.a2)) >= 0;
}

// The conjectural third-degree bound ch3^B < (omega^2/2) ch1^B for
// slope-zero tilt-stable classes; strict by definition.
inline bool bg_type(const ChernVector& v, const StabilityParams& p) {
  ChernVector t = twist_B(v, p.beta);
  return t.a3 < 3 * p.alpha_sq * t.a1;
}

inline bool bg_type_weak(const ChernVector& v, const StabilityParams& p) {
  ChernVector t = twist_B(v, p.beta);
  return t.a3 <= 3 * p.alpha_sq * t.a1;
}

// Everything the reporting CLI prints for one character at one parameter.
// Fields are mutually consistent: nu's numerator is Z.im.
struct SlopeReport {
  ExtSlope mu;
  ExtSlope mu_twisted;
  ExtSlope nu;
  ExactComplex Z;
  QuadScalar disc;
};

inline SlopeReport slope_report(const ChernVector& v, const StabilityParams& p) {
  return SlopeReport{slope_mu(v), slope_mu_twisted(v, p), tilt_slope(v, p),
                     central_charge(v, p), discriminant(v, p)};
}

}  // namespace tilt3
