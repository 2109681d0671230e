#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "tilt3/stability.hpp"

namespace tilt3 {

// Where a character can sit relative to the tilted heart:
//   PositiveCh1B : omega^2 ch1^B > 0
//   TorsionLike  : omega^2 ch1^B = 0 and Im Z > 0
//   PointLike    : omega^2 ch1^B = Im Z = 0 and -Re Z > 0 (a zero-dimensional
//                  class; the only objects with such characters are finite
//                  length sheaves)
//   Inconsistent : no nonzero object of the heart can carry this character.
enum class HeartCase { PositiveCh1B, TorsionLike, PointLike, Inconsistent };

inline const char* to_string(HeartCase c) {
  switch (c) {
    case HeartCase::PositiveCh1B: return "PositiveCh1B";
    case HeartCase::TorsionLike: return "TorsionLike";
    case HeartCase::PointLike: return "PointLike";
    default: return "Inconsistent";
  }
}

inline HeartCase classify_heart(const ChernVector& v, const StabilityParams& p) {
  detail::require_nonzero(v, "heart classification");
  Rational c1 = tilt_denominator(v, p);
  TaggedCharge z = central_charge_tagged(v, p);
  if (sgn(c1) > 0) return HeartCase::PositiveCh1B;
  if (sgn(c1) == 0 && sgn(z.im_coeff) > 0) return HeartCase::TorsionLike;
  if (sgn(c1) == 0 && sgn(z.im_coeff) == 0 && sgn(z.re) < 0)
    return HeartCase::PointLike;
  return HeartCase::Inconsistent;
}

// A slope window [lo, hi] with open/closed ends.  The lower end may be
// -infinity (always open); the upper end may be +infinity, which is a
// genuine slope value (torsion classes), so "hi_open" decides whether +inf
// itself belongs to the window: (0, +inf] contains it, [0, +inf) does not.
class HNInterval {
 public:
  static HNInterval all(bool include_inf = true) {
    HNInterval i;
    i.lo_inf_ = true;
    i.hi_inf_ = true;
    i.hi_open_ = !include_inf;
    return i;
  }
  // (lo, +inf] or [lo, +inf] / [lo, +inf) etc.
  static HNInterval above(QuadScalar lo, bool lo_open, bool include_inf = true) {
    HNInterval i;
    i.lo_inf_ = false;
    i.lo_ = std::move(lo);
    i.lo_open_ = lo_open;
    i.hi_inf_ = true;
    i.hi_open_ = !include_inf;
    return i;
  }
  // (-inf, hi] or (-inf, hi)
  static HNInterval below(QuadScalar hi, bool hi_open) {
    HNInterval i;
    i.lo_inf_ = true;
    i.hi_inf_ = false;
    i.hi_ = std::move(hi);
    i.hi_open_ = hi_open;
    return i;
  }
  static HNInterval bounded(QuadScalar lo, bool lo_open, QuadScalar hi,
                            bool hi_open) {
    if (hi < lo || (lo == hi && (lo_open || hi_open)))
      throw std::invalid_argument("empty slope interval");
    HNInterval i;
    i.lo_inf_ = false;
    i.lo_ = std::move(lo);
    i.lo_open_ = lo_open;
    i.hi_inf_ = false;
    i.hi_ = std::move(hi);
    i.hi_open_ = hi_open;
    return i;
  }
  static HNInterval point(const QuadScalar& v) { return bounded(v, false, v, false); }

  // The two torsion-pair windows: slopes in (0, +inf] and (-inf, 0].
  static HNInterval positive() { return above(QuadScalar(), true, true); }
  static HNInterval nonpositive() { return below(QuadScalar(), false); }

  bool lower_infinite() const { return lo_inf_; }
  bool upper_infinite() const { return hi_inf_; }
  const QuadScalar& lower() const { return lo_; }
  const QuadScalar& upper() const { return hi_; }
  bool lower_open() const { return lo_open_; }
  bool upper_open() const { return hi_open_; }

  bool contains(const ExtSlope& s) const {
    if (s.is_infinite()) return hi_inf_ && !hi_open_;
    const QuadScalar& q = s.finite();
    if (!lo_inf_) {
      if (lo_open_ ? !(q > lo_) : !(q >= lo_)) return false;
    }
    if (!hi_inf_) {
      if (hi_open_ ? !(q < hi_) : !(q <= hi_)) return false;
    }
    return true;
  }

  // sub is contained in *this as a set.
  bool contains_interval(const HNInterval& sub) const {
    if (!lo_inf_) {
      if (sub.lo_inf_) return false;
      if (sub.lo_ < lo_) return false;
      if (sub.lo_ == lo_ && lo_open_ && !sub.lo_open_) return false;
    }
    if (hi_inf_) {
      if (hi_open_ && sub.hi_inf_ && !sub.hi_open_) return false;
    } else {
      if (sub.hi_inf_) return false;
      if (sub.hi_ > hi_) return false;
      if (sub.hi_ == hi_ && hi_open_ && !sub.hi_open_) return false;
    }
    return true;
  }

  friend bool operator==(const HNInterval& a, const HNInterval& b) {
    if (a.lo_inf_ != b.lo_inf_ || a.hi_inf_ != b.hi_inf_) return false;
    if (!a.lo_inf_ && (a.lo_ != b.lo_ || a.lo_open_ != b.lo_open_)) return false;
    if (!a.hi_inf_ && a.hi_ != b.hi_) return false;
    return a.hi_open_ == b.hi_open_;
  }

 private:
  HNInterval() = default;
  bool lo_inf_ = true;
  QuadScalar lo_;
  bool lo_open_ = true;
  bool hi_inf_ = true;
  QuadScalar hi_;
  bool hi_open_ = false;
};

// Text form: "(lo,hi]" with lo in {-inf, scalar} and hi in {scalar, +inf}.
inline std::string to_string(const HNInterval& i) {
  std::string out;
  if (i.lower_infinite()) {
    out += "(-inf";
  } else {
    out += i.lower_open() ? "(" : "[";
    out += to_string(i.lower());
  }
  out += ",";
  out += i.upper_infinite() ? std::string("+inf") : to_string(i.upper());
  out += i.upper_open() ? ")" : "]";
  return out;
}

inline HNInterval parse_interval(std::string_view text) {
  if (text.size() < 5) throw ParseError("interval too short: '" + std::string(text) + "'");
  char open_ch = text.front(), close_ch = text.back();
  if ((open_ch != '(' && open_ch != '[') || (close_ch != ')' && close_ch != ']'))
    throw ParseError("interval must be bracketed: '" + std::string(text) + "'");
  std::string_view body = text.substr(1, text.size() - 2);
  std::size_t comma = body.find(',');
  if (comma == std::string_view::npos)
    throw ParseError("interval needs a comma: '" + std::string(text) + "'");
  std::string_view lo_text = body.substr(0, comma);
  std::string_view hi_text = body.substr(comma + 1);
  bool lo_open = open_ch == '(';
  bool hi_open = close_ch == ')';
  bool lo_inf = lo_text == "-inf";
  bool hi_inf = hi_text == "+inf" || hi_text == "inf";
  if (lo_inf && !lo_open)
    throw ParseError("'-inf' end must be open in '" + std::string(text) + "'");
  if (lo_inf && hi_inf) return HNInterval::all(!hi_open);
  if (lo_inf) return HNInterval::below(parse_quad(hi_text), hi_open);
  if (hi_inf) return HNInterval::above(parse_quad(lo_text), lo_open, !hi_open);
  return HNInterval::bounded(parse_quad(lo_text), lo_open, parse_quad(hi_text), hi_open);
}

enum class SlopeKind { Mu, MuTwisted, Nu };

// Window membership of the total slope: a necessary condition for the
// extremal slopes of any filtration to fit in the window, since the total
// slope always lies between them.
inline bool interval_member(const ChernVector& v, const HNInterval& window,
                            SlopeKind which, const StabilityParams& p) {
  ExtSlope s = which == SlopeKind::Mu ? slope_mu(v)
               : which == SlopeKind::MuTwisted ? slope_mu_twisted(v, p)
                                               : tilt_slope(v, p);
  return window.contains(s);
}

// Numerical necessary conditions for the slope-zero stable classes of the
// tilted heart: heart membership with positive ch1^B and vanishing tilt
// slope.  Stability itself is object-level data the character cannot see,
// so this is a candidate test, never a decision procedure.  The stricter
// class that also asks for no extensions from skyscrapers has no further
// character-level shadow; this predicate is the closest implementable one.
inline bool sc_candidate(const ChernVector& v, const StabilityParams& p) {
  if (v.is_zero()) return false;
  if (classify_heart(v, p) != HeartCase::PositiveCh1B) return false;
  return sgn(central_charge_tagged(v, p).im_coeff) == 0;
}

// Arithmetic ledger for slope-zero classes (a1 = a2) at the distinguished
// point: F is the double-shifted transform of the untwisted class, whose
// middle entries collapse to a1 - a0, and delta is the third-degree bound
// in its equivalent integer form.
struct SlopeZeroLedger {
  ChernVector F;
  Rational delta;              // -a0 + 3 a1 - a3
  Rational two_b1_minus_b0;    // -a0 + 2 a1 - a3
  bool bg_equiv;               // bg_type(v) agrees with delta > 0
};

inline SlopeZeroLedger slope_zero_ledger(const ChernVector& v) {
  if (v.a1 != v.a2)
    throw std::invalid_argument(
        "ledger needs a1 = a2 (vanishing imaginary part at the "
        "distinguished point); got " + to_string(v));
  ChernVector F = apply({FunctorTag::shift_by(2), FunctorTag::phi(),
                         FunctorTag::tensor(-1)}, v);
  if (F.a1 != F.a2)
    throw std::logic_error("transform of an a1=a2 class lost the symmetry");
  Rational delta = -v.a0 + 3 * v.a1 - v.a3;
  Rational two_b1_minus_b0 = -v.a0 + 2 * v.a1 - v.a3;
  bool equiv = bg_type(v, StabilityParams::distinguished()) == (sgn(delta) > 0);
  return SlopeZeroLedger{F, delta, two_b1_minus_b0, equiv};
}

// Slope-bound shadows for the two cohomology pieces of a slope-zero
// tilt-semistable object.  Only the total characters are visible here; the
// per-factor bounds of the underlying filtrations are not representable.
//
// For the piece sitting in negative degree: a1 <= 0, and a1 = 0 forces
// a2 = 0.
inline bool nu0_negative_part_bound(const ChernVector& v) {
  if (sgn(v.a1) > 0) return false;
  if (sgn(v.a1) == 0 && sgn(v.a2) != 0) return false;
  return true;
}

// For the degree-zero piece of positive rank: a1 >= 2*beta*a0, and equality
// forces a1^2 = a0*a2.
inline bool nu0_positive_part_bound(const ChernVector& v, const Rational& beta) {
  Rational bound = 2 * beta * v.a0;
  if (v.a1 < bound) return false;
  if (v.a1 == bound && v.a1 * v.a1 != v.a0 * v.a2) return false;
  return true;
}

}  // namespace tilt3
