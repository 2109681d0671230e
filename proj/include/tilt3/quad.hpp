#pragma once

#include <cassert>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "tilt3/rational.hpp"

namespace tilt3 {

// Element of Q(sqrt 3), stored as rat + irr*sqrt(3) with exact rational
// coefficients.  Since sqrt(3) is irrational, rat + irr*sqrt(3) = 0 iff
// rat = irr = 0, so structural equality on canonical coefficients is value
// equality.
class QuadScalar {
 public:
  QuadScalar() : rat_(0), irr_(0) {}
  QuadScalar(Rational r) : rat_(std::move(r)), irr_(0) {}
  QuadScalar(long r) : rat_(make_rational(r)), irr_(0) {}
  QuadScalar(Rational r, Rational i) : rat_(std::move(r)), irr_(std::move(i)) {}

  static QuadScalar sqrt3() { return QuadScalar(make_rational(0), make_rational(1)); }

  const Rational& rat() const { return rat_; }
  const Rational& irr() const { return irr_; }

  bool is_zero() const { return sgn(rat_) == 0 && sgn(irr_) == 0; }
  bool is_rational() const { return sgn(irr_) == 0; }

  friend QuadScalar operator+(const QuadScalar& a, const QuadScalar& b) {
    return QuadScalar(a.rat_ + b.rat_, a.irr_ + b.irr_);
  }
  friend QuadScalar operator-(const QuadScalar& a, const QuadScalar& b) {
    return QuadScalar(a.rat_ - b.rat_, a.irr_ - b.irr_);
  }
  QuadScalar operator-() const { return QuadScalar(-rat_, -irr_); }

  // (a + b*s3)(c + d*s3) = (ac + 3bd) + (ad + bc)*s3
  friend QuadScalar operator*(const QuadScalar& a, const QuadScalar& b) {
    return QuadScalar(a.rat_ * b.rat_ + 3 * a.irr_ * b.irr_,
                      a.rat_ * b.irr_ + a.irr_ * b.rat_);
  }

  // 1/(a + b*s3) = (a - b*s3) / (a^2 - 3 b^2)
  QuadScalar inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    Rational norm = rat_ * rat_ - 3 * irr_ * irr_;
    return QuadScalar(rat_ / norm, -irr_ / norm);
  }

  friend QuadScalar operator/(const QuadScalar& a, const QuadScalar& b) {
    return a * b.inverse();
  }

  QuadScalar& operator+=(const QuadScalar& o) { return *this = *this + o; }
  QuadScalar& operator-=(const QuadScalar& o) { return *this = *this - o; }
  QuadScalar& operator*=(const QuadScalar& o) { return *this = *this * o; }

  // Exact sign of the real number rat + irr*sqrt(3).  When the two terms
  // have opposite signs, compare rat^2 against 3*irr^2; they can never be
  // equal for nonzero rationals.
  int sign() const {
    int sa = sgn(rat_);
    int sb = sgn(irr_);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    int c = cmp(Rational(rat_ * rat_), Rational(3 * irr_ * irr_));
    assert(c != 0);
    return c > 0 ? sa : sb;
  }

  friend bool operator==(const QuadScalar& a, const QuadScalar& b) {
    return a.rat_ == b.rat_ && a.irr_ == b.irr_;
  }
  friend bool operator!=(const QuadScalar& a, const QuadScalar& b) {
    return !(a == b);
  }
  friend bool operator<(const QuadScalar& a, const QuadScalar& b) {
    return (a - b).sign() < 0;
  }
  friend bool operator>(const QuadScalar& a, const QuadScalar& b) { return b < a; }
  friend bool operator<=(const QuadScalar& a, const QuadScalar& b) { return !(b < a); }
  friend bool operator>=(const QuadScalar& a, const QuadScalar& b) { return !(a < b); }

  // Display only; never used in any predicate.
  double to_double() const {
    return tilt3::to_double(rat_) + tilt3::to_double(irr_) * std::sqrt(3.0);
  }

 private:
  Rational rat_, irr_;
};

inline int sign(const QuadScalar& x) { return x.sign(); }

// Canonical text form: "p/q" or "p/q+r/s*s3" / "p/q-r/s*s3", no whitespace.
inline std::string to_string(const QuadScalar& x) {
  if (x.is_rational()) return to_string(x.rat());
  std::string out = to_string(x.rat());
  Rational a = abs(x.irr());
  out += sgn(x.irr()) < 0 ? '-' : '+';
  out += to_string(a);
  out += "*s3";
  return out;
}

// Accepts "R", "R+R'*s3", "R-R'*s3" and "R*s3", where R is a signed rational
// and R' an unsigned one.  Round-trips to_string exactly.
inline QuadScalar parse_quad(std::string_view text) {
  std::size_t pos = 0;
  Rational first = detail::parse_rational_at(text, pos);
  if (pos == text.size()) return QuadScalar(first);
  if (text.compare(pos, 3, "*s3") == 0 && pos + 3 == text.size())
    return QuadScalar(make_rational(0), first);
  if (text[pos] != '+' && text[pos] != '-')
    throw ParseError("expected '+', '-' or '*s3' in scalar '" +
                     std::string(text) + "'");
  bool negate = text[pos] == '-';
  ++pos;
  Rational second = detail::parse_rational_at(text, pos);
  if (text.compare(pos, 3, "*s3") != 0 || pos + 3 != text.size())
    throw ParseError("expected '*s3' at end of scalar '" + std::string(text) +
                     "'");
  if (negate) second = -second;
  return QuadScalar(first, second);
}

// A slope value: either a finite element of Q(sqrt 3) or +infinity (the
// slope of torsion classes).  +infinity compares greater than everything.
class ExtSlope {
 public:
  ExtSlope(QuadScalar v) : value_(std::move(v)) {}
  ExtSlope(Rational v) : value_(QuadScalar(std::move(v))) {}
  ExtSlope(long v) : value_(QuadScalar(v)) {}

  static ExtSlope infinity() { return ExtSlope(); }

  bool is_infinite() const { return !value_.has_value(); }
  const QuadScalar& finite() const {
    if (!value_) throw std::logic_error("slope is +inf");
    return *value_;
  }

  friend bool operator==(const ExtSlope& a, const ExtSlope& b) {
    if (a.is_infinite() || b.is_infinite())
      return a.is_infinite() == b.is_infinite();
    return *a.value_ == *b.value_;
  }
  friend bool operator!=(const ExtSlope& a, const ExtSlope& b) { return !(a == b); }
  friend bool operator<(const ExtSlope& a, const ExtSlope& b) {
    if (a.is_infinite()) return false;
    if (b.is_infinite()) return true;
    return *a.value_ < *b.value_;
  }
  friend bool operator>(const ExtSlope& a, const ExtSlope& b) { return b < a; }
  friend bool operator<=(const ExtSlope& a, const ExtSlope& b) { return !(b < a); }
  friend bool operator>=(const ExtSlope& a, const ExtSlope& b) { return !(a < b); }

 private:
  ExtSlope() : value_(std::nullopt) {}
  std::optional<QuadScalar> value_;
};

inline std::string to_string(const ExtSlope& s) {
  return s.is_infinite() ? "+inf" : to_string(s.finite());
}

inline ExtSlope parse_ext_slope(std::string_view text) {
  if (text == "+inf" || text == "inf") return ExtSlope::infinity();
  return ExtSlope(parse_quad(text));
}

// Exact complex value; only the component arithmetic the central charge
// needs, never magnitudes or arguments.
struct ExactComplex {
  QuadScalar re, im;

  friend bool operator==(const ExactComplex& a, const ExactComplex& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const ExactComplex& a, const ExactComplex& b) {
    return !(a == b);
  }
  friend ExactComplex operator+(const ExactComplex& a, const ExactComplex& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend ExactComplex operator-(const ExactComplex& a, const ExactComplex& b) {
    return {a.re - b.re, a.im - b.im};
  }
  ExactComplex operator-() const { return {-re, -im}; }
};

}  // namespace tilt3
