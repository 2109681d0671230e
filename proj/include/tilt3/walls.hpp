#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "tilt3/stability.hpp"

namespace tilt3 {

// Polynomial in the parameter-plane coordinates (s, beta) = (alpha^2, beta),
// at most linear in s and cubic in beta.  Tilt-slope equalities live on
// such loci: the common sqrt(s) factor of both slopes cancels, so the wall
// equations are honestly rational.
class WallPolynomial {
 public:
  WallPolynomial() {
    for (auto& row : c_)
      for (auto& v : row) v = make_rational(0);
  }

  const Rational& coeff(int s_deg, int beta_deg) const {
    return c_[s_deg][beta_deg];
  }
  Rational& coeff(int s_deg, int beta_deg) { return c_[s_deg][beta_deg]; }

  bool is_zero() const {
    for (const auto& row : c_)
      for (const auto& v : row)
        if (sgn(v) != 0) return false;
    return true;
  }

  bool degenerate() const { return degenerate_; }
  void mark_degenerate() { degenerate_ = true; }

  Rational evaluate(const Rational& s, const Rational& beta) const {
    Rational beta_pow(1), acc(0);
    for (int j = 0; j < 4; ++j) {
      acc += (c_[0][j] + s * c_[1][j]) * beta_pow;
      beta_pow *= beta;
    }
    return acc;
  }

  WallPolynomial operator-() const {
    WallPolynomial out = *this;
    for (auto& row : out.c_)
      for (auto& v : row) v = -v;
    return out;
  }

  friend WallPolynomial operator-(const WallPolynomial& a, const WallPolynomial& b) {
    WallPolynomial out;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 4; ++j) out.c_[i][j] = a.c_[i][j] - b.c_[i][j];
    out.degenerate_ = a.degenerate_ || b.degenerate_;
    return out;
  }

  friend bool operator==(const WallPolynomial& a, const WallPolynomial& b) {
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 4; ++j)
        if (a.c_[i][j] != b.c_[i][j]) return false;
    return true;
  }

 private:
  // c_[i][j] multiplies s^i * beta^j.
  std::array<std::array<Rational, 4>, 2> c_;
  bool degenerate_ = false;
};

// Numerator of the tilt slope as a polynomial on the parameter plane, with
// the global sqrt(s) factor divided out and l^3 = 6 evaluated:
//   N(v) = 3 a2 - 6 beta a1 + 3 beta^2 a0 - s a0,
// so that nu(v) = sqrt(s) N(v) / (6 s (a1 - beta a0)).
inline WallPolynomial nu_numerator(const ChernVector& v) {
  WallPolynomial n;
  n.coeff(0, 0) = 3 * v.a2;
  n.coeff(0, 1) = -6 * v.a1;
  n.coeff(0, 2) = 3 * v.a0;
  n.coeff(1, 0) = -v.a0;
  return n;
}

// Linear factor of the tilt-slope denominator: a1 - beta a0.  The positive
// factor 6s is common to both sides of every wall equation and is dropped.
inline WallPolynomial nu_denominator_linear(const ChernVector& v) {
  WallPolynomial d;
  d.coeff(0, 0) = v.a1;
  d.coeff(0, 1) = -v.a0;
  return d;
}

namespace detail {
// Product of a numerator (linear in s) with a beta-linear factor.
inline WallPolynomial mul_linear(const WallPolynomial& n, const WallPolynomial& l) {
  WallPolynomial out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 3; ++j) {
      out.coeff(i, j) += n.coeff(i, j) * l.coeff(0, 0);
      out.coeff(i, j + 1) += n.coeff(i, j) * l.coeff(0, 1);
    }
  return out;
}
}  // namespace detail

// The wall of v against w: N(v) D(w) - N(w) D(v) with D the beta-linear
// denominator factor.  Its vanishing locus is where the two tilt slopes
// agree and are finite.  When one denominator factor vanishes identically
// (a torsion-like class of slope +inf everywhere) the polynomial
// degenerates and is flagged; the convention for such vertical walls is
// the surviving product term.
inline WallPolynomial wall_between(const ChernVector& v, const ChernVector& w) {
  detail::require_nonzero(v, "wall");
  detail::require_nonzero(w, "wall");
  WallPolynomial dv = nu_denominator_linear(v);
  WallPolynomial dw = nu_denominator_linear(w);
  WallPolynomial out =
      detail::mul_linear(nu_numerator(v), dw) - detail::mul_linear(nu_numerator(w), dv);
  if (dv.is_zero() || dw.is_zero()) out.mark_degenerate();
  return out;
}

// Exact evaluation at the distinguished point (s, beta) = (3/4, 1/2).
inline bool contains_distinguished_point(const WallPolynomial& wall) {
  return sgn(wall.evaluate(make_rational(3, 4), make_rational(1, 2))) == 0;
}

// One sampled wall point: for fixed beta the wall equation is linear in s.
// `all_s` marks a beta where the equation vanishes identically.
struct WallSample {
  Rational beta;
  std::optional<Rational> s;
  bool all_s = false;
};

// Solves the wall equation on a uniform beta grid with steps+1 nodes.
// Rows with no solution at nonnegative s are dropped; nonnegative roots
// are kept, including the s = 0 boundary of the parameter cone.
inline std::vector<WallSample> sample_wall(const WallPolynomial& wall,
                                           const Rational& beta_lo,
                                           const Rational& beta_hi, int steps) {
  if (steps < 1) throw std::invalid_argument("need at least one step");
  std::vector<WallSample> out;
  Rational span = beta_hi - beta_lo;
  for (int i = 0; i <= steps; ++i) {
    Rational beta = beta_lo + span * make_rational(i, steps);
    Rational lin(0), con(0);
    Rational beta_pow(1);
    for (int j = 0; j < 4; ++j) {
      con += wall.coeff(0, j) * beta_pow;
      lin += wall.coeff(1, j) * beta_pow;
      beta_pow *= beta;
    }
    if (sgn(lin) == 0) {
      if (sgn(con) == 0) out.push_back({beta, std::nullopt, true});
      continue;
    }
    Rational root = -con / lin;
    if (sgn(root) >= 0) out.push_back({beta, root, false});
  }
  return out;
}

}  // namespace tilt3
