#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tilt3/constraints.hpp"
#include "tilt3/walls.hpp"

namespace tilt3 {

// Built-in verification suite: every check pins its expected values in code
// and runs at exact tolerance.  The CLI `verify` subcommand and the
// acceptance binary both print one line per check.
struct CheckResult {
  std::string name;
  bool pass;
  std::string detail;
};

namespace verify_detail {

// Self-contained xorshift generator so the sampled vectors are identical
// on every platform and run.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    state_ ^= state_ << 13;
    state_ ^= state_ >> 7;
    state_ ^= state_ << 17;
    return state_;
  }
  long range(long lo, long hi) {  // inclusive
    return lo + long(next() % std::uint64_t(hi - lo + 1));
  }

 private:
  std::uint64_t state_;
};

inline ChernVector random_vector(Rng& rng, long lo, long hi) {
  return ChernVector::of_ints(rng.range(lo, hi), rng.range(lo, hi),
                              rng.range(lo, hi), rng.range(lo, hi));
}

inline CheckResult trivial_pairs() {
  const StabilityParams p = StabilityParams::distinguished();
  const ChernVector o = ChernVector::of_ints(1, 0, 0, 0);
  const ChernVector o_shift = ChernVector::of_ints(-1, 0, 0, 0);
  const ChernVector l = ChernVector::of_ints(1, 1, 1, 1);
  bool ok = discriminant(o, p) == QuadScalar() &&
            discriminant(l, p) == QuadScalar() &&
            tilt_slope(o_shift, p) == ExtSlope(QuadScalar()) &&
            tilt_slope(l, p) == ExtSlope(QuadScalar()) &&
            slope_mu_twisted(l, p) == ExtSlope(QuadScalar(make_rational(9, 4))) &&
            slope_mu_twisted(o, p) == ExtSlope(QuadScalar(make_rational(-9, 4)));
  return {"structure-sheaf-and-twist-invariants", ok,
          "discriminants vanish, both tilt slopes are exactly 0, twisted "
          "slopes are -9/4 and 9/4"};
}

inline CheckResult functor_algebra() {
  bool ok = true;
  for (int i = 0; i < 4; ++i) {
    ChernVector e;
    (i == 0 ? e.a0 : i == 1 ? e.a1 : i == 2 ? e.a2 : e.a3) = make_rational(1);
    ok = ok && fmt_phi(fmt_phi(e)) == -e;
  }
  Rng rng(0x5eed0001);
  for (int i = 0; i < 1000 && ok; ++i) {
    ChernVector v = random_vector(rng, -100, 100);
    ok = apply({FunctorTag::psi(), FunctorTag::psi_hat()}, v) == v &&
         apply({FunctorTag::psi_hat(), FunctorTag::psi()}, v) == v;
  }
  return {"transform-involution-and-inverse-pair", ok,
          "double transform is -id on the basis; the composite pair is id "
          "on 1000 random vectors in [-100,100]^4"};
}

inline CheckResult imaginary_flip() {
  const StabilityParams p = StabilityParams::distinguished();
  Rng rng(0x5eed0002);
  bool ok = true;
  for (int i = 0; i < 1000 && ok; ++i) {
    ChernVector v = random_vector(rng, -100, 100);
    Rational im = central_charge_tagged(v, p).im_coeff;
    ok = central_charge_tagged(apply({FunctorTag::psi()}, v), p).im_coeff == -im &&
         central_charge_tagged(apply({FunctorTag::psi_hat()}, v), p).im_coeff == -im;
  }
  return {"imaginary-part-sign-flip", ok,
          "both composite transforms negate Im Z at the distinguished point "
          "on 1000 random vectors"};
}

inline CheckResult ledger_box() {
  int checked = 0;
  bool ok = true;
  for (long a0 = -6; a0 <= 6 && ok; ++a0)
    for (long a1 = -6; a1 <= 6 && ok; ++a1)
      for (long a3 = -6; a3 <= 6 && ok; ++a3) {
        ChernVector v = ChernVector::of_ints(a0, a1, a1, a3);
        SlopeZeroLedger l = slope_zero_ledger(v);
        ok = l.F.a0 == v.a3 - v.a0 && l.F.a1 == v.a1 - v.a0 &&
             l.F.a2 == l.F.a1 && l.bg_equiv &&
             l.delta == -v.a0 + 3 * v.a1 - v.a3;
        ++checked;
      }
  return {"twisted-transform-ledger-box", ok,
          std::to_string(checked) +
              " slope-zero vectors in [-6,6]^4 with matching transform "
              "entries and degree-3 bound"};
}

inline CheckResult one_dimensional_tables() {
  auto rules = builtin_rules();
  bool ok = true;
  for (long alpha = 1; alpha <= 3 && ok; ++alpha) {
    for (long beta = -3; beta <= 0 && ok; ++beta) {
      EnumOptions opts;
      opts.bound = 4;
      opts.claims = SourceClaims::wit_only({1});
      auto tables =
          enumerate_tables(ChernVector::of_ints(0, 0, alpha, beta), opts, rules);
      ok = tables.size() == 1 &&
           tables.front().parts ==
               std::map<int, ChernVector>{
                   {1, ChernVector::of_ints(-beta, alpha, 0, 0)}};
    }
    for (long beta = 1; beta <= 3 && ok; ++beta) {
      EnumOptions opts;
      opts.bound = 4;
      opts.claims = SourceClaims::wit_only({1});
      ok = enumerate_tables(ChernVector::of_ints(0, 0, alpha, beta), opts, rules)
               .empty();
    }
  }
  return {"one-dimensional-source-tables", ok,
          "degree-1 profile forces parts (-b, a, 0, 0) for b <= 0 and refutes "
          "b > 0"};
}

inline CheckResult duality_identity() {
  bool ok = true;
  for (int i = 0; i < 4; ++i) {
    ChernVector e;
    (i == 0 ? e.a0 : i == 1 ? e.a1 : i == 2 ? e.a2 : e.a3) = make_rational(1);
    ok = ok && shift(fmt_phi(derived_dual(e)), 3) == derived_dual(fmt_phi(e));
  }
  Rng rng(0x5eed0003);
  for (int i = 0; i < 1000 && ok; ++i) {
    ChernVector v = random_vector(rng, -100, 100);
    ok = shift(fmt_phi(derived_dual(v)), 3) == derived_dual(fmt_phi(v));
  }
  return {"duality-composite-identity", ok,
          "transform of the dual equals the dual of the transform after the "
          "triple shift, on the basis and 1000 random vectors"};
}

inline CheckResult double_transform_grid() {
  const ChernVector sky = ChernVector::of_ints(0, 0, 0, 1);
  std::map<std::pair<int, int>, ChernVector> good{{{3, 0}, sky}};
  bool ok = check_mukai_ss(sky, good).empty();
  for (auto [p, q] : {std::pair{0, 0}, {1, 0}, {2, 3}, {3, 3}}) {
    auto bad = good;
    bad[{p, q}] = sky;
    ok = ok && !check_mukai_ss(sky, bad).empty();
  }
  std::map<std::pair<int, int>, ChernVector> mismatch{
      {{0, 1}, ChernVector::of_ints(1, 0, 0, 0)},
      {{2, 0}, ChernVector::of_ints(0, 1, 0, 0)}};
  ok = ok && !check_mukai_ss(ChernVector(), mismatch).empty();
  return {"double-transform-grid-checks", ok,
          "corner entries must vanish, the off-corner pairs must agree, and "
          "the skyscraper grid passes"};
}

inline CheckResult rigid_class_tables() {
  auto rules = builtin_rules();
  bool ok = true;
  for (long r = 1; r <= 3 && ok; ++r)
    for (long chi : {-2L, -1L, 1L, 2L}) {
      EnumOptions opts;
      opts.bound = 4;
      opts.claims = SourceClaims::semistable();
      if (!enumerate_tables(ChernVector::of_ints(r, 0, 0, chi), opts, rules)
               .empty())
        ok = false;
    }
  for (long r = 1; r <= 3 && ok; ++r) {
    EnumOptions opts;
    opts.bound = 3;
    opts.claims = SourceClaims::semistable();
    auto tables = enumerate_tables(ChernVector::of_ints(r, 0, 0, 0), opts, rules);
    ok = !tables.empty() &&
         tables.front().parts ==
             std::map<int, ChernVector>{{3, ChernVector::of_ints(0, 0, 0, r)}};
    for (const auto& t : tables) {
      CheckOptions copts;
      copts.claims = SourceClaims::semistable();
      if (!check_table(t, rules, copts).empty()) ok = false;
    }
  }
  return {"rigid-class-tables", ok,
          "semistable (r,0,0,chi) admits no table for chi != 0; for chi = 0 "
          "the homogeneous table ranks first and all results re-check"};
}

inline CheckResult wall_geometry_checks() {
  const ChernVector o_shift = ChernVector::of_ints(-1, 0, 0, 0);
  const ChernVector l = ChernVector::of_ints(1, 1, 1, 1);

  WallPolynomial n = nu_numerator(o_shift);
  WallPolynomial expect;
  expect.coeff(1, 0) = make_rational(1);
  expect.coeff(0, 2) = make_rational(-3);
  bool ok = n == expect && contains_distinguished_point(n) &&
            contains_distinguished_point(wall_between(o_shift, l));

  const std::pair<ChernVector, ChernVector> pairs[] = {
      {o_shift, l},
      {ChernVector::of_ints(1, 2, 3, 4), ChernVector::of_ints(0, 1, 1, 3)},
  };
  for (const auto& [v, w] : pairs) {
    WallPolynomial wall = wall_between(v, w);
    for (int i = 0; i < 20 && ok; ++i) {
      Rational s = make_rational(i + 1, 6);
      for (int j = 0; j < 20 && ok; ++j) {
        Rational beta = make_rational(j - 10, 7);
        StabilityParams p(s, beta);
        if (sgn(tilt_denominator(v, p)) == 0 ||
            sgn(tilt_denominator(w, p)) == 0)
          continue;
        ok = (sgn(wall.evaluate(s, beta)) == 0) == tilt_slopes_equal(v, w, p);
      }
    }
  }
  return {"wall-geometry", ok,
          "the slope-zero wall of the shifted structure sheaf is s = 3 b^2 "
          "through (3/4, 1/2); wall roots match slope equality on a 20x20 "
          "rational grid"};
}

inline CheckResult trichotomy_box() {
  const StabilityParams p = StabilityParams::distinguished();
  bool ok = true;
  int classified = 0;
  for (long a0 = -4; a0 <= 4 && ok; ++a0)
    for (long a1 = -4; a1 <= 4 && ok; ++a1)
      for (long a2 = -4; a2 <= 4 && ok; ++a2)
        for (long a3 = -4; a3 <= 4 && ok; ++a3) {
          ChernVector v = ChernVector::of_ints(a0, a1, a2, a3);
          if (v.is_zero()) continue;
          bool c1 = 2 * a1 - a0 > 0;
          bool c2 = (2 * a1 - a0 == 0) && (a2 - a1 > 0);
          bool c3 = (2 * a1 - a0 == 0) && (a2 == a1) &&
                    (2 * a0 - 3 * a1 - 3 * a2 + 2 * a3 > 0);
          if (int(c1) + int(c2) + int(c3) > 1) {
            ok = false;
            break;
          }
          HeartCase want = c1   ? HeartCase::PositiveCh1B
                           : c2 ? HeartCase::TorsionLike
                           : c3 ? HeartCase::PointLike
                                : HeartCase::Inconsistent;
          ok = classify_heart(v, p) == want;
          ++classified;
        }
  for (long n = 1; n <= 4 && ok; ++n)
    ok = classify_heart(ChernVector::of_ints(0, 0, 0, n), p) ==
         HeartCase::PointLike;
  return {"heart-trichotomy-box", ok,
          std::to_string(classified) +
              " nonzero vectors in [-4,4]^4 land in exactly one case; point "
              "classes are point-like"};
}

}  // namespace verify_detail

inline std::vector<CheckResult> run_verification() {
  using namespace verify_detail;
  return {
      trivial_pairs(),         functor_algebra(), imaginary_flip(),
      ledger_box(),            one_dimensional_tables(), duality_identity(),
      double_transform_grid(), rigid_class_tables(),     wall_geometry_checks(),
      trichotomy_box(),
  };
}

}  // namespace tilt3
