#include "tilt3/heart.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace tilt3;

namespace {

ChernVector ch(long a0, long a1, long a2, long a3) {
  return ChernVector::of_ints(a0, a1, a2, a3);
}

const StabilityParams kDist = StabilityParams::distinguished();

QuadScalar q(long pr, long qr = 1) { return QuadScalar(make_rational(pr, qr)); }

}  // namespace

TEST_CASE("classification of pinned characters") {
  CHECK(classify_heart(ch(0, 0, 0, 5), kDist) == HeartCase::PointLike);
  CHECK(classify_heart(ch(1, 1, 1, 1), kDist) == HeartCase::PositiveCh1B);
  CHECK(classify_heart(ch(0, 0, -1, 0), kDist) == HeartCase::Inconsistent);
  CHECK(classify_heart(ch(0, 0, 1, 0), kDist) == HeartCase::TorsionLike);
  CHECK(classify_heart(ch(-1, 0, 0, 0), kDist) == HeartCase::PositiveCh1B);
  CHECK(classify_heart(ch(0, 0, 0, -1), kDist) == HeartCase::Inconsistent);
  CHECK_THROWS_AS(classify_heart(ChernVector(), kDist), std::invalid_argument);
}

TEST_CASE("the three defining conditions are exclusive and exhaustive") {
  int point_like = 0;
  for (long a0 = -4; a0 <= 4; ++a0)
    for (long a1 = -4; a1 <= 4; ++a1)
      for (long a2 = -4; a2 <= 4; ++a2)
        for (long a3 = -4; a3 <= 4; ++a3) {
          ChernVector v = ch(a0, a1, a2, a3);
          if (v.is_zero()) continue;
          // Independent evaluation of the three conditions at (3/4, 1/2):
          // omega^2 ch1^B > 0 iff 2 a1 - a0 > 0; Im Z sign is sign(a2 - a1);
          // -Re Z > 0 iff 2 a0 - 3 a1 - 3 a2 + 2 a3 > 0.
          bool c1 = 2 * a1 - a0 > 0;
          bool c2 = (2 * a1 - a0 == 0) && (a2 - a1 > 0);
          bool c3 = (2 * a1 - a0 == 0) && (a2 == a1) &&
                    (2 * a0 - 3 * a1 - 3 * a2 + 2 * a3 > 0);
          CHECK(int(c1) + int(c2) + int(c3) <= 1);
          HeartCase got = classify_heart(v, kDist);
          HeartCase want = c1   ? HeartCase::PositiveCh1B
                           : c2 ? HeartCase::TorsionLike
                           : c3 ? HeartCase::PointLike
                                : HeartCase::Inconsistent;
          CHECK(got == want);
          if (got == HeartCase::PointLike) ++point_like;
        }
  CHECK(point_like > 0);
  for (long n = 1; n <= 4; ++n)
    CHECK(classify_heart(ch(0, 0, 0, n), kDist) == HeartCase::PointLike);
}

TEST_CASE("interval membership of slopes") {
  HNInterval f0 = HNInterval::nonpositive();
  HNInterval t0 = HNInterval::positive();
  CHECK(interval_member(ch(1, 0, 0, 0), f0, SlopeKind::MuTwisted, kDist));
  CHECK(interval_member(ch(1, 1, 1, 1), t0, SlopeKind::MuTwisted, kDist));
  CHECK(interval_member(ch(0, 0, 1, 0), t0, SlopeKind::MuTwisted, kDist));
  CHECK(!interval_member(ch(0, 0, 1, 0), f0, SlopeKind::MuTwisted, kDist));
  CHECK(interval_member(ch(1, 1, 1, 1), HNInterval::point(QuadScalar()),
                        SlopeKind::Nu, kDist));
  CHECK(interval_member(ch(2, 1, 0, 0), HNInterval::point(q(1, 2)),
                        SlopeKind::Mu, kDist));

  HNInterval half_open = HNInterval::bounded(q(0), false, q(1), true);  // [0,1)
  CHECK(interval_member(ch(1, 0, 3, 0), half_open, SlopeKind::Mu, kDist));
  CHECK(!interval_member(ch(1, 1, 3, 0), half_open, SlopeKind::Mu, kDist));

  HNInterval no_inf = HNInterval::above(q(0), false, false);  // [0, +inf)
  CHECK(!interval_member(ch(0, 0, 0, 1), no_inf, SlopeKind::Mu, kDist));
  CHECK(interval_member(ch(0, 0, 0, 1), t0, SlopeKind::Mu, kDist));
}

TEST_CASE("interval containment") {
  HNInterval all = HNInterval::all();
  HNInterval t0 = HNInterval::positive();
  HNInterval f0 = HNInterval::nonpositive();
  HNInterval unit = HNInterval::bounded(q(0), true, q(1), false);   // (0,1]
  HNInterval neg_unit = HNInterval::bounded(q(-1), false, q(0), false);  // [-1,0]
  HNInterval zero = HNInterval::point(q(0));

  CHECK(all.contains_interval(t0));
  CHECK(all.contains_interval(f0));
  CHECK(t0.contains_interval(unit));
  CHECK(!f0.contains_interval(unit));
  CHECK(f0.contains_interval(zero));
  CHECK(!t0.contains_interval(zero));
  CHECK(neg_unit.contains_interval(zero));
  CHECK(!unit.contains_interval(zero));
  CHECK(HNInterval::above(q(0), false, false).contains_interval(zero));
  CHECK(!HNInterval::all(false).contains_interval(all));
  CHECK(all.contains_interval(HNInterval::all(false)));
  CHECK_THROWS_AS(HNInterval::bounded(q(1), false, q(0), false),
                  std::invalid_argument);
  CHECK_THROWS_AS(HNInterval::bounded(q(0), true, q(0), false),
                  std::invalid_argument);

  // Containment is compatible with membership: a slope inside a
  // subinterval is inside every superinterval.
  const HNInterval intervals[] = {
      all, t0, f0, unit, neg_unit, zero,
      HNInterval::above(q(1, 2), false, true),
      HNInterval::below(q(-1, 2), false),
      HNInterval::all(false),
      HNInterval::bounded(q(-2), true, q(3, 2), true),
  };
  const ExtSlope probes[] = {
      ExtSlope(q(-3)),    ExtSlope(q(-1)),   ExtSlope(q(-1, 2)),
      ExtSlope(q(0)),     ExtSlope(q(1, 2)), ExtSlope(q(1)),
      ExtSlope(q(3, 2)),  ExtSlope(q(2)),    ExtSlope::infinity(),
  };
  for (const auto& big : intervals)
    for (const auto& small : intervals) {
      if (!big.contains_interval(small)) continue;
      for (const auto& x : probes)
        if (small.contains(x)) CHECK(big.contains(x));
    }
}

TEST_CASE("interval text round trip") {
  CHECK(to_string(HNInterval::positive()) == "(0,+inf]");
  CHECK(to_string(HNInterval::nonpositive()) == "(-inf,0]");
  CHECK(parse_interval("(0,+inf]") == HNInterval::positive());
  CHECK(parse_interval("(-inf,0]") == HNInterval::nonpositive());
  CHECK(parse_interval("[0,+inf)") == HNInterval::above(q(0), false, false));
  CHECK(parse_interval("(0,1]") == HNInterval::bounded(q(0), true, q(1), false));
  CHECK(parse_interval("[-1,0]") ==
        HNInterval::bounded(q(-1), false, q(0), false));
  CHECK(parse_interval("(-inf,-1/2]") == HNInterval::below(q(-1, 2), false));
  CHECK(parse_interval("[1/2,+inf]") == HNInterval::above(q(1, 2), false, true));
  CHECK(parse_interval(to_string(parse_interval("(-3/2,7/5)"))) ==
        parse_interval("(-3/2,7/5)"));
  CHECK_THROWS_AS(parse_interval("0,1"), ParseError);
  CHECK_THROWS_AS(parse_interval("[-inf,0]"), ParseError);
  CHECK_THROWS_AS(parse_interval("(1,0)"), std::invalid_argument);
}

TEST_CASE("slope-zero candidates") {
  CHECK(sc_candidate(ch(-1, 0, 0, 0), kDist));
  CHECK(sc_candidate(ch(1, 1, 1, 1), kDist));
  CHECK(!sc_candidate(ch(0, 0, 0, 1), kDist));
  CHECK(!sc_candidate(ch(1, 0, 0, 0), kDist));  // negative ch1^B
  CHECK(!sc_candidate(ch(1, 2, 3, 4), kDist));  // nonzero tilt slope
  CHECK(!sc_candidate(ChernVector(), kDist));
  // Candidates always have a positive denominator for the degree-3 bound.
  for (long a0 = -3; a0 <= 3; ++a0)
    for (long a1 = -3; a1 <= 3; ++a1)
      for (long a2 = -3; a2 <= 3; ++a2)
        for (long a3 = -3; a3 <= 3; ++a3) {
          ChernVector v = ch(a0, a1, a2, a3);
          if (v.is_zero() || !sc_candidate(v, kDist)) continue;
          CHECK(sgn(tilt_denominator(v, kDist)) > 0);
        }
}

TEST_CASE("slope-zero transform ledger") {
  SlopeZeroLedger l1 = slope_zero_ledger(ch(1, 2, 2, 3));
  CHECK(l1.F == ch(2, 1, 1, -1));
  CHECK(l1.delta == make_rational(2));
  CHECK(l1.two_b1_minus_b0 == make_rational(0));
  CHECK(l1.bg_equiv);

  SlopeZeroLedger l2 = slope_zero_ledger(ch(-1, 0, 0, 0));
  CHECK(l2.F == ch(1, 1, 1, 1));
  CHECK(l2.F.a0 == make_rational(1));  // a3 - a0
  CHECK(l2.delta == make_rational(1));

  SlopeZeroLedger l3 = slope_zero_ledger(ch(1, 1, 1, 1));
  CHECK(l3.delta == make_rational(1));
  CHECK(l3.F.a0 == make_rational(0));
  CHECK(l3.F.a1 == make_rational(0));
  CHECK(l3.F.a2 == make_rational(0));

  CHECK_THROWS_AS(slope_zero_ledger(ch(1, 2, 3, 4)), std::invalid_argument);

  // Over the box: F.a0 = a3 - a0, F.a1 = F.a2 = a1 - a0, and the degree-3
  // bound matches the sign of delta.
  for (long a0 = -6; a0 <= 6; ++a0)
    for (long a1 = -6; a1 <= 6; ++a1)
      for (long a3 = -6; a3 <= 6; ++a3) {
        ChernVector v = ch(a0, a1, a1, a3);
        SlopeZeroLedger l = slope_zero_ledger(v);
        CHECK(l.F.a0 == v.a3 - v.a0);
        CHECK(l.F.a1 == v.a1 - v.a0);
        CHECK(l.F.a2 == l.F.a1);
        CHECK(l.bg_equiv);
      }
}

TEST_CASE("slope-zero cohomology bounds") {
  CHECK(nu0_negative_part_bound(ch(2, -1, 3, 0)));
  CHECK(nu0_negative_part_bound(ch(2, 0, 0, 5)));
  CHECK(!nu0_negative_part_bound(ch(2, 0, 1, 0)));
  CHECK(!nu0_negative_part_bound(ch(2, 1, 0, 0)));

  Rational half = make_rational(1, 2);
  CHECK(nu0_positive_part_bound(ch(1, 2, 3, 0), half));
  CHECK(nu0_positive_part_bound(ch(1, 1, 1, 0), half));   // equality, a1^2 = a0 a2
  CHECK(!nu0_positive_part_bound(ch(1, 1, 2, 0), half));  // equality, a1^2 != a0 a2
  CHECK(!nu0_positive_part_bound(ch(2, 1, 0, 0), half));
}
