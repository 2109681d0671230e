#include "tilt3/quad.hpp"

#include <catch2/catch_amalgamated.hpp>
#include <cmath>
#include <random>
#include <vector>

using namespace tilt3;

namespace {
QuadScalar q(long pr, long qr, long pi = 0, long qi = 1) {
  return QuadScalar(make_rational(pr, qr), make_rational(pi, qi));
}
}  // namespace

TEST_CASE("field operations on pinned values") {
  // (1 + s3)(1 - s3) = 1 - 3 = -2
  CHECK(q(1, 1, 1, 1) * q(1, 1, -1, 1) == q(-2, 1));
  // 1/s3 = s3/3
  CHECK(QuadScalar::sqrt3().inverse() == q(0, 1, 1, 3));
  CHECK(q(1, 2) + q(-1, 2, 3, 4) == q(0, 1, 3, 4));
  CHECK_THROWS_AS(QuadScalar().inverse(), DivisionByZero);
  CHECK_THROWS_AS(q(1, 1) / QuadScalar(), DivisionByZero);
}

TEST_CASE("exact sign") {
  CHECK(q(-2, 1, 1, 1).sign() == -1);  // s3 < 2
  CHECK(q(-5, 3, 1, 1).sign() == 1);   // 25/9 < 3
  CHECK(QuadScalar().sign() == 0);
  CHECK(q(5, 3, -1, 1).sign() == -1);
  CHECK(q(2, 1, -1, 1).sign() == 1);
  CHECK(q(0, 1, -1, 2).sign() == -1);
  CHECK(q(7, 4).sign() == 1);
}

TEST_CASE("multiplicative inverse on random values") {
  std::mt19937_64 rng(20240131);
  std::uniform_int_distribution<long> num(-400, 400);
  std::uniform_int_distribution<long> den(1, 60);
  const QuadScalar one(make_rational(1));
  int checked = 0;
  for (int i = 0; i < 10000; ++i) {
    QuadScalar x(make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng)));
    if (x.is_zero()) continue;
    CHECK(x * x.inverse() == one);
    ++checked;
  }
  CHECK(checked > 9900);
}

TEST_CASE("sign agrees with a double evaluation away from zero") {
  std::mt19937_64 rng(987654);
  std::uniform_int_distribution<long> num(-1000, 1000);
  std::uniform_int_distribution<long> den(1, 100);
  for (int i = 0; i < 5000; ++i) {
    QuadScalar x(make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng)));
    double approx = x.to_double();
    if (std::abs(approx) <= 1e-6) continue;
    CHECK(x.sign() == (approx > 0 ? 1 : -1));
  }
}

TEST_CASE("order is compatible with multiplication by positives") {
  std::vector<QuadScalar> grid;
  const long vals[][2] = {{-3, 2}, {-1, 1}, {0, 1}, {1, 2}, {1, 1}, {2, 1}};
  for (auto [pn, pd] : vals)
    for (auto [in, id] : vals)
      grid.push_back(QuadScalar(make_rational(pn, pd), make_rational(in, id)));
  for (const auto& x : grid)
    for (const auto& y : grid) {
      if (!(x < y)) continue;
      for (const auto& z : grid) {
        if (z.sign() <= 0) continue;
        CHECK(x * z < y * z);
      }
    }
}

TEST_CASE("text round trip") {
  CHECK(to_string(q(3, 4, 1, 2)) == "3/4+1/2*s3");
  CHECK(to_string(q(0, 1, 1, 3)) == "0+1/3*s3");
  CHECK(to_string(q(-2, 1)) == "-2");
  CHECK(to_string(q(1, 2, -5, 7)) == "1/2-5/7*s3");
  CHECK(parse_quad("3/4+1/2*s3") == q(3, 4, 1, 2));
  CHECK(parse_quad("1/2-5/7*s3") == q(1, 2, -5, 7));
  CHECK(parse_quad("-5") == q(-5, 1));
  CHECK(parse_quad("-1/3*s3") == q(0, 1, -1, 3));
  CHECK(parse_quad("2*s3") == q(0, 1, 2, 1));

  std::mt19937_64 rng(31337);
  std::uniform_int_distribution<long> num(-500, 500);
  std::uniform_int_distribution<long> den(1, 90);
  for (int i = 0; i < 2000; ++i) {
    QuadScalar x(make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng)));
    CHECK(parse_quad(to_string(x)) == x);
  }

  CHECK_THROWS_AS(parse_quad(""), ParseError);
  CHECK_THROWS_AS(parse_quad("1/"), ParseError);
  CHECK_THROWS_AS(parse_quad("1+2"), ParseError);
  CHECK_THROWS_AS(parse_quad("1+2*s3junk"), ParseError);
  CHECK_THROWS_AS(parse_quad("s3"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/0"), DivisionByZero);
}

TEST_CASE("extended slopes order with +inf on top") {
  ExtSlope inf = ExtSlope::infinity();
  ExtSlope a(q(1, 2)), b(q(0, 1, 1, 1));
  CHECK(a < b);  // 1/2 < s3
  CHECK(a < inf);
  CHECK(b < inf);
  CHECK(inf == ExtSlope::infinity());
  CHECK(!(inf < inf));
  CHECK(inf >= b);
  CHECK(to_string(inf) == "+inf");
  CHECK(parse_ext_slope("+inf") == inf);
  CHECK(parse_ext_slope("1/2") == a);
  CHECK_THROWS_AS(inf.finite(), std::logic_error);
}
