#include "tilt3/chern.hpp"

#include <catch2/catch_amalgamated.hpp>
#include <random>

using namespace tilt3;

namespace {

ChernVector ch(long a0, long a1, long a2, long a3) {
  return ChernVector::of_ints(a0, a1, a2, a3);
}

// Independent cup-product oracle.  A class is a polynomial
// c0 + c1*l + c2*l^2 + c3*l^3 in ordinary (unnormalized) coefficients;
// multiply polynomials, truncate at degree 3, then convert back to the
// normalized basis {1, l, l^2/2, l^3/6}.
struct Poly {
  Rational c[4];
};

Poly to_poly(const ChernVector& v) {
  return Poly{{v.a0, v.a1, Rational(v.a2 / 2), Rational(v.a3 / 6)}};
}

ChernVector from_poly(const Poly& p) {
  return ChernVector(p.c[0], p.c[1], Rational(2 * p.c[2]), Rational(6 * p.c[3]));
}

Poly poly_mul(const Poly& x, const Poly& y) {
  Poly out{{Rational(0), Rational(0), Rational(0), Rational(0)}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; i + j < 4; ++j) out.c[i + j] += x.c[i] * y.c[j];
  return out;
}

// e^{t*l} truncated at degree 3, in ordinary coefficients.
Poly exp_poly(const Rational& t) {
  return Poly{{make_rational(1), t, Rational(t * t / 2), Rational(t * t * t / 6)}};
}

ChernVector oracle_twist(const ChernVector& v, const Rational& t) {
  return from_poly(poly_mul(exp_poly(t), to_poly(v)));
}

ChernVector random_vector(std::mt19937_64& rng, long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  return ch(d(rng), d(rng), d(rng), d(rng));
}

}  // namespace

TEST_CASE("transform of pinned characters") {
  CHECK(fmt_phi(ch(0, 0, 0, 1)) == ch(1, 0, 0, 0));
  CHECK(fmt_phi(ch(1, 0, 0, 0)) == ch(0, 0, 0, -1));
  CHECK(fmt_phi(ch(1, 2, 3, 4)) == ch(4, -3, 2, -1));
}

TEST_CASE("tensoring by powers of the polarization") {
  CHECK(tensor_L(ch(1, 0, 0, 0), 1) == ch(1, 1, 1, 1));
  CHECK(tensor_L(ch(1, 1, 1, 1), -1) == ch(1, 0, 0, 0));
  CHECK(tensor_L(ch(1, 2, 3, 4), -1) == ch(1, 1, 0, 0));

  // Cross-check the closed form against the polynomial oracle.
  std::mt19937_64 rng(555);
  for (int i = 0; i < 300; ++i) {
    ChernVector v = random_vector(rng, -20, 20);
    std::uniform_int_distribution<long> kd(-4, 4);
    long k = kd(rng);
    CHECK(tensor_L(v, k) == oracle_twist(v, make_rational(k)));
  }
}

TEST_CASE("shift and derived dual") {
  CHECK(shift(ch(1, 0, 0, 0), 1) == ch(-1, 0, 0, 0));
  CHECK(shift(ch(1, 0, 0, 0), 2) == ch(1, 0, 0, 0));
  CHECK(shift(ch(0, 0, 0, 1), 3) == ch(0, 0, 0, -1));
  CHECK(shift(ch(1, 2, 3, 4), -1) == -ch(1, 2, 3, 4));

  CHECK(derived_dual(ch(1, 0, 0, 0)) == ch(-1, 0, 0, 0));
  CHECK(derived_dual(ch(1, 1, 1, 1)) == ch(-1, 1, -1, 1));
  CHECK(derived_dual(ch(0, 0, 1, 0)) == ch(0, 0, -1, 0));
}

TEST_CASE("pipelines compose with the rightmost tag first") {
  CHECK(apply({FunctorTag::phi(), FunctorTag::phi()}, ch(1, 2, 3, 4)) ==
        ch(-1, -2, -3, -4));
  CHECK(apply({FunctorTag::psi(), FunctorTag::psi_hat()}, ch(1, 2, 3, 4)) ==
        ch(1, 2, 3, 4));
  // Chain check: tensor(-1) then phi then shift(1).
  CHECK(apply({FunctorTag::psi_hat()}, ch(1, 1, 1, 1)) == ch(0, 0, 0, 1));
  CHECK(apply({FunctorTag::shift_by(1), FunctorTag::phi(), FunctorTag::tensor(-1)},
              ch(1, 1, 1, 1)) == ch(0, 0, 0, 1));
}

TEST_CASE("middle entries of the composite transforms") {
  // ch(Psi v) = (*, a3 - a2, a3 - 2 a2 + a1, *) and
  // ch(PsiHat v) = (*, a2 - 2 a1 + a0, -a1 + a0, *).
  std::mt19937_64 rng(8080);
  for (int i = 0; i < 500; ++i) {
    ChernVector v = random_vector(rng, -30, 30);
    ChernVector up = apply({FunctorTag::psi()}, v);
    CHECK(up.a1 == v.a3 - v.a2);
    CHECK(up.a2 == v.a3 - 2 * v.a2 + v.a1);
    ChernVector down = apply({FunctorTag::psi_hat()}, v);
    CHECK(down.a1 == v.a2 - 2 * v.a1 + v.a0);
    CHECK(down.a2 == -v.a1 + v.a0);
  }
}

TEST_CASE("functor algebra identities") {
  const ChernVector basis[4] = {ch(1, 0, 0, 0), ch(0, 1, 0, 0), ch(0, 0, 1, 0),
                                ch(0, 0, 0, 1)};
  for (const auto& e : basis) {
    CHECK(fmt_phi(fmt_phi(e)) == -e);
    CHECK(fmt_phi(fmt_phi(fmt_phi(fmt_phi(e)))) == e);
    CHECK(derived_dual(derived_dual(e)) == e);
  }

  std::mt19937_64 rng(424242);
  for (int i = 0; i < 1000; ++i) {
    ChernVector v = random_vector(rng, -100, 100);
    CHECK(apply({FunctorTag::psi(), FunctorTag::psi_hat()}, v) == v);
    CHECK(apply({FunctorTag::psi_hat(), FunctorTag::psi()}, v) == v);
    CHECK(derived_dual(derived_dual(v)) == v);
    std::uniform_int_distribution<long> kd(-5, 5);
    long j = kd(rng), k = kd(rng);
    CHECK(tensor_L(tensor_L(v, j), k) == tensor_L(v, j + k));
  }
}

TEST_CASE("character text and pipeline parsing") {
  CHECK(to_string(ch(4, -3, 2, -1)) == "4,-3,2,-1");
  CHECK(parse_chern("1,2,3,4") == ch(1, 2, 3, 4));
  CHECK(parse_chern("1/2,-3,0,7/3") ==
        ChernVector(make_rational(1, 2), make_rational(-3), make_rational(0),
                    make_rational(7, 3)));
  CHECK(parse_chern(to_string(parse_chern("-5/2,1,0,9"))) == parse_chern("-5/2,1,0,9"));
  CHECK_THROWS_AS(parse_chern("1,2,3"), ParseError);
  CHECK_THROWS_AS(parse_chern("1,2,3,4,5"), ParseError);
  CHECK_THROWS_AS(parse_chern("1,2,x,4"), ParseError);

  auto tags = parse_functor_tags("shift:1,phi,tensor:-1");
  CHECK(tags.size() == 3);
  CHECK(apply(std::span<const FunctorTag>(tags), ch(1, 1, 1, 1)) == ch(0, 0, 0, 1));
  CHECK(parse_functor_tags("psi")[0] == FunctorTag::psi());
  CHECK_THROWS_AS(parse_functor_tags("frobenius"), ParseError);
  CHECK_THROWS_AS(parse_functor_tags("shift"), ParseError);
  CHECK_THROWS_AS(parse_functor_tags("phi:2"), ParseError);
}
