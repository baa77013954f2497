#include <doctest.h>

#include "gfl/exact_arith.hpp"
#include "support.hpp"

using namespace gfl;

namespace {

const Rational five(5);
QuadExt q(const Rational& u, const Rational& v, const Rational& d = five) { return QuadExt(u, v, d); }

bool reduced(const Rational& r) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return g == 1 && sgn(r.get_den()) > 0;
}

}  // namespace

TEST_CASE("quad_mul examples") {
  const Rational half(1, 2);
  CHECK(quad_mul(q(half, half), q(half, -half)) == q(-1, 0));
  const QuadExt x = q(Rational(3, 7), Rational(-2));
  CHECK(quad_mul(x, q(1, 0)) == x);
  CHECK(quad_mul(q(1, 1), q(1, 1)) == q(6, 2));
}

TEST_CASE("quad_mul rejects different radicands") {
  CHECK_THROWS_AS(quad_mul(q(1, 1, 5), q(1, 1, 2)), incompatible_context);
  CHECK_THROWS_AS(q(1, 1, 5) + q(1, 1, 3), incompatible_context);
}

TEST_CASE("radicand equality is by value") {
  // Independently built elements over the same radicand combine freely.
  CHECK(q(1, 2) + q(3, 4) == q(4, 6));
  CHECK_FALSE(q(1, 0, 5) == q(1, 0, 2));
}

TEST_CASE("quad_inv examples") {
  CHECK(quad_inv(q(0, 1)) == q(0, Rational(1, 5)));
  CHECK(quad_inv(q(1, 0)) == q(1, 0));
  const Rational half(1, 2);
  CHECK(quad_inv(q(half, half)) == q(-half, half));
  CHECK_THROWS_AS(quad_inv(q(0, 0)), division_by_zero);
}

TEST_CASE("square radicands are rejected by the checked constructor") {
  CHECK_THROWS_AS(QuadExt(1, 1, Rational(4)), precondition_error);
  CHECK_THROWS_AS(QuadExt(1, 1, Rational(9, 4)), precondition_error);
  CHECK_NOTHROW(QuadExt(1, 1, Rational(-4)));
  // The formal ring allows it; there the zero divisor 2 - t has no inverse.
  const QuadExt t = QuadExt::formal(2, -1, 4);
  CHECK(t.norm() == 0);
  CHECK_THROWS_AS(quad_inv(t), division_by_zero);
}

TEST_CASE("pow and norm") {
  const QuadExt a = q(Rational(1, 2), Rational(1, 2));
  CHECK(pow(a, 0) == q(1, 0));
  CHECK(pow(a, 2) == a + q(1, 0));  // alpha^2 = alpha + 1
  CHECK(pow(a, -1) * a == q(1, 0));
  CHECK(a.norm() == -1);
  CHECK(a.conj() == q(Rational(1, 2), Rational(-1, 2)));
}

TEST_CASE("poly_eval examples") {
  CHECK(poly_eval(Polynomial::x(), 1) == 1);
  CHECK(poly_eval(Polynomial(), Rational(7, 3)) == 0);
  CHECK(poly_eval(Polynomial{3, 2}, Rational(1, 2)) == 4);
}

TEST_CASE("polynomials are trimmed and parse") {
  const Polynomial p{1, 0, 0};
  CHECK(p.degree() == 0);
  CHECK(Polynomial{0, 0}.is_zero());
  CHECK((Polynomial{1, 1} - Polynomial{0, 1}).degree() == 0);
  CHECK(parse_polynomial("x^2 + 2x + 1") == Polynomial{1, 2, 1});
  CHECK(parse_polynomial("2x+1") == Polynomial{1, 2});
  CHECK(parse_polynomial("-x") == Polynomial{0, -1});
  CHECK(parse_polynomial("1/2x - 3") == Polynomial{-3, Rational(1, 2)});
  CHECK_THROWS_AS(parse_polynomial(""), precondition_error);
  CHECK_THROWS_AS(parse_polynomial("x^"), precondition_error);
}

TEST_CASE("rationals parse and stay reduced") {
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(parse_rational("-3") == -3);
  CHECK_THROWS_AS(parse_rational("1/0"), division_by_zero);
  CHECK_THROWS_AS(parse_rational("abc"), precondition_error);
  CHECK(make_rational(4, -6) == Rational(-2, 3));
}

TEST_CASE("property: field axioms in Q(sqrt d)") {
  test::Gen g(11);
  for (const Rational d : {Rational(5), Rational(2), Rational(-3), Rational(13, 4), Rational(8)}) {
    for (int trial = 0; trial < 200; ++trial) {
      const QuadExt x = g.quad(d), y = g.quad(d), z = g.quad(d);
      CHECK((x * y) * z == x * (y * z));
      CHECK(x * (y + z) == x * y + x * z);
      CHECK(x * y == y * x);
      if (!x.is_zero()) CHECK(x * quad_inv(x) == QuadExt::scalar(1, d));
      // Conjugation is a ring homomorphism.
      CHECK((x * y).conj() == x.conj() * y.conj());
      CHECK((x + y).conj() == x.conj() + y.conj());
      // Product formula against the coordinates written out.
      const QuadExt p = quad_mul(x, y);
      CHECK(p.u() == x.u() * y.u() + x.v() * y.v() * d);
      CHECK(p.v() == x.u() * y.v() + x.v() * y.u());
      CHECK(reduced(p.u()));
      CHECK(reduced(p.v()));
    }
  }
}

TEST_CASE("property: polynomial evaluation is a ring homomorphism") {
  test::Gen g(12);
  for (int trial = 0; trial < 300; ++trial) {
    const Polynomial a = g.polynomial(5), b = g.polynomial(5);
    const Rational x = g.rational(6);
    CHECK(poly_eval(a * b, x) == poly_eval(a, x) * poly_eval(b, x));
    CHECK(poly_eval(a + b, x) == poly_eval(a, x) + poly_eval(b, x));
    CHECK(parse_polynomial(to_string(a)) == a);
    if (!a.is_zero()) CHECK(sgn(a.coefficients().back()) != 0);
  }
}
