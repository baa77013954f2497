#include <doctest.h>

#include "gfl/series.hpp"
#include "support.hpp"

using namespace gfl;

namespace {

using RSeries = TruncatedSeries<Rational>;

std::vector<Rational> rats(std::initializer_list<int> xs) {
  std::vector<Rational> out;
  for (int x : xs) out.emplace_back(x);
  return out;
}

const std::vector<Rational> fib_den = rats({1, -1, -1});

}  // namespace

TEST_CASE("expand_rational examples") {
  CHECK(expand_rational(rats({1}), rats({1, -1}), 3).coefficients() == rats({1, 1, 1, 1}));
  CHECK(expand_rational(rats({0, 1}), fib_den, 5).coefficients() == rats({0, 1, 1, 2, 3, 5}));
  CHECK(expand_rational(rats({0}), rats({1, -1}), 2).coefficients() == rats({0, 0, 0}));
  // 1/(2 - z) = 1/2 + z/4 + z^2/8
  CHECK(expand_rational(rats({1}), rats({2, -1}), 2).coefficients() ==
        std::vector<Rational>{Rational(1, 2), Rational(1, 4), Rational(1, 8)});
}

TEST_CASE("expand_rational needs an invertible constant term") {
  CHECK_THROWS_AS(expand_rational(rats({1}), rats({0, 1}), 3), precondition_error);
  // 1 + x is not a unit among polynomials.
  std::vector<Polynomial> num{Polynomial(1)};
  std::vector<Polynomial> den{Polynomial{1, 1}};
  CHECK_THROWS_AS(expand_rational(num, den, 2), precondition_error);
}

TEST_CASE("series_mul examples") {
  const RSeries s(rats({4, -2, 7}));
  CHECK(series_mul(s, RSeries(rats({1, 0, 0}))) == s);
  CHECK(series_mul(RSeries(rats({0, 1, 1})), RSeries(rats({0, 1, 1}))).coefficients() == rats({0, 0, 1}));
  CHECK(series_mul(RSeries(rats({2})), RSeries(rats({3}))).coefficients() == rats({6}));
  CHECK_THROWS_AS(series_mul(RSeries(rats({1, 2})), RSeries(rats({1}))), precondition_error);
  CHECK_THROWS_AS(RSeries(std::vector<Rational>{}), precondition_error);
}

TEST_CASE("series_mul keeps the left coefficient on the left") {
  const AlgebraParams params(-1, -1);
  const auto alg = rational_algebra(params);
  const auto e1 = RationalQuaternion::basis(alg, 1, 0, 1);
  const auto e2 = RationalQuaternion::basis(alg, 2, 0, 1);
  const auto zero = e1 - e1;
  const TruncatedSeries<RationalQuaternion> a({e1, zero}), b({e2, zero});
  CHECK(series_mul(a, b)[0] == qmul(e1, e2));
  CHECK_FALSE(series_mul(a, b)[0] == series_mul(b, a)[0]);
}

TEST_CASE("check_prop31 examples") {
  const auto A = expand_rational(rats({0, 1, 3}), fib_den, 4);
  CHECK(A.coefficients() == rats({0, 1, 4, 5, 9}));
  CHECK(check_prop31({1, 1}, 4).pass);
  const auto L = expand_rational(rats({0, 1, 2}), fib_den, 3);
  CHECK(L[3] == 4);
  CHECK(check_prop31({0, 1}, 3).pass);
  auto zero = check_prop31({0, 0}, 10);
  CHECK(zero.pass);
  CHECK(zero.left == "0");
  CHECK_THROWS_AS(check_prop31({1, 1}, 1), precondition_error);
}

TEST_CASE("check_prop32_series examples") {
  // A^2 coefficient 2 is g_1 g_1 = 1; the proof's s_2 = 7.
  const auto A = expand_rational(rats({0, 1, 2}), fib_den, 2);
  CHECK(series_mul(A, A)[2] == 1);
  CHECK(convolution({0, 1}, 2) == 7);
  auto r = check_prop32_series({0, 1}, 2);
  CHECK(r.pass);
  REQUIRE(r.errata.size() == 1);
  CHECK(check_prop32_series({0, 0}, 8).errata.empty());
  CHECK(check_prop32_series({1, 0}, 4).pass);
  CHECK(check_prop32({1, 0}, 4).pass);
}

TEST_CASE("check_prop42 examples") {
  const AlgebraParams params(-1, -1);
  const auto G1 = build_Gn({1, 0}, 1, params);
  CHECK(G1.coords() == std::array<Rational, 4>{0, 1, 1, 2});
  CHECK(check_prop42({1, 0}, params, 10).pass);
  CHECK(check_prop42({0, 0}, params, 10).pass);
  const auto L2 = build_Gn({0, 1}, 2, params);
  CHECK(L2.coords() == std::array<Rational, 4>{3, 4, 7, 11});

  // The expansion itself, coefficient 2 for the Lucas parameters.
  const auto G2 = build_Gn({0, 1}, 1, params);
  const auto G3 = build_Gn({0, 1}, 2, params);
  const std::vector<RationalQuaternion> num{G2 - G2, G2, G3 - G2};
  CHECK(expand_rational(num, fib_den, 2)[2] == L2);
}

TEST_CASE("check_thm45 examples") {
  const AlgebraParams params(2, -3);
  // h = 1 reduces to the g^{p,q} recurrence.
  const HxParams one{Polynomial(1), 2, -1};
  for (std::int64_t n = 1; n <= 8; ++n)
    CHECK(evaluate(hx_quat(one, n, params), Rational(5), rational_algebra(params)) == build_Gn({2, -1}, n, params));
  CHECK(check_thm45(Polynomial(1), {2, -1}, Rational(5), params, 12).pass);
  CHECK(check_thm45(Polynomial::x(), {0, 0}, Rational(3), params, 6).pass);
  const HxParams lucas_x{Polynomial::x(), 0, 1};
  CHECK(poly_eval(hx_poly(lucas_x, 2), 2) == 4);
  CHECK(check_thm45(Polynomial::x(), {0, 1}, Rational(2), params, 8).pass);
  CHECK(check_thm45(Polynomial{1, 2}, {3, -2}, Rational(-1, 2), params, 10).pass);
}

TEST_CASE("property: expand_rational times the denominator gives the numerator") {
  test::Gen g(31);
  for (int trial = 0; trial < 200; ++trial) {
    const auto N = static_cast<std::size_t>(g.integer(0, 12));
    std::vector<Rational> num, den{g.nonzero_rational(9)};
    for (auto k = g.integer(0, 5); k >= 0; --k) num.push_back(g.rational(9));
    for (auto k = g.integer(0, 4); k > 0; --k) den.push_back(g.rational(9));
    const RSeries r = expand_rational(num, den, N);
    std::vector<Rational> pad_den(N + 1), pad_num(N + 1);
    for (std::size_t k = 0; k <= N; ++k) {
      if (k < den.size()) pad_den[k] = den[k];
      if (k < num.size()) pad_num[k] = num[k];
    }
    CHECK(series_mul(RSeries(pad_den), r).coefficients() == pad_num);
  }
}

TEST_CASE("property: series_mul is associative and distributive") {
  test::Gen g(32);
  const auto alg = rational_algebra(AlgebraParams(-1, 3));
  auto quat = [&] { return RationalQuaternion(alg, g.rational(5), g.rational(5), g.rational(5), g.rational(5)); };
  for (int trial = 0; trial < 60; ++trial) {
    const auto N = static_cast<std::size_t>(g.integer(0, 6));
    auto series = [&] {
      std::vector<RationalQuaternion> c;
      for (std::size_t k = 0; k <= N; ++k) c.push_back(quat());
      return TruncatedSeries<RationalQuaternion>(std::move(c));
    };
    const auto a = series(), b = series(), c = series();
    CHECK(series_mul(series_mul(a, b), c) == series_mul(a, series_mul(b, c)));
    CHECK(series_mul(a, b + c) == series_mul(a, b) + series_mul(a, c));
    CHECK(series_mul(a + b, c) == series_mul(a, c) + series_mul(b, c));
  }
}

TEST_CASE("property: generating functions on the parameter box") {
  for (int p = -5; p <= 5; ++p)
    for (int q = -5; q <= 5; ++q) {
      CHECK(check_prop31({p, q}, 64).pass);
      CHECK(check_prop32_series({p, q}, 30).pass);
    }
  for (int g1 : {-1, 1, 2, -3})
    for (int g2 : {-1, 1, 2, -3})
      for (int p = -2; p <= 2; ++p)
        for (int q = -2; q <= 2; ++q) CHECK(check_prop42({p, q}, AlgebraParams(g1, g2), 20).pass);
}
