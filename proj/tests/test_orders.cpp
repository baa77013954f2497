#include <doctest.h>

#include "gfl/orders.hpp"
#include "gfl/quaternions.hpp"
#include "support.hpp"

using namespace gfl;

namespace {

IntVec vec(long a, long b, long c, long d) { return {Integer(a), Integer(b), Integer(c), Integer(d)}; }

IntVec combine(const std::vector<IntVec>& rows, const std::vector<Integer>& coeffs) {
  IntVec out = vec(0, 0, 0, 0);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t k = 0; k < 4; ++k) out[k] += coeffs[i] * rows[i][k];
  return out;
}

bool spans_equal(const std::vector<IntVec>& a, const std::vector<IntVec>& b) {
  const IntegerLattice La = hnf(a), Lb = hnf(b);
  for (const auto& v : a)
    if (!member(Lb, v)) return false;
  for (const auto& v : b)
    if (!member(La, v)) return false;
  return true;
}

// Membership in the span of two independent vectors, solved over Q with
// Cramer's rule on a nonzero 2x2 minor and then checked on all coordinates.
bool member_oracle(const IntVec& g, const IntVec& h, const IntVec& v) {
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) {
      const Integer det = g[i] * h[j] - g[j] * h[i];
      if (sgn(det) == 0) continue;
      const Rational c1 = make_rational(Integer(v[i] * h[j] - v[j] * h[i]), det);
      const Rational c2 = make_rational(Integer(g[i] * v[j] - g[j] * v[i]), det);
      if (!is_integer(c1) || !is_integer(c2)) return false;
      for (std::size_t k = 0; k < 4; ++k)
        if (Rational(v[k]) != c1 * g[k] + c2 * h[k]) return false;
      return true;
    }
  return false;
}

}  // namespace

TEST_CASE("hnf examples") {
  CHECK(hnf({vec(2, 0, 0, 0), vec(3, 0, 0, 0)}).basis() == std::vector<IntVec>{vec(1, 0, 0, 0)});
  const IntegerLattice zero = hnf({});
  CHECK(zero.rank() == 0);
  CHECK(member(zero, vec(0, 0, 0, 0)));
  CHECK_FALSE(member(zero, vec(0, 0, 1, 0)));
  CHECK(hnf({vec(2, 0, 0, 0), vec(0, 2, 0, 0), vec(1, 1, 0, 0)}).basis() ==
        std::vector<IntVec>{vec(1, 1, 0, 0), vec(0, 2, 0, 0)});
  // Zero rows vanish; a negative pivot is flipped.
  CHECK(hnf({vec(0, 0, 0, 0), vec(0, 0, -3, 1)}).basis() == std::vector<IntVec>{vec(0, 0, 3, -1)});
}

TEST_CASE("member examples") {
  const IntegerLattice L = hnf({vec(2, 0, 0, 0), vec(0, 2, 0, 0)});
  const auto z = member(L, vec(0, 0, 0, 0));
  REQUIRE(z);
  for (const auto& c : *z) CHECK(c == 0);
  CHECK_FALSE(member(L, vec(1, 0, 0, 0)));
  CHECK(member(L, vec(2, 2, 0, 0)));
  CHECK_FALSE(member(L, vec(2, 2, 2, 0)));
}

TEST_CASE("integer_coords rejects fractions") {
  const auto alg = rational_algebra(AlgebraParams(1, 1));
  CHECK(integer_coords(RationalQuaternion(alg, Rational(3), Rational(-1), Rational(0), Rational(7))) == vec(3, -1, 0, 7));
  CHECK_THROWS_AS(integer_coords(RationalQuaternion(alg, Rational(1, 2), Rational(0), Rational(0), Rational(0))),
                  precondition_error);
}

TEST_CASE("remark41 generator examples") {
  const AlgebraParams params(-1, -1);
  const auto alg = rational_algebra(params);
  const auto one = RationalQuaternion::basis(alg, 0, 0, 1);
  const auto g10 = build_Gn({1, 0}, 1, params) * Rational(5);
  const auto g01 = build_Gn({0, 1}, 1, params) * Rational(5);
  std::vector<IntVec> rows{integer_coords(one), integer_coords(g10), integer_coords(g01),
                           integer_coords(build_Gn({1, 0}, 2, params) * Rational(5)),
                           integer_coords(build_Gn({0, 1}, 2, params) * Rational(5))};
  const IntegerLattice L = hnf(rows);
  CHECK(member(L, integer_coords(one * g10)));
  CHECK(member(L, integer_coords(build_Gn({3, -2}, 7, params) * Rational(5))));
  // G_n has coordinates (g_n, g_{n+1}, g_{n+2}, g_{n+3}): only two independent
  // directions plus 1, so the lattice has rank 3 and cannot be an order.
  CHECK(L.rank() == 3);
  // The product of two generators leaves that rank-3 span.
  const IntVec prod = integer_coords(g10 * g01);
  CHECK(prod == vec(-525, 0, 0, 75));
  CHECK_FALSE(member(L, prod));
}

TEST_CASE("closure reports") {
  const AlgebraParams params(-1, -1);
  const IdentityReport r = remark41_closure(params, {1, 30}, {-5, 5});
  CHECK(r.left == "3655 checked");
  CHECK_FALSE(r.pass);
  // Every scaled quaternion in the window is a member; only products escape.
  CHECK(r.right == "3643 members");
  CHECK_THROWS_AS(remark41_closure(AlgebraParams(Rational(1, 2), 1), {1, 3}, {0, 1}), precondition_error);
  CHECK_THROWS_AS(remark41_closure(params, {0, 3}, {0, 1}), precondition_error);
  CHECK_THROWS_AS(prop54_closure(0, params, {1, 3}, {0, 1}), precondition_error);

  // a = 1 gives (1+4a) = 5 and S = G.
  const IdentityReport s = prop54_closure(1, params, {1, 30}, {-5, 5});
  CHECK(s.pass == r.pass);
  CHECK(s.right == r.right);

  // ((1+4a) S_1^{1,0})^2 for a = 2 stays inside; other products do not.
  std::vector<IntVec> rows{vec(1, 0, 0, 0)};
  for (std::int64_t n : {1, 2})
    for (const GFLParams& pq : {GFLParams{1, 0}, GFLParams{0, 1}})
      rows.push_back(integer_coords(build_Sn(2, pq, n, params) * Rational(9)));
  const auto s1 = build_Sn(2, {1, 0}, 1, params) * Rational(9);
  CHECK(member(hnf(rows), integer_coords(s1 * s1)));
  CHECK(member(hnf(rows), integer_coords(build_Sn(2, {0, 0}, 3, params))));
  CHECK_FALSE(prop54_closure(2, params, {1, 2}, {0, 1}).pass);
}

TEST_CASE("prop54 scalar decomposition examples") {
  CHECK(prop54_scalar_decomp(1, {1, 1}, {1, 1}, 1, 2).left == to_string(Integer(25 * gen_s(1, {1, 1}, 1) * gen_s(1, {1, 1}, 2))));
  CHECK(prop54_scalar_decomp(1, {0, 1}, {1, 0}, 1, 3).left == "25");
  const IdentityReport r = prop54_scalar_decomp(2, {1, 0}, {0, 1}, 2, 5);
  CHECK(r.left == to_string(Integer(81 * gen_s(2, {1, 0}, 2, SReading::closed_form) *
                                    gen_s(2, {0, 1}, 5, SReading::closed_form))));
  CHECK(r.pass == r.errata.empty());
  CHECK_THROWS_AS(prop54_scalar_decomp(1, {1, 1}, {1, 1}, 2, 2), precondition_error);
}

TEST_CASE("property: hnf is canonical, idempotent and preserves the span") {
  test::Gen g(51);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<IntVec> rows;
    for (auto k = g.integer(0, 6); k > 0; --k)
      rows.push_back(vec(static_cast<long>(g.integer(-9, 9)), static_cast<long>(g.integer(-9, 9)),
                         static_cast<long>(g.integer(-9, 9)), static_cast<long>(g.integer(-9, 9))));
    const IntegerLattice L = hnf(rows);
    CHECK(spans_equal(rows, L.basis()));
    CHECK(hnf(L.basis()).basis() == L.basis());
    // Shuffled and sign-flipped generators give the same basis.
    std::vector<IntVec> other = rows;
    std::shuffle(other.begin(), other.end(), g.engine());
    for (auto& row : other)
      if (g.coin())
        for (auto& c : row) c = -c;
    CHECK(hnf(other).basis() == L.basis());
    for (std::size_t i = 0; i < L.rank(); ++i) {
      const std::size_t c = L.pivots()[i];
      CHECK(sgn(L.basis()[i][c]) > 0);
      if (i) CHECK(L.pivots()[i - 1] < c);
      for (std::size_t k = 0; k < c; ++k) CHECK(sgn(L.basis()[i][k]) == 0);
      for (std::size_t j = 0; j < i; ++j) {
        CHECK(sgn(L.basis()[j][c]) >= 0);
        CHECK(L.basis()[j][c] < L.basis()[i][c]);
      }
    }
    // Integer combinations are members and member's coordinates rebuild them.
    std::vector<Integer> coeffs;
    for (std::size_t i = 0; i < rows.size(); ++i) coeffs.emplace_back(static_cast<long>(g.integer(-5, 5)));
    const IntVec v = combine(rows, coeffs);
    const auto c = member(L, v);
    REQUIRE(c);
    CHECK(combine(L.basis(), *c) == v);
  }
}

TEST_CASE("property: member agrees with a rational solve on rank-2 lattices") {
  test::Gen g(52);
  int members = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    auto small = [&] { return static_cast<long>(g.integer(-4, 4)); };
    const IntVec a = vec(small(), small(), small(), small()), b = vec(small(), small(), small(), small());
    if (hnf({a, b}).rank() != 2) continue;
    // Half-integer combinations hit both outcomes.
    const Rational c1(static_cast<long>(g.integer(-6, 6)), 2), c2(static_cast<long>(g.integer(-6, 6)), 2);
    IntVec v;
    bool integral = true;
    for (std::size_t k = 0; k < 4; ++k) {
      const Rational x = c1 * a[k] + c2 * b[k];
      if (!is_integer(x)) integral = false;
      v[k] = integral ? Integer(x.get_num()) : Integer(0);
    }
    if (!integral) continue;
    const bool expected = member_oracle(a, b, v);
    CHECK(member(hnf({a, b}), v).has_value() == expected);
    members += expected ? 1 : 0;
  }
  CHECK(members > 50);
}
