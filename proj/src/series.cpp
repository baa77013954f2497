#include "gfl/series.hpp"

namespace gfl {
namespace {

void require_order(std::size_t N) {
  if (N < 2) throw precondition_error("series checks need N >= 2");
}

// Compares got[n] against want(n) for n in [from, N]. On success both sides
// show the last coefficient; otherwise the first mismatch is shown.
template <class T, class F>
IdentityReport compare_coefficients(std::string id, const TruncatedSeries<T>& got, std::size_t from, F&& want) {
  IdentityReport r;
  r.id = std::move(id);
  r.pass = true;
  for (std::size_t n = from; n <= got.order(); ++n) {
    auto expected = want(n);
    if (!(got[n] == expected)) {
      r.pass = false;
      r.left = to_string(got[n]);
      r.right = to_string(expected);
      r.param("mismatch_at", static_cast<long long>(n));
      return r;
    }
  }
  r.left = to_string(got[got.order()]);
  r.right = r.left;
  return r;
}

TruncatedSeries<Rational> gfl_series(const GFLParams& params, std::size_t N) {
  std::vector<Rational> num{Rational(0), Rational(params.q), Rational(Integer(params.p + 2 * params.q))};
  std::vector<Rational> den{Rational(1), Rational(-1), Rational(-1)};
  return expand_rational(num, den, N);
}

void add_pq(IdentityReport& r, const GFLParams& params, std::size_t N) {
  r.param("p", to_string(params.p)).param("q", to_string(params.q)).param("N", static_cast<long long>(N));
}

}  // namespace

IdentityReport check_prop31(const GFLParams& params, std::size_t N) {
  require_order(N);
  const TruncatedSeries<Rational> A = gfl_series(params, N);
  IdentityReport r = compare_coefficients("prop31", A, 0, [&](std::size_t n) {
    return n == 0 ? Rational(0) : Rational(gfl(params, static_cast<std::int64_t>(n)));
  });
  add_pq(r, params, N);
  return r;
}

IdentityReport check_prop32_series(const GFLParams& params, std::size_t N) {
  require_order(N);
  const TruncatedSeries<Rational> A = gfl_series(params, N);
  const TruncatedSeries<Rational> A2 = series_mul(A, A);

  std::vector<Integer> g;
  for (std::size_t k = 0; k <= N; ++k) g.push_back(gfl(params, static_cast<std::int64_t>(k)));

  IdentityReport r = compare_coefficients("prop32-series", A2, 2, [&](std::size_t n) {
    Integer s = 0;
    for (std::size_t k = 1; k < n; ++k) s += g[k] * g[n - k];
    return Rational(s);
  });
  add_pq(r, params, N);

  std::size_t first_gap = 0;
  for (std::size_t n = 2; n <= N; ++n) {
    IdentityReport closed = check_prop32(params, static_cast<std::int64_t>(n));
    if (!closed.pass && r.pass) {
      r.pass = false;
      r.left = closed.left;
      r.right = closed.right;
      r.param("closed_form_mismatch_at", static_cast<long long>(n));
    }
    if (first_gap == 0 && A2[n] != Rational(convolution(params, static_cast<std::int64_t>(n))))
      first_gap = n;
  }
  if (first_gap != 0) {
    r.errata.push_back(
        "prop32: the A^2 coefficient sums k = 1..n-1 and differs from the closed form by g_0 g_n; "
        "the closed form matches the sum over k = 1..n");
    r.param("first_gap_at", static_cast<long long>(first_gap));
  }
  return r;
}

IdentityReport check_prop42(const GFLParams& params, const AlgebraParams& algebra, std::size_t N) {
  require_order(N);
  const RationalQuaternion G1 = build_Gn(params, 1, algebra);
  const RationalQuaternion G2 = build_Gn(params, 2, algebra);
  const RationalQuaternion zero = G1 - G1;
  std::vector<RationalQuaternion> num{zero, G1, G2 - G1};
  std::vector<Rational> den{Rational(1), Rational(-1), Rational(-1)};
  const auto B = expand_rational(num, den, N);
  IdentityReport r = compare_coefficients("prop42", B, 1, [&](std::size_t n) {
    return build_Gn(params, static_cast<std::int64_t>(n), algebra);
  });
  add_pq(r, params, N);
  r.param("gamma1", to_string(algebra.gamma1)).param("gamma2", to_string(algebra.gamma2));
  return r;
}

IdentityReport check_thm45(const Polynomial& h, const GFLParams& params, const Rational& x,
                           const AlgebraParams& algebra, std::size_t N) {
  require_order(N);
  const HxParams hx{h, params.p, params.q};
  const std::vector<PolyQuaternion> expected = hx_quats(hx, N + 1, algebra);
  const PolyQuaternion& G0 = expected[0];
  std::vector<PolyQuaternion> num{G0, expected[1] - h * G0};
  std::vector<Polynomial> den{Polynomial(1), Polynomial(0) - h, Polynomial(-1)};
  const auto A = expand_rational(num, den, N);

  IdentityReport r = compare_coefficients("thm45", A, 0, [&](std::size_t n) { return expected[n]; });
  r.param("h", to_string(h)).param("x", to_string(x));
  add_pq(r, params, N);
  r.param("gamma1", to_string(algebra.gamma1)).param("gamma2", to_string(algebra.gamma2));
  if (!r.pass) return r;

  const AlgebraPtr<Rational> ralg = rational_algebra(algebra);
  for (std::size_t n = 0; n <= N; ++n) {
    RationalQuaternion got = evaluate(A[n], x, ralg);
    RationalQuaternion want = evaluate(expected[n], x, ralg);
    if (!(got == want)) {
      r.pass = false;
      r.left = to_string(got);
      r.right = to_string(want);
      r.param("mismatch_at", static_cast<long long>(n));
      return r;
    }
  }
  r.left = to_string(evaluate(A[N], x, ralg));
  r.right = r.left;
  return r;
}

}  // namespace gfl
