#pragma once

// Truncated formal power series over a (possibly noncommutative) coefficient
// ring, and the generating-function checks built on them. The formal
// variable is central: in every product the left factor's coefficient
// multiplies from the left.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "gfl/exact_arith.hpp"
#include "gfl/quaternions.hpp"
#include "gfl/report.hpp"
#include "gfl/sequences.hpp"

namespace gfl {

template <class T>
class TruncatedSeries {
 public:
  /// Coefficients c_0..c_N; N = size - 1. Must be nonempty.
  explicit TruncatedSeries(std::vector<T> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw precondition_error("a truncated series needs at least the constant coefficient");
  }

  std::size_t order() const { return c_.size() - 1; }
  const T& operator[](std::size_t k) const { return c_[k]; }
  const std::vector<T>& coefficients() const { return c_; }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b);
    std::vector<T> out = a.c_;
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += b.c_[k];
    return TruncatedSeries(std::move(out));
  }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.c_ == b.c_; }

  static void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.order() != b.order()) throw precondition_error("truncation orders differ");
  }

 private:
  std::vector<T> c_;
};

namespace detail {
template <class T>
T zero_like(const T& x) {
  T z = x;
  z -= x;
  return z;
}
}  // namespace detail

/// Cauchy product truncated at the common order.
template <class T>
TruncatedSeries<T> series_mul(const TruncatedSeries<T>& s, const TruncatedSeries<T>& t) {
  TruncatedSeries<T>::require_same_order(s, t);
  std::vector<T> out;
  out.reserve(s.order() + 1);
  for (std::size_t n = 0; n <= s.order(); ++n) {
    T acc = s[0] * t[n];
    for (std::size_t k = 1; k <= n; ++k) acc += s[k] * t[n - k];
    out.push_back(std::move(acc));
  }
  return TruncatedSeries<T>(std::move(out));
}

/// Expands numerator / denominator to order N by long division, where the
/// denominator's coefficients (type S) act as central scalars on T. The
/// result r satisfies sum_{k} den_k r_{n-k} = num_n for n <= N.
template <class T, class S>
TruncatedSeries<T> expand_rational(const std::vector<T>& numerator, const std::vector<S>& denominator, std::size_t N) {
  if (numerator.empty() || denominator.empty()) throw precondition_error("empty numerator or denominator");
  auto inv = invert_unit(denominator[0]);
  if (!inv) throw precondition_error("denominator constant term is not invertible");
  const T zero = detail::zero_like(numerator[0]);

  std::vector<T> r;
  r.reserve(N + 1);
  for (std::size_t n = 0; n <= N; ++n) {
    T acc = n < numerator.size() ? numerator[n] : zero;
    for (std::size_t k = 1; k <= n && k < denominator.size(); ++k) acc -= denominator[k] * r[n - k];
    r.push_back(*inv * acc);
  }
  return TruncatedSeries<T>(std::move(r));
}

/// A(z) = (q z + (p+2q) z^2) / (1 - z - z^2) against g_n^{p,q}, N >= 2.
IdentityReport check_prop31(const GFLParams& params, std::size_t N);

/// Expands A(z) and squares it. The report passes when
///  - every coefficient of A^2 equals its brute-force sum_{k=1}^{n-1} g_k g_{n-k}, and
///  - 5 * sum_{k=1}^{n} g_k g_{n-k} equals the four-term closed form
/// for 2 <= n <= N. Whether the A^2 coefficients themselves match the closed
/// form is recorded in errata rather than asserted.
IdentityReport check_prop32_series(const GFLParams& params, std::size_t N);

/// B(z) = (G_1 z + (G_2 - G_1) z^2) / (1 - z - z^2) against G_n^{p,q}.
IdentityReport check_prop42(const GFLParams& params, const AlgebraParams& algebra, std::size_t N);

/// A(t) = (G_{h,0} + (G_{h,1} - h G_{h,0}) t) / (1 - h t - t^2), expanded over
/// polynomial-coefficient quaternions, compared against G_{h,n} both as
/// polynomials and evaluated at x, for 0 <= n <= N.
IdentityReport check_thm45(const Polynomial& h, const GFLParams& params, const Rational& x,
                           const AlgebraParams& algebra, std::size_t N);

}  // namespace gfl
