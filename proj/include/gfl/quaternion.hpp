#pragma once

// Generalized quaternion algebra H(gamma1, gamma2) over a commutative
// coefficient ring T, basis {1, e1, e2, e3}:
//
//   e1^2 = gamma1   e2^2 = gamma2   e1 e2 = e3 = -e2 e1
//   e1 e3 = gamma1 e2 = -e3 e1      e3 e2 = gamma2 e1 = -e2 e3
//   e3^2 = -gamma1 gamma2
//
// The e3^2 entry is forced by e3 = e1 e2 and associativity. The
// TableConvention::printed variant uses +gamma1 gamma2 instead; that table
// is not associative and exists only so the discrepancy can be exhibited.

#include <array>
#include <cstddef>
#include <memory>
#include <string>

#include "gfl/exact_arith.hpp"

namespace gfl {

struct AlgebraParams {
  Rational gamma1, gamma2;

  AlgebraParams(Rational g1, Rational g2) : gamma1(std::move(g1)), gamma2(std::move(g2)) {
    if (sgn(gamma1) == 0 || sgn(gamma2) == 0) throw precondition_error("gamma1 and gamma2 must be nonzero");
  }
  bool is_integral() const { return is_integer(gamma1) && is_integer(gamma2); }
};

enum class TableConvention { corrected, printed };

/// Structure constants embedded in the coefficient ring T.
template <class T>
struct Algebra {
  T gamma1, gamma2, e3_square;

  friend bool operator==(const Algebra& a, const Algebra& b) {
    return a.gamma1 == b.gamma1 && a.gamma2 == b.gamma2 && a.e3_square == b.e3_square;
  }
};

template <class T>
using AlgebraPtr = std::shared_ptr<const Algebra<T>>;

/// Embeds the rational structure constants into T via `one`.
template <class T>
AlgebraPtr<T> lift(const AlgebraParams& params, const T& one, TableConvention table = TableConvention::corrected) {
  T g1 = one * params.gamma1;
  T g2 = one * params.gamma2;
  Rational g12 = params.gamma1 * params.gamma2;
  T e3sq = one * (table == TableConvention::corrected ? Rational(-g12) : g12);
  return std::make_shared<const Algebra<T>>(Algebra<T>{std::move(g1), std::move(g2), std::move(e3sq)});
}

template <class T>
class Quaternion {
 public:
  using Coeff = T;

  Quaternion(AlgebraPtr<T> algebra, std::array<T, 4> coords) : alg_(std::move(algebra)), c_(std::move(coords)) {}
  Quaternion(AlgebraPtr<T> algebra, T c0, T c1, T c2, T c3)
      : Quaternion(std::move(algebra), std::array<T, 4>{std::move(c0), std::move(c1), std::move(c2), std::move(c3)}) {}

  /// k-th basis element, k in 0..3.
  static Quaternion basis(AlgebraPtr<T> algebra, std::size_t k, const T& zero, const T& one) {
    std::array<T, 4> c{zero, zero, zero, zero};
    c[k] = one;
    return Quaternion(std::move(algebra), std::move(c));
  }

  const T& operator[](std::size_t k) const { return c_[k]; }
  const std::array<T, 4>& coords() const { return c_; }
  const Algebra<T>& algebra() const { return *alg_; }
  const AlgebraPtr<T>& algebra_ptr() const { return alg_; }

  /// Throws incompatible_context when the structure constants differ.
  void require_same_algebra(const Quaternion& o) const {
    if (alg_ != o.alg_ && !(*alg_ == *o.alg_)) throw incompatible_context("quaternions from different algebras");
  }

  Quaternion& operator+=(const Quaternion& o) {
    require_same_algebra(o);
    for (std::size_t k = 0; k < 4; ++k) c_[k] += o.c_[k];
    return *this;
  }
  Quaternion& operator-=(const Quaternion& o) {
    require_same_algebra(o);
    for (std::size_t k = 0; k < 4; ++k) c_[k] -= o.c_[k];
    return *this;
  }
  friend Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
  friend Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
  Quaternion operator-() const {
    Quaternion out = *this;
    for (auto& c : out.c_) c = -c;
    return out;
  }

  /// Central scalar multiplication.
  friend Quaternion operator*(Quaternion q, const T& s) {
    for (auto& c : q.c_) c *= s;
    return q;
  }
  friend Quaternion operator*(const T& s, Quaternion q) { return std::move(q) * s; }

  friend bool operator==(const Quaternion& a, const Quaternion& b) {
    return (a.alg_ == b.alg_ || *a.alg_ == *b.alg_) && a.c_ == b.c_;
  }

 private:
  AlgebraPtr<T> alg_;
  std::array<T, 4> c_;
};

/// Product in H(gamma1, gamma2): the bilinear extension of the basis table.
template <class T>
Quaternion<T> qmul(const Quaternion<T>& x, const Quaternion<T>& y) {
  x.require_same_algebra(y);
  const Algebra<T>& g = x.algebra();
  const auto& a = x.coords();
  const auto& b = y.coords();
  T c0 = a[0] * b[0];
  c0 += g.gamma1 * (a[1] * b[1]);
  c0 += g.gamma2 * (a[2] * b[2]);
  c0 += g.e3_square * (a[3] * b[3]);
  T c1 = a[0] * b[1];
  c1 += a[1] * b[0];
  c1 += g.gamma2 * (a[3] * b[2] - a[2] * b[3]);
  T c2 = a[0] * b[2];
  c2 += a[2] * b[0];
  c2 += g.gamma1 * (a[1] * b[3] - a[3] * b[1]);
  T c3 = a[0] * b[3];
  c3 += a[3] * b[0];
  c3 += a[1] * b[2];
  c3 -= a[2] * b[1];
  return Quaternion<T>(x.algebra_ptr(), std::move(c0), std::move(c1), std::move(c2), std::move(c3));
}

template <class T>
Quaternion<T> operator*(const Quaternion<T>& x, const Quaternion<T>& y) {
  return qmul(x, y);
}

/// Multiplies every coordinate by a scalar of another type (e.g. a Rational
/// acting on QuadExt coordinates).
template <class T, class S>
Quaternion<T> scale(Quaternion<T> q, const S& s) {
  std::array<T, 4> c = q.coords();
  for (auto& v : c) v = v * s;
  return Quaternion<T>(q.algebra_ptr(), std::move(c));
}

template <class T>
bool is_zero(const Quaternion<T>& q) {
  for (const auto& c : q.coords())
    if (!(c == T(c - c))) return false;
  return true;
}

/// Applies f to every coordinate and re-homes the result in `target`.
template <class U, class T, class F>
Quaternion<U> map_coords(const Quaternion<T>& q, AlgebraPtr<U> target, F&& f) {
  const auto& c = q.coords();
  return Quaternion<U>(std::move(target), f(c[0]), f(c[1]), f(c[2]), f(c[3]));
}

template <class T>
std::string to_string(const Quaternion<T>& q) {
  std::string out = "(";
  for (std::size_t k = 0; k < 4; ++k) {
    if (k) out += ", ";
    out += to_string(q[k]);
  }
  return out + ")";
}

/// Number of basis triples (e_i e_j) e_k != e_i (e_j e_k) among all 64.
int count_nonassociative_basis_triples(const AlgebraParams& params, TableConvention table);

}  // namespace gfl
