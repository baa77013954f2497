#pragma once

// Exact number tower: big integers and rationals (GMP), quadratic extension
// elements u + v*sqrt(D), and univariate polynomials over the rationals.

#include <gmpxx.h>

#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gfl {

using Integer = mpz_class;
using Rational = mpq_class;

struct incompatible_context : std::logic_error {
  using std::logic_error::logic_error;
};

struct division_by_zero : std::domain_error {
  using std::domain_error::domain_error;
};

struct precondition_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Canonical num/den. Throws division_by_zero when den == 0.
Rational make_rational(const Integer& num, const Integer& den);

/// Parses "a", "-a" or "a/b".
Rational parse_rational(const std::string& text);

bool is_integer(const Rational& r);
bool is_rational_square(const Rational& r);

/// (-1)^k for any signed k.
inline int sign_power(std::int64_t k) { return (k % 2 == 0) ? 1 : -1; }

Integer ipow(const Integer& base, unsigned long exp);

std::string to_string(const Integer& z);
std::string to_string(const Rational& r);

// ---------------------------------------------------------------------------

/// Element u + v*sqrt(d) of Q(sqrt(d)).
///
/// The public constructor rejects radicands that are squares of rationals,
/// since then the pair (u, v) is not a faithful coordinate system. formal()
/// skips that check and yields arithmetic in Q[t]/(t^2 - d); in that ring
/// only elements of nonzero norm are invertible.
class QuadExt {
 public:
  QuadExt(Rational u, Rational v, Rational d);

  static QuadExt formal(Rational u, Rational v, Rational d);
  static QuadExt scalar(Rational u, const Rational& d) { return formal(std::move(u), 0, d); }

  const Rational& u() const { return u_; }
  const Rational& v() const { return v_; }
  const Rational& d() const { return *d_; }

  bool is_zero() const { return sgn(u_) == 0 && sgn(v_) == 0; }
  bool is_rational() const { return sgn(v_) == 0; }

  /// u + v sqrt(d) in the field of *this.
  QuadExt sibling(Rational u, Rational v) const { return QuadExt(std::move(u), std::move(v), d_); }
  QuadExt conj() const { return QuadExt(u_, -v_, d_); }
  /// u^2 - v^2 d
  Rational norm() const;

  QuadExt& operator+=(const QuadExt& o);
  QuadExt& operator-=(const QuadExt& o);
  QuadExt& operator*=(const QuadExt& o);
  QuadExt& operator*=(const Rational& s);

  friend QuadExt operator+(QuadExt a, const QuadExt& b) { return a += b; }
  friend QuadExt operator-(QuadExt a, const QuadExt& b) { return a -= b; }
  friend QuadExt operator*(const QuadExt& a, const QuadExt& b);
  friend QuadExt operator*(QuadExt a, const Rational& s) { return a *= s; }
  friend QuadExt operator*(const Rational& s, QuadExt a) { return a *= s; }
  friend QuadExt operator/(const QuadExt& a, const QuadExt& b);
  QuadExt operator-() const { return QuadExt(-u_, -v_, d_); }

  /// Compares coordinates; elements over different radicands are unequal.
  friend bool operator==(const QuadExt& a, const QuadExt& b) {
    return (a.d_ == b.d_ || *a.d_ == *b.d_) && a.u_ == b.u_ && a.v_ == b.v_;
  }

 private:
  // Elements derived from one another share the radicand.
  QuadExt(Rational u, Rational v, std::shared_ptr<const Rational> d)
      : u_(std::move(u)), v_(std::move(v)), d_(std::move(d)) {}
  void require_same_field(const QuadExt& o) const;

  Rational u_, v_;
  std::shared_ptr<const Rational> d_;
};

QuadExt quad_mul(const QuadExt& x, const QuadExt& y);
QuadExt quad_inv(const QuadExt& x);
/// Exponent may be negative (uses quad_inv).
QuadExt pow(const QuadExt& x, std::int64_t n);
std::optional<QuadExt> invert_unit(const QuadExt& x);
std::string to_string(const QuadExt& x);

// ---------------------------------------------------------------------------

/// Dense univariate polynomial with rational coefficients, ascending degree.
/// The zero polynomial has an empty coefficient list.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Rational& c);  // NOLINT(google-explicit-constructor): constants embed
  Polynomial(int c) : Polynomial(Rational(c)) {}  // NOLINT
  explicit Polynomial(std::vector<Rational> ascending);
  Polynomial(std::initializer_list<Rational> ascending);

  /// The monomial x.
  static Polynomial x();

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Rational coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& s);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  Polynomial operator-() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Horner evaluation.
Rational poly_eval(const Polynomial& p, const Rational& x);
std::optional<Polynomial> invert_unit(const Polynomial& p);
std::optional<Rational> invert_unit(const Rational& r);
std::string to_string(const Polynomial& p);

/// Parses expressions such as "x", "2x+1", "x^2 - 1/2x + 3".
Polynomial parse_polynomial(const std::string& text);

}  // namespace gfl
