#include "gfl/exact_arith.hpp"

#include <cctype>
#include <sstream>

namespace gfl {

Rational make_rational(const Integer& num, const Integer& den) {
  if (sgn(den) == 0) throw division_by_zero("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(text));
    return make_rational(Integer(text.substr(0, slash)), Integer(text.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw precondition_error("not a rational number: '" + text + "'");
  }
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

bool is_rational_square(const Rational& r) {
  if (sgn(r) < 0) return false;
  return mpz_perfect_square_p(r.get_num_mpz_t()) != 0 && mpz_perfect_square_p(r.get_den_mpz_t()) != 0;
}

Integer ipow(const Integer& base, unsigned long exp) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

std::string to_string(const Integer& z) { return z.get_str(); }
std::string to_string(const Rational& r) { return r.get_str(); }

// ---------------------------------------------------------------------------

QuadExt::QuadExt(Rational u, Rational v, Rational d)
    : u_(std::move(u)), v_(std::move(v)), d_(std::make_shared<const Rational>(std::move(d))) {
  if (is_rational_square(*d_)) {
    throw precondition_error("radicand " + to_string(*d_) + " is the square of a rational");
  }
}

QuadExt QuadExt::formal(Rational u, Rational v, Rational d) {
  return QuadExt(std::move(u), std::move(v), std::make_shared<const Rational>(std::move(d)));
}

void QuadExt::require_same_field(const QuadExt& o) const {
  if (d_ != o.d_ && *d_ != *o.d_) {
    throw incompatible_context("quadratic extension radicands differ: " + to_string(*d_) + " vs " +
                               to_string(*o.d_));
  }
}

Rational QuadExt::norm() const {
  Rational out = u_ * u_ - v_ * v_ * *d_;
  return out;
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
  require_same_field(o);
  u_ += o.u_;
  v_ += o.v_;
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
  require_same_field(o);
  u_ -= o.u_;
  v_ -= o.v_;
  return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
  require_same_field(o);
  if (sgn(o.v_) == 0) {
    u_ *= o.u_;
    v_ *= o.u_;
    return *this;
  }
  if (sgn(v_) == 0) {
    v_ = u_ * o.v_;
    u_ *= o.u_;
    return *this;
  }
  Rational u = u_ * o.u_ + v_ * o.v_ * *d_;
  Rational v = u_ * o.v_ + v_ * o.u_;
  u_ = std::move(u);
  v_ = std::move(v);
  return *this;
}

QuadExt operator*(const QuadExt& a, const QuadExt& b) {
  a.require_same_field(b);
  if (sgn(b.v_) == 0) return QuadExt(a.u_ * b.u_, a.v_ * b.u_, a.d_);
  if (sgn(a.v_) == 0) return QuadExt(a.u_ * b.u_, a.u_ * b.v_, a.d_);
  return QuadExt(a.u_ * b.u_ + a.v_ * b.v_ * *a.d_, a.u_ * b.v_ + a.v_ * b.u_, a.d_);
}

QuadExt& QuadExt::operator*=(const Rational& s) {
  u_ *= s;
  v_ *= s;
  return *this;
}

QuadExt operator/(const QuadExt& a, const QuadExt& b) { return a * quad_inv(b); }

QuadExt quad_mul(const QuadExt& x, const QuadExt& y) { return x * y; }

QuadExt quad_inv(const QuadExt& x) {
  Rational n = x.norm();
  if (sgn(n) == 0) throw division_by_zero("inverse of " + to_string(x) + " (zero norm)");
  return x.sibling(x.u() / n, -x.v() / n);
}

QuadExt pow(const QuadExt& x, std::int64_t n) {
  if (n < 0) return pow(quad_inv(x), -n);
  QuadExt result = x.sibling(1, 0);
  QuadExt base = x;
  auto e = static_cast<std::uint64_t>(n);
  while (e != 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return result;
}

std::optional<QuadExt> invert_unit(const QuadExt& x) {
  if (sgn(x.norm()) == 0) return std::nullopt;
  return quad_inv(x);
}

std::string to_string(const QuadExt& x) {
  std::ostringstream os;
  os << x.u().get_str() << " + " << x.v().get_str() << "*sqrt(" << x.d().get_str() << ")";
  return os.str();
}

// ---------------------------------------------------------------------------

Polynomial::Polynomial(const Rational& c) {
  if (sgn(c) != 0) coeffs_.push_back(c);
}

Polynomial::Polynomial(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) { trim(); }

Polynomial::Polynomial(std::initializer_list<Rational> ascending) : coeffs_(ascending) { trim(); }

Polynomial Polynomial::x() { return Polynomial{Rational(0), Rational(1)}; }

void Polynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial& Polynomial::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  trim();
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Rational poly_eval(const Polynomial& p, const Rational& x) {
  Rational acc = 0;
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::optional<Polynomial> invert_unit(const Polynomial& p) {
  if (p.degree() != 0) return std::nullopt;
  Rational inv = 1 / p.coefficients()[0];
  return Polynomial(inv);
}

std::optional<Rational> invert_unit(const Rational& r) {
  if (sgn(r) == 0) return std::nullopt;
  Rational inv = 1 / r;
  return inv;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const auto& c = p.coefficients();
  for (std::size_t k = c.size(); k-- > 0;) {
    if (sgn(c[k]) == 0) continue;
    Rational mag = abs(c[k]);
    if (!first) os << (sgn(c[k]) < 0 ? " - " : " + ");
    else if (sgn(c[k]) < 0) os << "-";
    first = false;
    if (k == 0 || mag != 1) os << mag.get_str();
    if (k >= 1) os << "x";
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

Polynomial parse_polynomial(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw precondition_error("empty polynomial expression");

  Polynomial out;
  std::size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    }
    std::size_t start = i;
    while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/')) ++i;
    Rational coeff = start == i ? Rational(1) : parse_rational(s.substr(start, i - start));
    if (i < s.size() && s[i] == '*') ++i;
    unsigned long power = 0;
    if (i < s.size() && s[i] == 'x') {
      ++i;
      power = 1;
      if (i < s.size() && s[i] == '^') {
        std::size_t e0 = ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (e0 == i) throw precondition_error("missing exponent in '" + text + "'");
        power = std::stoul(s.substr(e0, i - e0));
      }
    } else if (start == i) {
      throw precondition_error("malformed polynomial '" + text + "'");
    }
    if (i < s.size() && s[i] != '+' && s[i] != '-') throw precondition_error("malformed polynomial '" + text + "'");
    std::vector<Rational> mono(power + 1);
    mono[power] = coeff * sign;
    out += Polynomial(std::move(mono));
  }
  return out;
}

}  // namespace gfl
