#include "gfl/sequences.hpp"

#include <array>

namespace gfl {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw precondition_error(what);
}

IdentityReport make_report(std::string id, const Rational& left, const Rational& right) {
  IdentityReport r;
  r.id = std::move(id);
  r.left = to_string(left);
  r.right = to_string(right);
  r.pass = left == right;
  return r;
}

Integer forward_term(const SequenceSpec& spec, std::int64_t n) {
  if (n == 0) return spec.x0;
  Integer prev = spec.x0, cur = spec.x1;
  for (std::int64_t k = 1; k < n; ++k) {
    Integer next = spec.a * cur + spec.b * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

bool is_x_shape(const SequenceSpec& spec) { return spec.a == 1 && spec.x0 == 0 && spec.x1 == 1; }

}  // namespace

Rational term(const SequenceSpec& spec, std::int64_t n, NegativeIndexMode mode) {
  if (n >= 0) return Rational(forward_term(spec, n));

  if (mode == NegativeIndexMode::paper_rule) {
    if (!is_x_shape(spec)) {
      throw unsupported_convention("sign-flip rule for negative indices applies only to (1,a,0,1)-numbers");
    }
    Rational mirrored(forward_term(spec, -n));
    return sign_power(-n + 1) * mirrored;
  }

  if (sgn(spec.b) == 0) throw division_by_zero("backward recurrence needs b != 0");
  // Walk down from (d_1, d_0).
  Rational hi(spec.x1), lo(spec.x0);
  for (std::int64_t k = 0; k > n; --k) {
    Rational below = (hi - spec.a * lo) / spec.b;
    hi = std::move(lo);
    lo = std::move(below);
  }
  return lo;
}

std::vector<Integer> terms(const SequenceSpec& spec, std::size_t count) {
  std::vector<Integer> out;
  out.reserve(count);
  if (count > 0) out.push_back(spec.x0);
  if (count > 1) out.push_back(spec.x1);
  while (out.size() < count) {
    const std::size_t k = out.size();
    out.push_back(spec.a * out[k - 1] + spec.b * out[k - 2]);
  }
  return out;
}

namespace {

struct Mat2 {
  Integer m00, m01, m10, m11;

  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.m00 * y.m00 + x.m01 * y.m10, x.m00 * y.m01 + x.m01 * y.m11,
            x.m10 * y.m00 + x.m11 * y.m10, x.m10 * y.m01 + x.m11 * y.m11};
  }
};

}  // namespace

Integer term_fast(const SequenceSpec& spec, std::uint64_t n) {
  // [d_{k+1}, d_k]^T = C^k [x1, x0]^T
  Mat2 result{1, 0, 0, 1};
  Mat2 base{spec.a, spec.b, 1, 0};
  for (std::uint64_t e = n; e != 0; e >>= 1U) {
    if (e & 1U) result = result * base;
    if (e > 1) base = base * base;
  }
  return result.m10 * spec.x1 + result.m11 * spec.x0;
}

Integer fibonacci(std::int64_t n) {
  Rational v = term(SequenceSpec::fibonacci(), n);
  return v.get_num();
}

Integer lucas(std::int64_t n) {
  Rational v = term(SequenceSpec::lucas(), n);
  return v.get_num();
}

Integer gfl(const GFLParams& params, std::int64_t n) {
  require(n >= 0, "g_n^{p,q} is defined for n >= 0");
  return forward_term({1, 1, params.p + 2 * params.q, params.q}, n);
}

Integer gen_s(const Integer& a, const GFLParams& params, std::int64_t n, SReading reading) {
  require(a >= 1, "s_n^{p,q} needs a >= 1");
  require(n >= 0, "s_n^{p,q} is defined for n >= 0");
  if (reading == SReading::recurrence) return forward_term({1, a, params.p + 2 * params.q, params.q}, n);

  Rational x_prev = term(SequenceSpec::x_sequence(a), n - 1, NegativeIndexMode::paper_rule);
  Integer y = forward_term(SequenceSpec::y_sequence(a), n);
  Rational s = params.p * x_prev + params.q * y;
  return s.get_num();
}

// ---------------------------------------------------------------------------

Prop21 parse_prop21(std::string_view text) {
  for (int k = 1; k <= 12; ++k)
    if (roman(k) == text) return static_cast<Prop21>(k);
  throw precondition_error("unknown identity item '" + std::string(text) + "'");
}

Prop51 parse_prop51(std::string_view text) {
  for (int k = 1; k <= 4; ++k)
    if (roman(k) == text) return static_cast<Prop51>(k);
  throw precondition_error("unknown identity item '" + std::string(text) + "'");
}

std::string roman(int k) {
  static const std::array<const char*, 13> names{"",  "i",    "ii", "iii", "iv", "v",  "vi",
                                                 "vii", "viii", "ix", "x",   "xi", "xii"};
  return (k >= 1 && k <= 12) ? names[static_cast<std::size_t>(k)] : "?";
}

bool is_single_index(Prop21 item) { return static_cast<int>(item) <= 8; }

IdentityReport check_prop21(Prop21 item, std::int64_t first, std::int64_t second) {
  const int k = static_cast<int>(item);
  const std::string id = "prop21." + roman(k);
  auto f = [](std::int64_t i) { return Rational(fibonacci(i)); };
  auto l = [](std::int64_t i) { return Rational(lucas(i)); };

  Rational left, right;
  IdentityReport r;
  if (is_single_index(item)) {
    const std::int64_t n = first;
    const bool positive_only = item == Prop21::ii || item == Prop21::iii || item == Prop21::v || item == Prop21::vi;
    require(n >= (positive_only ? 1 : 0), id + " needs n >= " + (positive_only ? "1" : "0"));
    switch (item) {
      case Prop21::i: left = f(n) * f(n) + f(n + 1) * f(n + 1); right = f(2 * n + 1); break;
      case Prop21::ii: left = f(n + 1) * f(n + 1) - f(n - 1) * f(n - 1); right = f(2 * n); break;
      case Prop21::iii: left = l(n) * l(n) - f(n) * f(n); right = 4 * f(n - 1) * f(n + 1); break;
      case Prop21::iv: left = l(n) * l(n) + l(n + 1) * l(n + 1); right = 5 * f(2 * n + 1); break;
      case Prop21::v: left = l(n) * l(n); right = l(2 * n) + 2 * sign_power(n); break;
      case Prop21::vi: left = f(n + 1) + f(n - 1); right = l(n); break;
      case Prop21::vii: left = l(n) + l(n + 2); right = 5 * f(n + 1); break;
      case Prop21::viii: left = f(n) + f(n + 4); right = 3 * f(n + 2); break;
      default: break;
    }
    r = make_report(id, left, right);
    r.param("n", n);
  } else {
    const std::int64_t m = first, p = second;
    require(m >= 0 && p >= 0, id + " needs m, p >= 0");
    switch (item) {
      case Prop21::ix: left = f(m) * l(m + p); right = f(2 * m + p) + sign_power(m + 1) * f(p); break;
      case Prop21::x: left = f(m + p) * l(m); right = f(2 * m + p) + sign_power(m) * f(p); break;
      case Prop21::xi: left = f(m) * f(m + p); right = (l(2 * m + p) + sign_power(m + 1) * l(p)) / 5; break;
      case Prop21::xii: left = l(m) * l(p) + 5 * f(m) * f(p); right = 2 * l(m + p); break;
      default: break;
    }
    r = make_report(id, left, right);
    r.param("m", m).param("p", p);
  }
  return r;
}

IdentityReport check_prop51(Prop51 item, const Integer& a, std::int64_t n, std::int64_t l) {
  require(a >= 1, "prop51 needs a >= 1");
  require(n >= 0 && l >= 0, "prop51 needs n, l >= 0");
  const auto xs = terms(SequenceSpec::x_sequence(a), static_cast<std::size_t>(2 * n + l + 1));
  const auto ys = terms(SequenceSpec::y_sequence(a), static_cast<std::size_t>(2 * n + l + 1));
  auto x = [&](std::int64_t i) { return xs[static_cast<std::size_t>(i)]; };
  auto y = [&](std::int64_t i) { return ys[static_cast<std::size_t>(i)]; };
  const Integer neg_a_pow = ipow(-a, static_cast<unsigned long>(n));

  Integer left, right;
  switch (item) {
    case Prop51::i: left = y(n) * y(n + l); right = y(2 * n + l) + neg_a_pow * y(l); break;
    case Prop51::ii: left = x(n) * y(n + l); right = x(2 * n + l) - neg_a_pow * x(l); break;
    case Prop51::iii: left = x(n + l) * y(n); right = x(2 * n + l) + neg_a_pow * x(l); break;
    case Prop51::iv: left = (1 + 4 * a) * x(n) * x(n + l); right = y(2 * n + l) - neg_a_pow * y(l); break;
  }
  IdentityReport r = make_report("prop51." + roman(static_cast<int>(item)), Rational(left), Rational(right));
  r.param("a", to_string(a)).param("n", n).param("l", l);
  return r;
}

IdentityReport cassini_gfl(const GFLParams& params, std::int64_t n) {
  require(n >= 2, "cassini needs n >= 2");
  const Integer& p = params.p;
  const Integer& q = params.q;
  const auto g = terms({1, 1, p + 2 * q, q}, static_cast<std::size_t>(n + 2));
  const auto i = static_cast<std::size_t>(n);
  Integer left = g[i + 1] * g[i - 1] - g[i] * g[i];
  Integer right = sign_power(n - 1) * (p * p + 5 * q * q + 5 * p * q);
  IdentityReport r = make_report("prop33", Rational(left), Rational(right));
  r.param("p", to_string(p)).param("q", to_string(q)).param("n", n);
  return r;
}

Integer convolution(const GFLParams& params, std::int64_t n) {
  require(n >= 1, "convolution needs n >= 1");
  const auto g = terms({1, 1, params.p + 2 * params.q, params.q}, static_cast<std::size_t>(n + 1));
  Integer sum = 0;
  for (std::int64_t k = 1; k <= n; ++k) sum += g[static_cast<std::size_t>(k)] * g[static_cast<std::size_t>(n - k)];
  return sum;
}

IdentityReport check_prop32(const GFLParams& params, std::int64_t n) {
  require(n >= 2, "prop32 needs n >= 2");
  const Integer& p = params.p;
  const Integer& q = params.q;
  const Integer p2_5q2 = p * p + 5 * q * q;
  Integer right = n * gfl({10 * p * q, p2_5q2}, n) + gfl({p2_5q2 - 10 * p * q, 5 * p * q}, n) +
                  gfl({p2_5q2, 0}, n - 1) - n * gfl({0, p * p}, n - 1);
  Integer left = 5 * convolution(params, n);
  IdentityReport r = make_report("prop32", Rational(left), Rational(right));
  r.param("p", to_string(p)).param("q", to_string(q)).param("n", n);
  return r;
}

IdentityReport check_remark52(const Integer& a, const GFLParams& params, std::int64_t n) {
  require(n >= 1, "remark52 needs n >= 1");
  const Integer& p = params.p;
  const Integer& q = params.q;
  Rational left = p * term(SequenceSpec::x_sequence(a), n + 1) + q * term(SequenceSpec::y_sequence(a), n);
  auto right_for = [&](SReading reading) {
    return Rational(gen_s(a, {a * p, q}, n, reading) + gen_s(a, {p, 0}, n + 1, reading));
  };
  IdentityReport r = make_report("remark52", left, right_for(SReading::closed_form));
  r.param("a", to_string(a)).param("p", to_string(p)).param("q", to_string(q)).param("n", n);
  if (right_for(SReading::recurrence) != left) {
    r.errata.push_back("remark52 fails when s is read as the (1,a,p+2q,q)-numbers (a != 1, p != 0)");
  }
  return r;
}

QuadExt binet_scalar(BinetKind kind, const Integer& a, std::int64_t n) {
  require(a >= 1, "binet_scalar needs a >= 1");
  require(n >= 0, "binet_scalar needs n >= 0");
  const Rational d(1 + 4 * a);
  const Rational half(1, 2);
  auto root = [&](const Rational& v) { return is_rational_square(d) ? QuadExt::formal(half, v, d) : QuadExt(half, v, d); };
  const QuadExt alpha = root(half);
  const QuadExt beta = root(-half);
  if (kind == BinetKind::y_sequence) return pow(alpha, n) + pow(beta, n);
  return (pow(alpha, n) - pow(beta, n)) * quad_inv(alpha - beta);
}

}  // namespace gfl
