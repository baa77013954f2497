#include "gfl/orders.hpp"

#include <string>
#include <utility>

#include "gfl/quaternions.hpp"

namespace gfl {
namespace {

void axpy(IntVec& y, const Integer& k, const IntVec& x) {
  for (std::size_t i = 0; i < 4; ++i) y[i] -= k * x[i];
}

std::string vec_string(const IntVec& v) {
  std::string out = "(";
  for (std::size_t k = 0; k < 4; ++k) {
    if (k) out += ", ";
    out += to_string(v[k]);
  }
  return out + ")";
}

std::string range_string(IndexRange r) { return std::to_string(r.lo) + ".." + std::to_string(r.hi); }

IntVec scaled(const Integer& k, const Quaternion<Rational>& q) {
  IntVec v = integer_coords(q);
  for (auto& c : v) c *= k;
  return v;
}

using Builder = RationalQuaternion (*)(const Integer& a, const GFLParams&, std::int64_t, const AlgebraParams&);

// Shared scheme of remark41_closure and prop54_closure: `build` yields the
// unscaled quaternion for (p, q, n); `scale` is 5 or 1 + 4a.
IdentityReport closure(std::string id, const Integer& a, const Integer& scale, Builder build,
                       const AlgebraParams& algebra, IndexRange window, IndexRange box) {
  if (!algebra.is_integral()) throw precondition_error("order checks need integral gamma1, gamma2");
  if (window.lo < 1 || window.hi < window.lo) throw precondition_error("index window must be nonempty with n >= 1");
  if (box.hi < box.lo) throw precondition_error("parameter box must be nonempty");

  const AlgebraPtr<Rational> alg = rational_algebra(algebra);
  std::vector<RationalQuaternion> gens{RationalQuaternion(alg, Rational(1), Rational(0), Rational(0), Rational(0))};
  for (std::int64_t n : {1, 2})
    for (const GFLParams& pq : {GFLParams{1, 0}, GFLParams{0, 1}}) gens.push_back(build(a, pq, n, algebra) * Rational(scale));

  std::vector<IntVec> rows;
  for (const auto& g : gens) rows.push_back(integer_coords(g));
  const IntegerLattice L = hnf(rows);

  IdentityReport r;
  r.id = std::move(id);
  r.param("gamma1", to_string(algebra.gamma1)).param("gamma2", to_string(algebra.gamma2));
  r.param("window", range_string(window)).param("box", range_string(box));
  r.param("rank", static_cast<long long>(L.rank()));

  long long checked = 0, members = 0;
  std::optional<IntVec> first_outside;
  auto test = [&](const IntVec& v) {
    ++checked;
    if (member(L, v)) {
      ++members;
    } else if (!first_outside) {
      first_outside = v;
    }
  };

  for (std::int64_t n = window.lo; n <= window.hi; ++n)
    for (std::int64_t p = box.lo; p <= box.hi; ++p)
      for (std::int64_t q = box.lo; q <= box.hi; ++q) test(scaled(scale, build(a, {p, q}, n, algebra)));
  for (const auto& x : gens)
    for (const auto& y : gens) test(integer_coords(x * y));

  r.left = std::to_string(checked) + " checked";
  r.right = std::to_string(members) + " members";
  r.pass = checked == members;
  if (first_outside) r.param("first_non_member", vec_string(*first_outside));
  return r;
}

RationalQuaternion gfl_builder(const Integer&, const GFLParams& pq, std::int64_t n, const AlgebraParams& algebra) {
  return build_Gn(pq, n, algebra);
}

RationalQuaternion s_builder(const Integer& a, const GFLParams& pq, std::int64_t n, const AlgebraParams& algebra) {
  return build_Sn(a, pq, n, algebra);
}

}  // namespace

IntegerLattice hnf(std::vector<IntVec> rows) {
  IntegerLattice L;
  std::size_t r = 0;
  for (std::size_t col = 0; col < 4 && r < rows.size(); ++col) {
    bool has_pivot = false;
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i) {
        if (sgn(rows[i][col]) == 0) continue;
        if (best == rows.size() || abs(rows[i][col]) < abs(rows[best][col])) best = i;
      }
      if (best == rows.size()) break;
      has_pivot = true;
      std::swap(rows[r], rows[best]);
      bool cleared = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (sgn(rows[i][col]) == 0) continue;
        axpy(rows[i], Integer(rows[i][col] / rows[r][col]), rows[r]);
        if (sgn(rows[i][col]) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (!has_pivot) continue;
    if (sgn(rows[r][col]) < 0)
      for (auto& c : rows[r]) c = -c;
    for (std::size_t i = 0; i < r; ++i) {
      Integer k;
      mpz_fdiv_q(k.get_mpz_t(), rows[i][col].get_mpz_t(), rows[r][col].get_mpz_t());
      axpy(rows[i], k, rows[r]);
    }
    L.pivots_.push_back(col);
    ++r;
  }
  rows.resize(r);
  L.basis_ = std::move(rows);
  return L;
}

std::optional<std::vector<Integer>> member(const IntegerLattice& lattice, const IntVec& v) {
  IntVec rest = v;
  std::vector<Integer> coeffs;
  for (std::size_t i = 0; i < lattice.rank(); ++i) {
    const IntVec& row = lattice.basis()[i];
    const std::size_t c = lattice.pivots()[i];
    if (!mpz_divisible_p(rest[c].get_mpz_t(), row[c].get_mpz_t())) return std::nullopt;
    Integer k = rest[c] / row[c];
    axpy(rest, k, row);
    coeffs.push_back(std::move(k));
  }
  for (const auto& c : rest)
    if (sgn(c) != 0) return std::nullopt;
  return coeffs;
}

IntVec integer_coords(const Quaternion<Rational>& q) {
  IntVec v;
  for (std::size_t k = 0; k < 4; ++k) {
    if (!is_integer(q[k])) throw precondition_error("quaternion coordinate is not an integer: " + to_string(q[k]));
    v[k] = q[k].get_num();
  }
  return v;
}

IdentityReport remark41_closure(const AlgebraParams& algebra, IndexRange window, IndexRange box) {
  return closure("remark41", Integer(1), Integer(5), gfl_builder, algebra, window, box);
}

IdentityReport prop54_closure(const Integer& a, const AlgebraParams& algebra, IndexRange window, IndexRange box) {
  if (a < 1) throw precondition_error("prop54 needs a >= 1");
  IdentityReport r = closure("prop54", a, Integer(1 + 4 * a), s_builder, algebra, window, box);
  r.params.insert(r.params.begin(), {"a", to_string(a)});
  return r;
}

IdentityReport prop54_scalar_decomp(const Integer& a, const GFLParams& first, const GFLParams& second, std::int64_t n,
                                    std::int64_t m) {
  if (a < 1) throw precondition_error("prop54 needs a >= 1");
  if (n < 1 || m <= n) throw precondition_error("prop54 decomposition needs 1 <= n < m");
  const Integer& p = first.p;
  const Integer& q = first.q;
  const Integer& pp = second.p;
  const Integer& qq = second.q;
  const Integer k = 1 + 4 * a;
  const Integer an = ipow(Integer(-a), static_cast<unsigned long>(n));
  const Integer an1 = ipow(Integer(-a), static_cast<unsigned long>(n - 1));
  const Integer an_next = an * Integer(-a);

  auto s = [&](const Integer& P, const Integer& Q, std::int64_t idx) {
    return gen_s(a, {P, Q}, idx, SReading::closed_form);
  };
  const SequenceSpec xs = SequenceSpec::x_sequence(a);
  const SequenceSpec ys = SequenceSpec::y_sequence(a);
  auto x = [&](std::int64_t i) { return term(xs, i); };
  auto y = [&](std::int64_t i) { return term(ys, i); };

  const Integer left = k * s(p, q, n) * k * s(pp, qq, m);

  // Line after "applying Prop 5.1 and Remark 5.2", transcribed verbatim.
  const Rational k2 = Rational(Integer(k * k));
  Rational brackets = k2 * Rational(Integer(p * pp)) / Rational(k) * (y(n + m - 2) - Rational(an) * y(m - n));
  brackets += k2 * Rational(Integer(p * qq)) * (x(m + n - 1) - Rational(an1) * x(m - n + 1));
  brackets += k2 * Rational(Integer(pp * q)) * (x(n + m - 1) + Rational(an) * x(m - n - 1));
  brackets += k2 * Rational(Integer(q * qq)) * (y(n + m) + Rational(an) * y(m - n));

  Integer six = s(k * p * qq, k * q * qq, m + n);
  six += s(an * k * pp * q, an * k * q * qq, m - n);
  six += s(an * k * p * qq, an_next * p * pp, m - n + 1);
  six += s(an * k * p * qq, 0, m - n + 1);
  six += s(a * k * pp * q, p * pp, m + n - 2);
  six += s(a * k * pp * q, 0, m + n - 1);
  six *= k;

  IdentityReport r;
  r.id = "prop54-decomp";
  r.param("a", to_string(a)).param("p", to_string(p)).param("q", to_string(q));
  r.param("p'", to_string(pp)).param("q'", to_string(qq)).param("n", n).param("m", m);
  r.left = to_string(left);
  r.right = to_string(six);
  r.pass = left == six;
  if (brackets != Rational(left)) {
    r.errata.push_back("prop54: the four-bracket expansion via Prop 5.1 does not equal the direct product");
  }
  if (!r.pass) {
    r.errata.push_back("prop54: the six-term decomposition does not equal the direct product");
  }
  return r;
}

}  // namespace gfl
