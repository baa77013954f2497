#pragma once

// Quaternions built from (a,b,x0,x1)-numbers, h(x)-Fibonacci-Lucas
// polynomials and quaternions, their Binet representations, and the
// Catalan / Cassini checks.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "gfl/exact_arith.hpp"
#include "gfl/quaternion.hpp"
#include "gfl/report.hpp"
#include "gfl/sequences.hpp"

namespace gfl {

using RationalQuaternion = Quaternion<Rational>;
using PolyQuaternion = Quaternion<Polynomial>;
using QuadQuaternion = Quaternion<QuadExt>;

AlgebraPtr<Rational> rational_algebra(const AlgebraParams& params,
                                      TableConvention table = TableConvention::corrected);

/// D_n = d_n + d_{n+1} e1 + d_{n+2} e2 + d_{n+3} e3.
RationalQuaternion build_Dn(const SequenceSpec& spec, std::int64_t n, const AlgebraParams& algebra);
/// G_n^{p,q}, n >= 1.
RationalQuaternion build_Gn(const GFLParams& params, std::int64_t n, const AlgebraParams& algebra);
/// S_n^{p,q} over the (1,a,...) family, n >= 1.
RationalQuaternion build_Sn(const Integer& a, const GFLParams& params, std::int64_t n, const AlgebraParams& algebra,
                            SReading reading = SReading::recurrence);

/// True iff all four coordinates vanish.
bool zero_test(const RationalQuaternion& q);

struct HxParams {
  Polynomial h;
  Integer p, q;
};

/// g_{h,n}^{p,q}(x): g_0 = p + 2q, g_1 = q, g_n = h g_{n-1} + g_{n-2}.
Polynomial hx_poly(const HxParams& hx, std::int64_t n);
/// g_{h,0} .. g_{h,count-1}
std::vector<Polynomial> hx_polys(const HxParams& hx, std::size_t count);
/// G_{h,n}^{p,q}(x) = sum_k g_{h,n+k}(x) e_k.
PolyQuaternion hx_quat(const HxParams& hx, std::int64_t n, const AlgebraParams& algebra);

/// G_{h,0} .. G_{h,count-1} over one algebra.
std::vector<PolyQuaternion> hx_quats(const HxParams& hx, std::size_t count, const AlgebraParams& algebra);

/// Coordinate-wise evaluation at x.
RationalQuaternion evaluate(const PolyQuaternion& q, const Rational& x, const AlgebraPtr<Rational>& algebra);

/// Roots (h(x) +- sqrt(h(x)^2 + 4)) / 2 of r^2 - h(x) r - 1. Throws when the
/// radicand is a rational square.
std::pair<QuadExt, QuadExt> binet_roots(const Polynomial& h, const Rational& x);

/// Binet data for one (h, p, q) at one evaluation point.
///
/// Scalar:     g_{h,n} = [(p+2q)(r1^{n-1} - r2^{n-1}) + q(r1^n - r2^n)] / (r1 - r2)
/// Quaternion: G_{h,n} = (R1 r1^n - R2 r2^n) / (r1 - r2),
///             R_j = sum_k [(p+2q) r_j^{k-1} + q r_j^k] e_k
///
/// The *_printed members evaluate the coefficient-swapped variant
/// [(p+2q)(r1^{n+1} - r2^{n+1}) - q(r1^n - r2^n)] / (r1 - r2), which does not
/// reproduce the seed g_{h,1} = q.
class HxBinet {
 public:
  HxBinet(const HxParams& hx, const Rational& x, const AlgebraParams& algebra);

  const QuadExt& r1() const { return r1_; }
  const QuadExt& r2() const { return r2_; }
  /// h(x)^2 + 4 = (r1 - r2)^2
  const Rational& radicand() const { return r1_.d(); }
  const Rational& h_value() const { return h_value_; }

  QuadExt scalar(std::int64_t n) const;
  QuadExt scalar_printed(std::int64_t n) const;
  QuadQuaternion quaternion(std::int64_t n) const;

  const QuadQuaternion& R1() const { return R1_; }
  const QuadQuaternion& R2() const { return R2_; }
  const QuadQuaternion& R1_printed() const { return R1p_; }
  const QuadQuaternion& R2_printed() const { return R2p_; }
  const AlgebraPtr<QuadExt>& algebra() const { return alg_; }

  /// Embeds a rational quaternion into Q(sqrt(radicand)).
  QuadQuaternion lift(const RationalQuaternion& q) const;

 private:
  Rational h_value_;
  Rational c0_, q_;
  QuadExt r1_, r2_, inv_delta_;
  AlgebraPtr<QuadExt> alg_;
  QuadQuaternion R1_, R2_, R1p_, R2p_;
};

QuadExt binet_hx(const HxParams& hx, const Rational& x, std::int64_t n);
QuadExt binet_hx_printed(const HxParams& hx, const Rational& x, std::int64_t n);
QuadQuaternion binet_hx_quat(const HxParams& hx, const Rational& x, std::int64_t n, const AlgebraParams& algebra);

/// Catalan's identity for h(x)-quaternions at one evaluation point.
///
/// Three routes are compared exactly:
///  - left: G_{n+s} G_{n-s} - G_n^2 with G built by the recurrence over Q;
///  - brute force: the same expression with every G replaced by its Binet
///    representation and multiplied in Q(sqrt(D)) quaternions;
///  - closed form: (-1)^{n+s+1}/D [R1 R2 ((-1)^{s+1} + r1^{2s})
///                                + R2 R1 ((-1)^{s+1} + r2^{2s})].
/// The variant with r^2 in place of r^{2s}, R1 R2 in both terms and the
/// printed R_j is evaluated too; a mismatch goes to errata.
class CatalanVerifier {
 public:
  CatalanVerifier(const HxParams& hx, const Rational& x, const AlgebraParams& algebra);

  /// n >= 1, 1 <= s <= n.
  IdentityReport check(std::int64_t n, std::int64_t s);

  RationalQuaternion lhs(std::int64_t n, std::int64_t s);
  QuadQuaternion brute_force(std::int64_t n, std::int64_t s);
  QuadQuaternion closed_form(std::int64_t n, std::int64_t s) const;
  QuadQuaternion printed_form(std::int64_t n, std::int64_t s) const;

 private:
  const RationalQuaternion& recurrence_quat(std::int64_t k);
  const QuadQuaternion& binet_quat(std::int64_t k);
  const std::pair<QuadQuaternion, QuadQuaternion>& right_sides(std::int64_t s);
  // G_n^2 memo over an already grown cache.
  template <class Q>
  static const Q& square(std::vector<std::optional<Q>>& memo, const std::vector<Q>& values, std::int64_t n) {
    const auto i = static_cast<std::size_t>(n);
    if (memo.size() <= i) memo.resize(i + 1);
    if (!memo[i]) memo[i].emplace(qmul(values[i], values[i]));
    return *memo[i];
  }

  HxParams hx_;
  Rational x_;
  AlgebraParams params_;
  AlgebraPtr<Rational> ralg_;
  HxBinet binet_;
  std::vector<Rational> g_values_;
  std::vector<RationalQuaternion> rec_cache_;
  std::vector<QuadQuaternion> binet_cache_;
  std::vector<std::optional<RationalQuaternion>> rec_squares_;
  std::vector<std::optional<QuadQuaternion>> binet_squares_;
  QuadQuaternion R1R2_, R2R1_, R1R2_printed_;
  std::vector<std::optional<std::pair<QuadQuaternion, QuadQuaternion>>> rhs_cache_;
};

IdentityReport catalan_check(const HxParams& hx, const Rational& x, std::int64_t n, std::int64_t s,
                             const AlgebraParams& algebra);
/// catalan_check with s = 1.
IdentityReport cassini_check(const HxParams& hx, const Rational& x, std::int64_t n, const AlgebraParams& algebra);

/// binet_hx against the recurrence value at x; the printed form's
/// disagreement goes to errata.
IdentityReport check_thm46(const HxParams& hx, const Rational& x, std::int64_t n);
/// binet_hx_quat against hx_quat evaluated at x.
IdentityReport check_thm47(const HxParams& hx, const Rational& x, std::int64_t n, const AlgebraParams& algebra);
/// The two checks above over many n, sharing the Binet data and the
/// recurrence. Each element equals the single-n report.
std::vector<IdentityReport> check_thm46(const HxParams& hx, const Rational& x, const std::vector<std::int64_t>& ns);
std::vector<IdentityReport> check_thm47(const HxParams& hx, const Rational& x, const std::vector<std::int64_t>& ns,
                                        const AlgebraParams& algebra);
/// zero_test(S_n^{p,q}) holds exactly when p = q = 0.
IdentityReport check_remark53(const Integer& a, const GFLParams& params, std::int64_t n, const AlgebraParams& algebra);
/// Associativity on all 64 basis triples with e3^2 = -gamma1 gamma2; the
/// printed-table failure count goes to errata.
IdentityReport check_table(const AlgebraParams& algebra);

}  // namespace gfl
