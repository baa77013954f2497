#pragma once

// (a,b,x0,x1)-numbers d_n = a d_{n-1} + b d_{n-2}, the generalized
// Fibonacci-Lucas numbers g_n^{p,q}, the (1,a,p+2q,q)-numbers s_n^{p,q}, and
// exact checkers for the scalar identities built on them.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gfl/exact_arith.hpp"
#include "gfl/report.hpp"

namespace gfl {

struct SequenceSpec {
  Integer a, b, x0, x1;

  static SequenceSpec fibonacci() { return {1, 1, 0, 1}; }
  static SequenceSpec lucas() { return {1, 1, 2, 1}; }
  /// (1,a,0,1)-numbers x_n
  static SequenceSpec x_sequence(const Integer& a) { return {1, a, 0, 1}; }
  /// (1,a,2,1)-numbers y_n
  static SequenceSpec y_sequence(const Integer& a) { return {1, a, 2, 1}; }
};

struct GFLParams {
  Integer p, q;
};

/// How term() extends a sequence to negative indices.
enum class NegativeIndexMode {
  /// d_{n-2} = (d_n - a d_{n-1}) / b over the rationals.
  recurrence,
  /// x_n = (-1)^{-n+1} x_{-n}; only defined for specs of shape (1,a,0,1).
  /// Agrees with the backward recurrence only when a = 1.
  paper_rule,
};

struct unsupported_convention : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

Rational term(const SequenceSpec& spec, std::int64_t n, NegativeIndexMode mode = NegativeIndexMode::recurrence);

/// d_0 .. d_{count-1}
std::vector<Integer> terms(const SequenceSpec& spec, std::size_t count);

/// Binary powering of the companion matrix [[a, b], [1, 0]].
Integer term_fast(const SequenceSpec& spec, std::uint64_t n);

Integer fibonacci(std::int64_t n);
Integer lucas(std::int64_t n);

/// g_n^{p,q}: g_0 = p + 2q, g_1 = q, g_n = g_{n-1} + g_{n-2}. n >= 0.
Integer gfl(const GFLParams& params, std::int64_t n);

/// Two readings of s_n^{p,q} for the (1,a,...) family. They agree for a = 1
/// or p = 0 and differ from n = 2 on otherwise.
enum class SReading {
  /// (1,a,p+2q,q)-numbers: s_0 = p + 2q, s_1 = q, s_n = s_{n-1} + a s_{n-2}.
  recurrence,
  /// s_n = p x_{n-1} + q y_n, with x_{-1} = 1 from the sign-flip rule.
  closed_form,
};

Integer gen_s(const Integer& a, const GFLParams& params, std::int64_t n, SReading reading = SReading::recurrence);

enum class Prop21 { i = 1, ii, iii, iv, v, vi, vii, viii, ix, x, xi, xii };
enum class Prop51 { i = 1, ii, iii, iv };

Prop21 parse_prop21(std::string_view roman);
Prop51 parse_prop51(std::string_view roman);
std::string roman(int k);

/// True for items indexed by a single n; the rest take (m, p).
bool is_single_index(Prop21 item);

/// Items i..viii read `first` as n (the second argument is ignored);
/// items ix..xii read (first, second) as (m, p).
IdentityReport check_prop21(Prop21 item, std::int64_t first, std::int64_t second = 0);

/// Item iv is compared as (1+4a) x_n x_{n+l} = y_{2n+l} - (-a)^n y_l.
IdentityReport check_prop51(Prop51 item, const Integer& a, std::int64_t n, std::int64_t l);

/// g_{n+1} g_{n-1} - g_n^2 against (-1)^{n-1} (p^2 + 5q^2 + 5pq), n >= 2.
IdentityReport cassini_gfl(const GFLParams& params, std::int64_t n);

/// sum_{k=1}^{n} g_k g_{n-k} (the k = n term uses g_0 = p + 2q). n >= 1.
Integer convolution(const GFLParams& params, std::int64_t n);

/// 5 * convolution against the four-term g-combination, n >= 2.
IdentityReport check_prop32(const GFLParams& params, std::int64_t n);

/// p x_{n+1} + q y_n = s_n^{ap,q} + s_{n+1}^{p,0}, evaluated with the
/// closed-form reading of s; a disagreement under the recurrence reading is
/// noted as errata. n >= 1.
IdentityReport check_remark52(const Integer& a, const GFLParams& params, std::int64_t n);

enum class BinetKind { x_sequence, y_sequence };

/// (alpha^n - beta^n)/(alpha - beta) or alpha^n + beta^n with
/// alpha, beta = (1 +- sqrt(1+4a))/2. When 1+4a is a perfect square the
/// computation runs in the formal ring Q[t]/(t^2 - (1+4a)).
QuadExt binet_scalar(BinetKind kind, const Integer& a, std::int64_t n);

}  // namespace gfl
