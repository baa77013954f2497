#pragma once

// Integer lattices in quaternion coordinates {1, e1, e2, e3}: Hermite normal
// form, membership, and the closure checks for the orders of Remark 4.1 and
// Prop 5.4.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "gfl/exact_arith.hpp"
#include "gfl/quaternion.hpp"
#include "gfl/report.hpp"
#include "gfl/sequences.hpp"

namespace gfl {

using IntVec = std::array<Integer, 4>;

/// Row-style HNF: basis rows are upper triangular with strictly increasing
/// pivot columns, positive pivots, and entries above each pivot reduced into
/// [0, pivot).
class IntegerLattice {
 public:
  IntegerLattice() = default;

  const std::vector<IntVec>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::size_t rank() const { return basis_.size(); }

  friend IntegerLattice hnf(std::vector<IntVec> generators);

 private:
  std::vector<IntVec> basis_;
  std::vector<std::size_t> pivots_;
};

IntegerLattice hnf(std::vector<IntVec> generators);

/// Coordinates of v in the HNF basis, or nullopt when v is not in the span.
std::optional<std::vector<Integer>> member(const IntegerLattice& lattice, const IntVec& v);

/// Throws precondition_error when a coordinate is not an integer.
IntVec integer_coords(const Quaternion<Rational>& q);

struct IndexRange {
  std::int64_t lo, hi;
};

/// Lattice L spanned by 1 and 5 G_n^{p,q} for n in {1,2}, (p,q) in
/// {(1,0),(0,1)}. Passes iff every 5 G_n^{p,q} with n in `window` and
/// p, q in `box` lies in L, and all 25 products of the five generators do.
/// Throws precondition_error for non-integral gamma.
IdentityReport remark41_closure(const AlgebraParams& algebra, IndexRange window, IndexRange box);

/// The same scheme with generators 1 and (1+4a) S_n^{p,q}, a >= 1.
IdentityReport prop54_closure(const Integer& a, const AlgebraParams& algebra, IndexRange window, IndexRange box);

/// (1+4a) s_n^{p,q} (1+4a) s_m^{p',q'} against the six-term decomposition
///   (1+4a) [ s_{m+n}^{(1+4a)pq', (1+4a)qq'}
///          + s_{m-n}^{(-a)^n (1+4a)p'q, (-a)^n (1+4a)qq'}
///          + s_{m-n+1}^{(-a)^n (1+4a)pq', (-a)^{n+1} pp'}
///          + s_{m-n+1}^{(-a)^n (1+4a)pq', 0}
///          + s_{m+n-2}^{a(1+4a)p'q, pp'}
///          + s_{m+n-1}^{a(1+4a)p'q, 0} ]
/// with s read as p x_{n-1} + q y_n. The intermediate four-bracket
/// expansion is compared as well; its mismatch goes to errata.
/// Requires a >= 1 and 1 <= n < m.
IdentityReport prop54_scalar_decomp(const Integer& a, const GFLParams& first, const GFLParams& second, std::int64_t n,
                                    std::int64_t m);

}  // namespace gfl
