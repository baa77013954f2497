#pragma once

// Shared test helpers: a seeded generator for random samples and oracles
// that do not go through the library's own recurrences.

#include <gmp.h>

#include <cstdint>
#include <random>
#include <vector>

#include "gfl/exact_arith.hpp"
#include "gfl/quaternion.hpp"

namespace gfl::test {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }
  bool coin() { return integer(0, 1) == 1; }

  /// num/den with |num| <= bound, 1 <= den <= bound.
  Rational rational(std::int64_t bound = 20) {
    return make_rational(Integer(static_cast<long>(integer(-bound, bound))),
                         Integer(static_cast<long>(integer(1, bound))));
  }
  Rational nonzero_rational(std::int64_t bound = 20) {
    for (;;) {
      Rational r = rational(bound);
      if (sgn(r) != 0) return r;
    }
  }

  QuadExt quad(const Rational& d, std::int64_t bound = 20) { return QuadExt(rational(bound), rational(bound), d); }

  Polynomial polynomial(int max_degree, std::int64_t bound = 9) {
    std::vector<Rational> c;
    const auto deg = integer(0, max_degree);
    for (std::int64_t k = 0; k <= deg; ++k) c.push_back(rational(bound));
    return Polynomial(std::move(c));
  }

  std::uint64_t bits() { return rng_(); }
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// GMP's own Fibonacci and Lucas numbers; n >= 0.
inline Integer fib_oracle(unsigned long n) {
  Integer f;
  mpz_fib_ui(f.get_mpz_t(), n);
  return f;
}

inline Integer lucas_oracle(unsigned long n) {
  Integer l;
  mpz_lucnum_ui(l.get_mpz_t(), n);
  return l;
}

/// d_0 .. d_n of d_k = a d_{k-1} + b d_{k-2} by straight iteration.
inline std::vector<Integer> iterate(const Integer& a, const Integer& b, const Integer& x0, const Integer& x1,
                                    std::size_t n) {
  std::vector<Integer> d{x0, x1};
  while (d.size() <= n) d.push_back(Integer(a * d[d.size() - 1] + b * d[d.size() - 2]));
  d.resize(n + 1);
  return d;
}

}  // namespace gfl::test
