#pragma once

// Shared test helpers: seeded generators for property tests and independent
// oracles that avoid the library code paths they check.

#include <cstdint>
#include <random>
#include <vector>

#include "hecke/characters.hpp"
#include "hecke/coeff_ring.hpp"
#include "hecke/matrix.hpp"
#include "hecke/root_data.hpp"

namespace testing_support {

using namespace hecke;

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : g_(seed) {}

  long range(long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    return d(g_);
  }
  bool coin() { return range(0, 1) == 1; }

  /// Up to `terms` monomials, exponents in [-span, span], coefficients in [-9, 9].
  Laurent laurent(int terms = 4, int span = 4) {
    Laurent x;
    const long n = range(0, terms);
    for (long i = 0; i < n; ++i) x += Laurent::monomial(range(-9, 9), static_cast<int>(range(-span, span)));
    return x;
  }

  Coweight coweight(std::size_t n, int bound) {
    IntVector c(n);
    for (auto& x : c) x = static_cast<int>(range(-bound, bound));
    return Coweight(c);
  }

  std::mt19937_64& engine() { return g_; }

 private:
  std::mt19937_64 g_;
};

/// Weyl dimension formula prod_{alpha > 0} <alpha, lambda + rho^vee> / <alpha, rho^vee>,
/// with positive roots found by brute-force closure of the simple ones.
mpz_class weyl_dimension(const BasedRootDatum& datum, const Coweight& lambda);

/// chi * A_{2rho} == A_{2 lambda + 2rho} in the doubled lattice, A the W-alternating sum.
bool alternating_sum_identity(const BasedRootDatum& datum, const Coweight& lambda, const SymmetricFunction& chi);

/// Determinant by the Leibniz permutation sum.
Scalar leibniz_det(const ScalarMatrix& m);

/// Every element of W, by closure of generator matrices (no use of WeylGroup).
std::vector<IntMatrix> weyl_closure(const BasedRootDatum& datum);

/// (a^e) mod p by repeated multiplication.
std::uint64_t slow_pow_mod(std::uint64_t a, long e, std::uint64_t p);

}  // namespace testing_support
