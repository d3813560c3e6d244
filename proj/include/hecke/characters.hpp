#pragma once

// Characters of the dual group, written as finite sums of e^lambda over
// coweights with Laurent coefficients.

#include <map>
#include <vector>

#include "hecke/coeff_ring.hpp"
#include "hecke/root_data.hpp"

namespace hecke {

/// Finite formal sum of e^lambda with Laurent coefficients.
class WeightMultiset {
 public:
  using Terms = std::map<Coweight, Laurent>;

  WeightMultiset() = default;
  explicit WeightMultiset(Terms terms);
  static WeightMultiset constant(std::size_t rank, const Laurent& c);
  static WeightMultiset monomial(const Coweight& lambda, const Laurent& c = Laurent(1));

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Laurent coeff(const Coweight& lambda) const;
  void add_term(const Coweight& lambda, const Laurent& c);

  WeightMultiset& operator+=(const WeightMultiset& o);
  WeightMultiset& operator-=(const WeightMultiset& o);
  friend WeightMultiset operator+(WeightMultiset a, const WeightMultiset& b) { return a += b; }
  friend WeightMultiset operator-(WeightMultiset a, const WeightMultiset& b) { return a -= b; }
  friend WeightMultiset operator*(const WeightMultiset& a, const WeightMultiset& b);
  friend WeightMultiset operator*(const Laurent& c, const WeightMultiset& a);

  friend bool operator==(const WeightMultiset&, const WeightMultiset&) = default;

  /// Image under a lattice map applied to every weight.
  WeightMultiset transformed(const IntMatrix& m) const;

 private:
  Terms terms_;
};

/// A W-invariant WeightMultiset: the Satake coordinates of a spherical Hecke
/// algebra element, or the character of a representation of the dual group.
class SymmetricFunction {
 public:
  SymmetricFunction() = default;
  /// Validates W-invariance; throws ValidationError otherwise.
  SymmetricFunction(const BasedRootDatum& datum, WeightMultiset f);
  /// The constant c (rank-n lattice).
  static SymmetricFunction constant(std::size_t rank, const Laurent& c);

  const WeightMultiset& multiset() const { return f_; }
  const WeightMultiset::Terms& terms() const { return f_.terms(); }
  bool is_zero() const { return f_.is_zero(); }

  SymmetricFunction& operator+=(const SymmetricFunction& o);
  SymmetricFunction& operator-=(const SymmetricFunction& o);
  friend SymmetricFunction operator+(SymmetricFunction a, const SymmetricFunction& b) { return a += b; }
  friend SymmetricFunction operator-(SymmetricFunction a, const SymmetricFunction& b) { return a -= b; }
  friend SymmetricFunction operator*(const SymmetricFunction& a, const SymmetricFunction& b);
  friend SymmetricFunction operator*(const Laurent& c, const SymmetricFunction& a);

  friend bool operator==(const SymmetricFunction&, const SymmetricFunction&) = default;

 private:
  struct Trusted {};
  SymmetricFunction(Trusted, WeightMultiset f) : f_(std::move(f)) {}
  WeightMultiset f_;
};

bool is_weyl_invariant(const BasedRootDatum& datum, const WeightMultiset& f);

/// m_lambda: sum of e^mu over the orbit of a dominant lambda.
SymmetricFunction orbit_character(const BasedRootDatum& datum, const Coweight& lambda);

/// All weights of the irreducible representation with highest weight lambda,
/// i.e. every mu whose dominant representative is <= lambda.
std::vector<Coweight> weights_of_irreducible(const BasedRootDatum& datum, const Coweight& lambda);

/// Dominant mu <= lambda, ordered by descending <2rho, mu> then descending lexicographically.
std::vector<Coweight> dominant_weights_below(const BasedRootDatum& datum, const Coweight& lambda);

/// Dominant-weight multiplicities of the irreducible representation, by
/// Freudenthal's recursion.
std::map<Coweight, long> freudenthal_multiplicities(const BasedRootDatum& datum, const Coweight& lambda);

/// chi_lambda, the character of the irreducible representation of highest weight lambda.
SymmetricFunction weyl_character(const BasedRootDatum& datum, const Coweight& lambda);

/// Weights of r_mu in canonical (lexicographically descending) order.
std::vector<Coweight> minuscule_weights(const BasedRootDatum& datum, const Coweight& mu);

/// Character of the i-th exterior power of the representation with the given weights.
SymmetricFunction ext_power_character(const BasedRootDatum& datum, const std::vector<Coweight>& weights,
                                      int i);

/// Coefficients c_lambda with f = sum c_lambda chi_lambda.
std::map<Coweight, Laurent> decompose(const BasedRootDatum& datum, const SymmetricFunction& f);

/// Sum of all coefficients specialised at v = 1: the value at the all-ones torus point.
mpz_class value_at_ones(const SymmetricFunction& f);

}  // namespace hecke
