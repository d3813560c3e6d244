#pragma once

// Spherical Hecke algebra in Satake coordinates and its evaluation at points
// of the dual torus.

#include <string>
#include <vector>

#include "hecke/characters.hpp"
#include "hecke/coeff_ring.hpp"
#include "hecke/matrix.hpp"
#include "hecke/root_data.hpp"

namespace hecke {

/// The spherical algebra is identified with W-invariant functions on the dual torus.
using SphericalElement = SymmetricFunction;

/// A point of the dual torus: one invertible scalar per lattice basis vector.
class SatakeParameter {
 public:
  SatakeParameter(ScalarDomain domain, std::vector<Scalar> entries);
  /// (x1, ..., xn) in the formal domain.
  static SatakeParameter symbolic(std::size_t rank);
  static SatakeParameter ones(const ScalarDomain& domain, std::size_t rank);

  const ScalarDomain& domain() const { return domain_; }
  const std::vector<Scalar>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  /// s^lambda = prod_j s_j^{lambda_j}
  Scalar power(const Coweight& lambda) const;
  /// Parameter with entries permuted/transformed by a Weyl element: (w s)^lambda = s^{w^-1 lambda}.
  SatakeParameter transformed(const IntMatrix& w) const;

  std::vector<std::string> entry_strings() const;

 private:
  ScalarDomain domain_;
  std::vector<Scalar> entries_;
};

/// A spherical function reduced into a concrete scalar ring.
struct ReducedSymmetricFunction {
  ScalarDomain domain;
  std::map<Coweight, Scalar> terms;
};

ReducedSymmetricFunction reduce(const SymmetricFunction& f, const ScalarDomain& dom);

/// sum_lambda coeff(lambda) s^lambda
Scalar evaluate(const WeightMultiset& f, const SatakeParameter& s);
inline Scalar evaluate(const SymmetricFunction& f, const SatakeParameter& s) { return evaluate(f.multiset(), s); }
/// Raises DomainMismatch when f was reduced into a different ring.
Scalar evaluate(const ReducedSymmetricFunction& f, const SatakeParameter& s);

/// How the Frobenius eigenvalues are scaled by a power of v.
struct TwistConfig {
  enum class Preset { paper, classical, explicit_exponent };
  Preset preset = Preset::paper;
  int exponent = 0;  // only for explicit_exponent

  static TwistConfig parse(const std::string& text);
  std::string preset_name() const;
};

/// paper: [E:F] * dim r_mu; classical: <2rho, mu>; explicit: as given.
int resolve_twist(const BasedRootDatum& datum, const Coweight& mu, const TwistConfig& twist, int e_over_f);

/// r_mu(s) scaled by v^twist in the weight basis.
struct FrobeniusMatrix {
  std::vector<Coweight> weights;
  std::vector<Scalar> diagonal;
  ScalarDomain domain;

  std::size_t size() const { return diagonal.size(); }
  ScalarMatrix dense() const { return ScalarMatrix::diagonal(domain, diagonal); }
};

FrobeniusMatrix frobenius_matrix(const BasedRootDatum& datum, const Coweight& mu, const SatakeParameter& s,
                                 int twist_exponent);

/// tr of the i-th exterior power: the i-th elementary symmetric function of the diagonal.
Scalar trace_of(const FrobeniusMatrix& m, int i);

}  // namespace hecke
