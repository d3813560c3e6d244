#pragma once

// The Hecke polynomial H_{G,mu} and exact checks of the Eichler-Shimura
// (Cayley-Hamilton) relation on parameter points.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hecke/matrix.hpp"
#include "hecke/satake.hpp"

namespace hecke {

/// H_{G,mu} = sum_i coefficients[i] X^{d-i}, coefficients in Satake coordinates.
/// coefficients[i] = (-1)^i v^{i*twist} tr(wedge^i r_mu).
struct HeckePolynomial {
  std::string group;
  Coweight mu;
  TwistConfig twist;
  int twist_exponent = 0;
  int e_over_f = 1;
  std::vector<Coweight> weights;
  std::vector<SphericalElement> coefficients;

  int degree() const { return static_cast<int>(weights.size()); }
};

HeckePolynomial hecke_polynomial(const BasedRootDatum& datum, const Coweight& mu, const TwistConfig& twist,
                                 int e_over_f = 1);

/// Coefficients of H evaluated at s; entry i multiplies X^{d-i}.
std::vector<Scalar> evaluate_coefficients(const HeckePolynomial& h, const SatakeParameter& s);

/// H reduced coefficientwise into a prime field.
struct ReducedHeckePolynomial {
  std::string group;
  Coweight mu;
  int twist_exponent = 0;
  ScalarDomain domain;
  std::vector<ReducedSymmetricFunction> coefficients;

  int degree() const { return static_cast<int>(coefficients.size()) - 1; }
};

ReducedHeckePolynomial reduce_mod_ell(const HeckePolynomial& h, const ScalarDomain& dom);
std::vector<Scalar> evaluate_coefficients(const ReducedHeckePolynomial& h, const SatakeParameter& s);

struct ExcursionValue {
  int index = 0;
  Scalar value;
};

/// Frobenius: tr(wedge^i) of the twisted Frobenius matrix. Inertia on an
/// unramified parameter acts trivially, so the trace is dim wedge^i = C(d, i).
std::vector<ExcursionValue> excursion_values(const BasedRootDatum& datum, const Coweight& mu,
                                             const SatakeParameter& s, int twist_exponent, bool frobenius);

struct RelationReport {
  std::string relation;
  std::string group;
  std::string mu;
  std::string twist;
  std::optional<int> twist_exponent;
  std::string domain;
  std::vector<std::string> parameter;
  ScalarMatrix residual;
  bool pass = false;
  /// inertia check only: whether (M - I)^d vanished.
  std::optional<bool> unipotent;
  /// ch check only: coefficient of X^{d-i} equals (-1)^i tr(wedge^i M) for all i.
  std::optional<bool> excursion_identity;
};

/// Residual sum_i coeff_values[i] M^{d-i}, i.e. H evaluated at M.
/// Rejects a dimension mismatch and a singular M.
RelationReport cayley_hamilton_check(const HeckePolynomial& h, const ScalarMatrix& m,
                                     std::span<const Scalar> coeff_values);

/// sum_{i=0}^{d} (-1)^i S_{wedge^{d-i}} M^i from excursion traces S_{wedge^k} = traces[k].
ScalarMatrix excursion_relation_residual(std::span<const Scalar> traces, const ScalarMatrix& m);

/// Traces of all exterior powers of an arbitrary square matrix (principal minor sums).
std::vector<Scalar> exterior_traces(const ScalarMatrix& m);

/// pass: sum_i (-1)^i C(d, d-i) M^i == (I - M)^d; unipotent: (M - I)^d == 0.
RelationReport inertia_relation_check(int d, const ScalarMatrix& m);

/// n choose k as a big integer.
mpz_class binomial(unsigned n, unsigned k);

}  // namespace hecke
