#include "hecke/hecke_poly.hpp"

namespace hecke {

mpz_class binomial(unsigned n, unsigned k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

HeckePolynomial hecke_polynomial(const BasedRootDatum& datum, const Coweight& mu, const TwistConfig& twist,
                                 int e_over_f) {
  HeckePolynomial h;
  h.group = datum.label();
  h.mu = mu;
  h.twist = twist;
  h.e_over_f = e_over_f;
  h.weights = minuscule_weights(datum, mu);
  h.twist_exponent = resolve_twist(datum, mu, twist, e_over_f);
  const int d = h.degree();
  for (int i = 0; i <= d; ++i) {
    Laurent scale = Laurent::monomial(i % 2 == 0 ? 1 : -1, i * h.twist_exponent);
    h.coefficients.push_back(scale * ext_power_character(datum, h.weights, i));
  }
  return h;
}

std::vector<Scalar> evaluate_coefficients(const HeckePolynomial& h, const SatakeParameter& s) {
  std::vector<Scalar> out;
  for (const SphericalElement& c : h.coefficients) out.push_back(evaluate(c, s));
  return out;
}

ReducedHeckePolynomial reduce_mod_ell(const HeckePolynomial& h, const ScalarDomain& dom) {
  if (dom.kind() != DomainKind::prime_field) throw ValidationError("reduction needs a prime-field domain");
  ReducedHeckePolynomial r{h.group, h.mu, h.twist_exponent, dom, {}};
  for (const SphericalElement& c : h.coefficients) r.coefficients.push_back(reduce(c, dom));
  return r;
}

std::vector<Scalar> evaluate_coefficients(const ReducedHeckePolynomial& h, const SatakeParameter& s) {
  std::vector<Scalar> out;
  for (const ReducedSymmetricFunction& c : h.coefficients) out.push_back(evaluate(c, s));
  return out;
}

std::vector<ExcursionValue> excursion_values(const BasedRootDatum& datum, const Coweight& mu,
                                             const SatakeParameter& s, int twist_exponent, bool frobenius) {
  std::vector<ExcursionValue> out;
  if (frobenius) {
    FrobeniusMatrix m = frobenius_matrix(datum, mu, s, twist_exponent);
    for (int i = 0; i <= static_cast<int>(m.size()); ++i) out.push_back({i, trace_of(m, i)});
  } else {
    const auto d = static_cast<unsigned>(minuscule_weights(datum, mu).size());
    for (unsigned i = 0; i <= d; ++i) out.push_back({static_cast<int>(i), s.domain().from_int(binomial(d, i))});
  }
  return out;
}

namespace {

void require_invertible(const ScalarMatrix& m) {
  Scalar det = m.determinant();
  if (!det.is_invertible())
    throw ValidationError("matrix is singular (det = " + det.str() + "); the relation needs an invertible element");
}

}  // namespace

RelationReport cayley_hamilton_check(const HeckePolynomial& h, const ScalarMatrix& m,
                                     std::span<const Scalar> coeff_values) {
  const int d = h.degree();
  if (!m.is_square() || static_cast<int>(m.rows()) != d)
    throw ValidationError("matrix must be " + std::to_string(d) + "x" + std::to_string(d));
  if (static_cast<int>(coeff_values.size()) != d + 1)
    throw ValidationError("need " + std::to_string(d + 1) + " coefficient values");
  require_invertible(m);

  const ScalarDomain& dom = m.domain();
  // Horner: ((c0 M + c1) M + c2) ...
  ScalarMatrix acc(dom, m.rows(), m.cols());
  for (int i = 0; i <= d; ++i) {
    if (!dom.contains(coeff_values[i])) throw DomainMismatch("coefficient value outside " + dom.describe());
    acc = acc * m + coeff_values[i] * ScalarMatrix::identity(dom, m.rows());
  }

  RelationReport r;
  r.relation = "cayley-hamilton";
  r.group = h.group;
  r.mu = h.mu.str();
  r.twist = h.twist.preset_name();
  r.twist_exponent = h.twist_exponent;
  r.domain = dom.describe();
  r.pass = acc.is_zero();
  r.residual = std::move(acc);
  return r;
}

ScalarMatrix excursion_relation_residual(std::span<const Scalar> traces, const ScalarMatrix& m) {
  if (!m.is_square() || traces.size() != m.rows() + 1)
    throw ValidationError("need d+1 traces for a d x d matrix");
  const std::size_t d = m.rows();
  const ScalarDomain& dom = m.domain();
  ScalarMatrix acc(dom, d, d);
  ScalarMatrix power = ScalarMatrix::identity(dom, d);
  for (std::size_t i = 0; i <= d; ++i) {
    Scalar c = traces[d - i];
    if (i % 2 == 1) c = -c;
    acc += c * power;
    power = power * m;
  }
  return acc;
}

std::vector<Scalar> exterior_traces(const ScalarMatrix& m) {
  std::vector<Scalar> out;
  for (std::size_t k = 0; k <= m.rows(); ++k) out.push_back(m.principal_minor_sum(k));
  return out;
}

RelationReport inertia_relation_check(int d, const ScalarMatrix& m) {
  if (d < 1) throw ValidationError("d must be at least 1");
  if (!m.is_square() || static_cast<int>(m.rows()) != d)
    throw ValidationError("matrix must be " + std::to_string(d) + "x" + std::to_string(d));
  const ScalarDomain& dom = m.domain();
  const auto n = static_cast<std::size_t>(d);
  const ScalarMatrix id = ScalarMatrix::identity(dom, n);

  ScalarMatrix lhs(dom, n, n);
  ScalarMatrix power = id;
  for (int i = 0; i <= d; ++i) {
    Scalar c = dom.from_int(binomial(static_cast<unsigned>(d), static_cast<unsigned>(d - i)));
    if (i % 2 == 1) c = -c;
    lhs += c * power;
    power = power * m;
  }
  ScalarMatrix rhs = matrix_power(id - m, static_cast<unsigned>(d));
  ScalarMatrix unipotent = matrix_power(m - id, static_cast<unsigned>(d));

  RelationReport r;
  r.relation = "inertia";
  r.domain = dom.describe();
  r.residual = lhs - rhs;
  r.pass = r.residual.is_zero();
  r.unipotent = unipotent.is_zero();
  return r;
}

}  // namespace hecke
