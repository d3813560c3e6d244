#pragma once

// Iwahori-Hecke algebra of the extended affine Weyl group X_*(T) x| W in the
// T_w basis over Z[v, v^-1], with q = v^2:
//
//   T_x T_y = T_{xy}                     if l(xy) = l(x) + l(y)
//   T_s T_x = (q - 1) T_x + q T_{sx}     if l(sx) < l(x)
//
// Bernstein elements theta_lambda = v^{-l(t_a) + l(t_b)} T_{t_a} T_{t_b}^{-1}
// for lambda = a - b with a, b dominant. W-invariant combinations of thetas
// form the center; multiplying a central element by the spherical idempotent
// e_K and reading off double-coset coefficients gives the inverse Satake
// transform.

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "hecke/characters.hpp"
#include "hecke/coeff_ring.hpp"
#include "hecke/root_data.hpp"

namespace hecke {

/// t_translation * w, with w addressed by its index in the datum's WeylGroup.
struct ExtAffineWeylElement {
  Coweight translation;
  std::size_t finite = 0;

  friend auto operator<=>(const ExtAffineWeylElement&, const ExtAffineWeylElement&) = default;
  friend bool operator==(const ExtAffineWeylElement&, const ExtAffineWeylElement&) = default;
};

class AffineWeylGroup {
 public:
  explicit AffineWeylGroup(BasedRootDatum datum);

  const BasedRootDatum& datum() const { return datum_; }
  const WeylGroup& finite_group() const { return datum_.weyl_group(); }

  ExtAffineWeylElement identity() const;
  ExtAffineWeylElement translation(const Coweight& lambda) const;
  ExtAffineWeylElement finite(std::size_t w) const;

  /// (a, u)(b, w) = (a + u b, u w)
  ExtAffineWeylElement multiply(const ExtAffineWeylElement& x, const ExtAffineWeylElement& y) const;
  ExtAffineWeylElement inverse(const ExtAffineWeylElement& x) const;

  /// l(t_lambda w) = sum over alpha > 0 of |<alpha, lambda>| if w^-1 alpha > 0,
  /// |<alpha, lambda> - 1| otherwise.
  int length(const ExtAffineWeylElement& x) const;

  /// Simple affine reflections: the finite simple reflections first, then the
  /// affine ones (the reflections of length one).
  const std::vector<ExtAffineWeylElement>& simple_reflections() const { return simple_; }
  std::size_t finite_rank() const { return static_cast<std::size_t>(datum_.semisimple_rank()); }

  /// x = s_{word[0]} s_{word[1]} ... s_{word[k-1]} tail with k = l(x) and l(tail) = 0.
  struct Decomposition {
    std::vector<std::size_t> word;
    ExtAffineWeylElement tail;
  };
  Decomposition reduced_decomposition(const ExtAffineWeylElement& x) const;

 private:
  BasedRootDatum datum_;
  // negative_[w][a]: w^-1 applied to positive root a is negative
  std::vector<std::vector<char>> negative_;
  std::vector<ExtAffineWeylElement> simple_;
};

/// Finite Z[v, v^-1]-combination of T_x.
class AffineHeckeElement {
 public:
  using Terms = std::map<ExtAffineWeylElement, Laurent>;

  AffineHeckeElement() = default;
  static AffineHeckeElement basis(const ExtAffineWeylElement& x, const Laurent& c = Laurent(1));

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t support_size() const { return terms_.size(); }
  Laurent coeff(const ExtAffineWeylElement& x) const;
  void add_term(const ExtAffineWeylElement& x, const Laurent& c);

  AffineHeckeElement& operator+=(const AffineHeckeElement& o);
  AffineHeckeElement& operator-=(const AffineHeckeElement& o);
  friend AffineHeckeElement operator+(AffineHeckeElement a, const AffineHeckeElement& b) { return a += b; }
  friend AffineHeckeElement operator-(AffineHeckeElement a, const AffineHeckeElement& b) { return a -= b; }
  friend AffineHeckeElement operator*(const Laurent& c, const AffineHeckeElement& a);

  friend bool operator==(const AffineHeckeElement&, const AffineHeckeElement&) = default;

 private:
  Terms terms_;
};

/// Coordinates in the double-coset basis 1_{K t_lambda K}, lambda dominant,
/// normalized so that 1_K has coordinate 1 at lambda = 0.
struct SphericalCosetVector {
  std::map<Coweight, Laurent> coords;
  friend bool operator==(const SphericalCosetVector&, const SphericalCosetVector&) = default;
};

/// Matrix of the inverse Satake transform (m_nu -> double cosets) on a
/// dominance-closed set of dominant coweights, and its inverse (the Satake
/// transform). basis is ordered by ascending <2rho, .>, so inverse_map is
/// upper triangular.
struct SatakeMatrix {
  std::vector<Coweight> basis;
  /// inverse_map[i][j]: coordinate of 1_{K basis[i] K} in satake_inverse(m_{basis[j]})
  std::vector<std::vector<Laurent>> inverse_map;
  /// transform[i][j]: coefficient of m_{basis[i]} in S(1_{K basis[j] K})
  std::vector<std::vector<Laurent>> transform;
};

class AffineHeckeAlgebra {
 public:
  static constexpr std::size_t default_max_support = 20000;

  explicit AffineHeckeAlgebra(BasedRootDatum datum, std::size_t max_support = default_max_support);

  const AffineWeylGroup& group() const { return group_; }
  const BasedRootDatum& datum() const { return group_.datum(); }
  std::size_t max_support() const { return max_support_; }

  AffineHeckeElement one() const;
  AffineHeckeElement basis(const ExtAffineWeylElement& x) const { return AffineHeckeElement::basis(x); }
  /// T_{s_i} for a finite simple reflection.
  AffineHeckeElement finite_generator(std::size_t i) const;
  /// T_s for the i-th simple affine reflection of group().simple_reflections().
  AffineHeckeElement simple_generator(std::size_t i) const;

  AffineHeckeElement multiply(const AffineHeckeElement& a, const AffineHeckeElement& b) const;
  /// T_x^{-1}, expanded with T_s^{-1} = q^{-1} T_s - (1 - q^{-1}).
  AffineHeckeElement basis_inverse(const ExtAffineWeylElement& x) const;

  /// Dominant (a, b) with lambda = a - b, b chosen small.
  std::pair<Coweight, Coweight> dominant_split(const Coweight& lambda) const;
  AffineHeckeElement theta(const Coweight& lambda) const;
  /// theta_{a-b} from an explicit decomposition; a, b must be dominant.
  AffineHeckeElement theta(const Coweight& a, const Coweight& b) const;

  /// z_f = sum_lambda f_lambda theta_lambda for W-invariant f.
  AffineHeckeElement central_element(const SymmetricFunction& f) const;

  /// P_W(q) = sum_{w in W} q^{l(w)}
  Laurent poincare_polynomial() const;
  /// e_K = (sum_{w in W} T_w) / P_W(q)
  FracScaled<AffineHeckeElement> spherical_idempotent() const;
  FracScaled<AffineHeckeElement> multiply(const FracScaled<AffineHeckeElement>& a,
                                          const FracScaled<AffineHeckeElement>& b) const;
  static bool equal(const FracScaled<AffineHeckeElement>& a, const FracScaled<AffineHeckeElement>& b);

  /// z_f e_K in double-coset coordinates. Throws ConsistencyError if the
  /// product is not bi-K-invariant.
  SphericalCosetVector satake_inverse(const SymmetricFunction& f) const;
  /// list must be closed downward under dominance among dominant coweights.
  SatakeMatrix satake_matrix(const std::vector<Coweight>& list) const;
  /// S(sum c_lambda 1_{K lambda K}) in Satake coordinates.
  SymmetricFunction satake_transform(const SphericalCosetVector& x) const;

 private:
  AffineHeckeElement left_simple(std::size_t s, const AffineHeckeElement& h) const;
  AffineHeckeElement right_simple(const AffineHeckeElement& h, std::size_t s) const;
  AffineHeckeElement left_basis(const ExtAffineWeylElement& x, const AffineHeckeElement& h) const;
  void guard(const AffineHeckeElement& h) const;

  AffineWeylGroup group_;
  std::size_t max_support_;
  // per simple root: a small dominant coweight pairing positively with it
  std::vector<Coweight> dominant_steps_;
};

}  // namespace hecke
