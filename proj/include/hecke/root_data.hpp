#pragma once

// Based root data of split reductive groups and their finite Weyl groups.
//
// A datum lives on the cocharacter lattice Z^n (coweights). Roots are integer
// row vectors in the dual lattice and pair with coweights by the dot product.
// Coweights of G are the weights of the dual group, so the same Coweight
// type indexes characters on the dual side.

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "hecke/errors.hpp"

namespace hecke {

using IntVector = std::vector<int>;

/// An element of the cocharacter lattice X_*(T).
class Coweight {
 public:
  Coweight() = default;
  explicit Coweight(IntVector c) : c_(std::move(c)) {}
  Coweight(std::initializer_list<int> c) : c_(c) {}
  static Coweight zero(std::size_t n) { return Coweight(IntVector(n, 0)); }

  std::size_t size() const { return c_.size(); }
  int operator[](std::size_t i) const { return c_[i]; }
  int& operator[](std::size_t i) { return c_[i]; }
  const IntVector& values() const { return c_; }
  auto begin() const { return c_.begin(); }
  auto end() const { return c_.end(); }

  Coweight& operator+=(const Coweight& o);
  Coweight& operator-=(const Coweight& o);
  friend Coweight operator+(Coweight a, const Coweight& b) { return a += b; }
  friend Coweight operator-(Coweight a, const Coweight& b) { return a -= b; }
  Coweight operator-() const;
  friend Coweight operator*(int k, Coweight a);

  friend auto operator<=>(const Coweight&, const Coweight&) = default;
  friend bool operator==(const Coweight&, const Coweight&) = default;

  /// "(1,0,-1)"
  std::string str() const;
  /// Inverse of the CLI form "1,0,-1" (parentheses optional).
  static Coweight parse(const std::string& text);

 private:
  IntVector c_;
};

/// <alpha, lambda> for a root (dual-lattice row vector) and a coweight.
int pairing(const IntVector& root, const Coweight& lambda);

/// Square integer matrix acting on the cocharacter lattice (column vectors).
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n) : n_(n), a_(n * n, 0) {}
  static IntMatrix identity(std::size_t n);

  std::size_t size() const { return n_; }
  int& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  int operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  Coweight apply(const Coweight& x) const;
  /// Row vector times matrix: the pullback alpha o M of a dual-lattice vector.
  IntVector pullback(const IntVector& alpha) const;

  friend auto operator<=>(const IntMatrix&, const IntMatrix&) = default;
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<int> a_;
};

/// Element of the finite Weyl group: a reduced word in the simple reflections
/// and the lattice automorphism it induces. Equality is by matrix.
struct WeylElement {
  std::vector<int> word;
  IntMatrix matrix;

  std::size_t length() const { return word.size(); }
  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.matrix == b.matrix; }
};

/// A root together with its coroot and its coordinates in the simple roots.
struct Root {
  IntVector root;
  IntVector coroot;
  IntVector simple_coeffs;
};

/// The finite Weyl group, enumerated once. Elements are addressed by index;
/// index 0 is the identity and the list is in breadth-first (length) order.
class WeylGroup {
 public:
  WeylGroup(std::size_t lattice_rank, const std::vector<IntMatrix>& generators, std::size_t max_order);

  std::size_t order() const { return elements_.size(); }
  const WeylElement& element(std::size_t w) const { return elements_[w]; }
  const std::vector<WeylElement>& elements() const { return elements_; }
  std::size_t identity() const { return 0; }
  std::size_t generator(std::size_t i) const { return generator_index_[i]; }
  std::size_t multiply(std::size_t a, std::size_t b) const { return mult_[a * order() + b]; }
  std::size_t inverse(std::size_t w) const { return inverse_[w]; }
  std::size_t length(std::size_t w) const { return elements_[w].word.size(); }
  std::size_t index_of(const IntMatrix& m) const;
  Coweight apply(std::size_t w, const Coweight& x) const { return elements_[w].matrix.apply(x); }

 private:
  std::vector<WeylElement> elements_;
  std::map<IntMatrix, std::size_t> index_;
  std::vector<std::size_t> generator_index_;
  std::vector<std::size_t> mult_;
  std::vector<std::size_t> inverse_;
};

enum class Family { GL, SL, PGL, Sp, custom };

std::string family_name(Family f);
Family parse_family(const std::string& name);

/// Based root datum of a split reductive group.
class BasedRootDatum {
 public:
  /// GL_n and SL_n/PGL_n with n >= 2 (SL/PGL use the coroot resp. coweight
  /// basis of a rank n-1 lattice); Sp_n for even n = 2m on Z^m.
  static BasedRootDatum standard(Family family, int n);
  /// Datum from explicit simple roots/coroots; validated.
  static BasedRootDatum custom(std::string label, int rank, std::vector<IntVector> simple_roots,
                               std::vector<IntVector> simple_coroots);

  Family family() const { return family_; }
  /// Group parameter as given to the builder (n of GL_n, Sp_n, ...).
  int group_parameter() const { return group_parameter_; }
  /// "GL3", "Sp4", or the custom label.
  const std::string& label() const { return label_; }
  /// Rank of the cocharacter lattice.
  int rank() const { return rank_; }
  int semisimple_rank() const { return static_cast<int>(simple_roots_.size()); }
  const std::vector<IntVector>& simple_roots() const { return simple_roots_; }
  const std::vector<IntVector>& simple_coroots() const { return simple_coroots_; }
  /// <alpha_i, alpha_j^vee>
  int cartan(std::size_t i, std::size_t j) const;
  const std::vector<Root>& positive_roots() const { return positive_roots_; }
  const WeylGroup& weyl_group() const { return *weyl_; }

  Coweight reflect(std::size_t i, const Coweight& lambda) const;
  /// Sum of the positive coroots (twice the dual Weyl vector).
  const Coweight& two_rho_coroot() const { return two_rho_coroot_; }
  /// <2 rho, lambda>, so that q^{<rho, lambda>} = v^{<2 rho, lambda>}.
  int rho_pairing_exponent(const Coweight& lambda) const;

  bool is_dominant(const Coweight& lambda) const;
  Coweight dominant_representative(const Coweight& lambda) const;
  /// mu <= lambda: lambda - mu is a non-negative integer combination of simple coroots.
  bool dominance_leq(const Coweight& mu, const Coweight& lambda) const;
  /// Full W-orbit, lexicographically descending.
  std::vector<Coweight> weyl_orbit(const Coweight& lambda) const;
  bool is_minuscule(const Coweight& lambda) const;
  /// Dominant minuscule coweights with all coordinates in [-1, 1].
  std::vector<Coweight> minuscule_dominants() const;

  void check_coweight(const Coweight& lambda) const;

 private:
  BasedRootDatum() = default;
  void finish();

  Family family_ = Family::custom;
  int group_parameter_ = 0;
  std::string label_;
  int rank_ = 0;
  std::vector<IntVector> simple_roots_;
  std::vector<IntVector> simple_coroots_;
  std::vector<Root> positive_roots_;
  std::shared_ptr<const WeylGroup> weyl_;
  Coweight two_rho_coroot_;
};

}  // namespace hecke
