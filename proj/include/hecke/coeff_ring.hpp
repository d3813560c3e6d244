#pragma once

// Exact coefficient arithmetic.
//
// Everything downstream works over the formal half power v, with v^2 = q.
// Three concrete scalar rings are supported: formal Laurent polynomials in v
// (optionally with extra symbolic variables x1..xn standing for the entries
// of a torus point), the rationals with a fixed value of v, and prime fields
// with a chosen square root of q.

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "hecke/errors.hpp"

namespace hecke {

/// Laurent polynomial in v with arbitrary-precision integer coefficients.
/// Zero coefficients are never stored.
class Laurent {
 public:
  Laurent() = default;
  Laurent(long c);  // NOLINT(google-explicit-constructor)
  explicit Laurent(const mpz_class& c);

  static Laurent monomial(const mpz_class& c, int exponent);
  static Laurent v_power(int exponent) { return monomial(1, exponent); }
  /// q^k = v^{2k}
  static Laurent q_power(int k) { return monomial(1, 2 * k); }

  const std::map<int, mpz_class>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  mpz_class coeff(int exponent) const;
  int min_exponent() const;
  int max_exponent() const;

  /// (c, e) when the value is c*v^e with c != 0.
  std::optional<std::pair<mpz_class, int>> as_monomial() const;
  /// Inverse of a unit +-v^e; throws ConsistencyError otherwise.
  Laurent unit_inverse() const;

  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  Laurent& operator*=(const Laurent& o);
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  Laurent operator-() const;
  /// Multiply by v^k.
  Laurent shifted(int k) const;
  Laurent pow(unsigned k) const;

  friend bool operator==(const Laurent&, const Laurent&) = default;

  /// Canonical form "c*v^e" joined by "+", ascending exponents; "0" for zero.
  std::string str() const;
  /// Inverse of str(); also accepts "-" as a separator and bare constants.
  static Laurent parse(std::string_view text);
  /// Human rendering in q when all exponents are even, in v otherwise.
  std::string pretty() const;

 private:
  void add_term(int e, const mpz_class& c);
  std::map<int, mpz_class> terms_;
};

/// Laurent polynomial in v and symbolic variables x1..xn. Monomial keys are
/// exponent vectors [e_v, e_x1, ..., e_xn] with trailing zeros trimmed.
class MultiLaurent {
 public:
  using Exponents = std::vector<int>;

  MultiLaurent() = default;
  explicit MultiLaurent(const mpz_class& c);
  explicit MultiLaurent(const Laurent& l);
  static MultiLaurent monomial(const mpz_class& c, Exponents exps);
  /// The j-th symbolic variable, j >= 1.
  static MultiLaurent variable(int j);

  const std::map<Exponents, mpz_class>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_unit() const;
  MultiLaurent unit_inverse() const;

  MultiLaurent& operator+=(const MultiLaurent& o);
  MultiLaurent& operator-=(const MultiLaurent& o);
  friend MultiLaurent operator+(MultiLaurent a, const MultiLaurent& b) { return a += b; }
  friend MultiLaurent operator-(MultiLaurent a, const MultiLaurent& b) { return a -= b; }
  friend MultiLaurent operator*(const MultiLaurent& a, const MultiLaurent& b);
  MultiLaurent operator-() const;

  friend bool operator==(const MultiLaurent&, const MultiLaurent&) = default;

  std::string str() const;
  static MultiLaurent parse(std::string_view text);

 private:
  void add_term(Exponents e, const mpz_class& c);
  std::map<Exponents, mpz_class> terms_;
};

/// Residue modulo a prime. The modulus travels with the value.
struct Residue {
  std::uint64_t value = 0;
  std::uint64_t modulus = 0;
  friend bool operator==(const Residue&, const Residue&) = default;
};

enum class DomainKind { formal, rational, prime_field };

class ScalarDomain;

/// An element of one of the three scalar rings. Arithmetic between different
/// rings raises DomainMismatch.
class Scalar {
 public:
  using Storage = std::variant<MultiLaurent, mpq_class, Residue>;

  Scalar() = default;
  explicit Scalar(Storage s) : value_(std::move(s)) {
    if (auto* q = std::get_if<mpq_class>(&value_)) q->canonicalize();
  }

  DomainKind kind() const;
  const Storage& storage() const { return value_; }

  bool is_zero() const;
  bool is_invertible() const;
  Scalar inverse() const;
  Scalar pow(long k) const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  Scalar operator-() const;

  friend bool operator==(const Scalar& a, const Scalar& b);

  std::string str() const;

 private:
  Storage value_;
};

/// Description of a scalar ring together with the image of v.
class ScalarDomain {
 public:
  /// Formal Laurent polynomials in v (and symbolic torus coordinates).
  static ScalarDomain formal();
  /// Rationals with v mapped to a fixed nonzero rational.
  static ScalarDomain rational(const mpq_class& v_value);
  /// F_ell with v mapped to v_image. If q_residue is given it must equal
  /// v_image^2 mod ell; otherwise q is defined as that square.
  static ScalarDomain prime_field(std::uint64_t ell, std::uint64_t v_image,
                                  std::optional<std::uint64_t> q_residue = std::nullopt);

  DomainKind kind() const { return kind_; }
  const mpq_class& v_value() const { return v_value_; }
  std::uint64_t ell() const { return ell_; }
  std::uint64_t v_image() const { return v_image_; }
  std::uint64_t q_residue() const { return q_residue_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(const mpz_class& c) const;
  /// Image of v^k.
  Scalar v_power(int k) const;
  /// j-th symbolic torus coordinate (formal domain only), j >= 1.
  Scalar symbol(int j) const;
  /// Ring homomorphism Z[v, v^-1] -> this ring.
  Scalar reduce(const Laurent& x) const;
  /// Specialize a formal scalar: v -> image of v, x_j -> values[j-1].
  Scalar specialize(const MultiLaurent& x, std::span<const Scalar> values) const;
  Scalar parse(std::string_view text) const;
  /// True iff s belongs to this ring (same kind, same modulus).
  bool contains(const Scalar& s) const;

  /// "formal", "rat:v=<r>" or "ell=<p>,v=<r>,q=<q>"
  std::string describe() const;

  friend bool operator==(const ScalarDomain&, const ScalarDomain&) = default;

 private:
  DomainKind kind_ = DomainKind::formal;
  mpq_class v_value_ = 0;
  std::uint64_t ell_ = 0;
  std::uint64_t v_image_ = 0;
  std::uint64_t q_residue_ = 0;
};

/// Deterministic primality test.
bool is_prime(std::uint64_t n);

/// True iff v_image^2 == q_residue (mod ell) and v_image != 0 (mod ell).
/// Throws ValidationError when ell is not prime.
bool validate_sqrt(std::uint64_t ell, std::uint64_t q_residue, std::uint64_t v_image);

inline Scalar reduce_scalar(const Laurent& x, const ScalarDomain& dom) { return dom.reduce(x); }

/// A ring element divided by a single Laurent scalar.
template <class T>
struct FracScaled {
  T numerator;
  Laurent denominator = Laurent(1);

  bool is_integral() const { return denominator.is_one(); }
};

}  // namespace hecke
