#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hecke/coeff_ring.hpp"

namespace hecke {

/// Dense square or rectangular matrix over a ScalarDomain.
class ScalarMatrix {
 public:
  ScalarMatrix() = default;
  ScalarMatrix(ScalarDomain dom, std::size_t rows, std::size_t cols);

  static ScalarMatrix identity(const ScalarDomain& dom, std::size_t n);
  static ScalarMatrix diagonal(const ScalarDomain& dom, const std::vector<Scalar>& entries);
  /// Row-major entries; every entry must belong to dom.
  static ScalarMatrix from_rows(const ScalarDomain& dom, const std::vector<std::vector<Scalar>>& rows);

  const ScalarDomain& domain() const { return dom_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  ScalarMatrix& operator+=(const ScalarMatrix& o);
  ScalarMatrix& operator-=(const ScalarMatrix& o);
  friend ScalarMatrix operator+(ScalarMatrix a, const ScalarMatrix& b) { return a += b; }
  friend ScalarMatrix operator-(ScalarMatrix a, const ScalarMatrix& b) { return a -= b; }
  friend ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b);
  friend ScalarMatrix operator*(const Scalar& c, ScalarMatrix m);

  bool is_zero() const;
  friend bool operator==(const ScalarMatrix& a, const ScalarMatrix& b);

  /// Determinant by Laplace expansion along rows, memoized over column subsets;
  /// valid over any commutative ring.
  Scalar determinant() const;
  /// Sum of the principal minors of size k (= trace of the k-th exterior power).
  Scalar principal_minor_sum(std::size_t k) const;

  std::vector<std::vector<std::string>> to_strings() const;

 private:
  ScalarDomain dom_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// m^k by repeated multiplication, k >= 0.
ScalarMatrix matrix_power(const ScalarMatrix& m, unsigned k);

}  // namespace hecke
