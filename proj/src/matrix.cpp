#include "hecke/matrix.hpp"

#include <unordered_map>

namespace hecke {

ScalarMatrix::ScalarMatrix(ScalarDomain dom, std::size_t rows, std::size_t cols)
    : dom_(std::move(dom)), rows_(rows), cols_(cols), data_(rows * cols, dom_.zero()) {}

ScalarMatrix ScalarMatrix::identity(const ScalarDomain& dom, std::size_t n) {
  ScalarMatrix m(dom, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = dom.one();
  return m;
}

ScalarMatrix ScalarMatrix::diagonal(const ScalarDomain& dom, const std::vector<Scalar>& entries) {
  ScalarMatrix m(dom, entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (!dom.contains(entries[i])) throw DomainMismatch("diagonal entry outside " + dom.describe());
    m(i, i) = entries[i];
  }
  return m;
}

ScalarMatrix ScalarMatrix::from_rows(const ScalarDomain& dom, const std::vector<std::vector<Scalar>>& rows) {
  std::size_t ncols = rows.empty() ? 0 : rows.front().size();
  ScalarMatrix m(dom, rows.size(), ncols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != ncols) throw ValidationError("ragged matrix rows");
    for (std::size_t j = 0; j < ncols; ++j) {
      if (!dom.contains(rows[i][j])) throw DomainMismatch("matrix entry outside " + dom.describe());
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

ScalarMatrix& ScalarMatrix::operator+=(const ScalarMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ValidationError("matrix dimension mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

ScalarMatrix& ScalarMatrix::operator-=(const ScalarMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ValidationError("matrix dimension mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b) {
  if (a.cols_ != b.rows_) throw ValidationError("matrix dimension mismatch");
  ScalarMatrix r(a.dom_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
    }
  return r;
}

ScalarMatrix operator*(const Scalar& c, ScalarMatrix m) {
  for (Scalar& x : m.data_) x = c * x;
  return m;
}

bool ScalarMatrix::is_zero() const {
  for (const Scalar& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

bool operator==(const ScalarMatrix& a, const ScalarMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

namespace {

// det of the submatrix on rows [row, row + popcount(cols)) and the column set
// `cols`, expanding along the first row.
Scalar minor_det(const ScalarMatrix& m, const std::vector<std::size_t>& row_index, std::size_t row,
                 unsigned long cols, std::unordered_map<unsigned long, Scalar>& memo) {
  if (cols == 0) return m.domain().one();
  if (auto it = memo.find(cols); it != memo.end()) return it->second;
  Scalar acc = m.domain().zero();
  bool negate = false;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (!(cols & (1UL << j))) continue;
    const Scalar& entry = m(row_index[row], j);
    if (!entry.is_zero()) {
      Scalar sub = entry * minor_det(m, row_index, row + 1, cols & ~(1UL << j), memo);
      acc += negate ? -sub : sub;
    }
    negate = !negate;
  }
  memo.emplace(cols, acc);
  return acc;
}

Scalar subset_det(const ScalarMatrix& m, const std::vector<std::size_t>& idx) {
  // rows and columns both restricted to idx
  unsigned long cols = 0;
  for (std::size_t j : idx) cols |= 1UL << j;
  std::unordered_map<unsigned long, Scalar> memo;
  return minor_det(m, idx, 0, cols, memo);
}

}  // namespace

Scalar ScalarMatrix::determinant() const {
  if (!is_square()) throw ValidationError("determinant of a non-square matrix");
  if (rows_ > 24) throw ResourceLimit("determinant limited to size 24");
  std::vector<std::size_t> idx(rows_);
  for (std::size_t i = 0; i < rows_; ++i) idx[i] = i;
  return subset_det(*this, idx);
}

Scalar ScalarMatrix::principal_minor_sum(std::size_t k) const {
  if (!is_square()) throw ValidationError("principal minors of a non-square matrix");
  if (k > rows_) throw ValidationError("minor size exceeds matrix size");
  if (rows_ > 24) throw ResourceLimit("principal minors limited to size 24");
  Scalar acc = dom_.zero();
  // enumerate k-subsets in lexicographic order
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    acc += subset_det(*this, pick);
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == rows_ - k + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return acc;
}

std::vector<std::vector<std::string>> ScalarMatrix::to_strings() const {
  std::vector<std::vector<std::string>> out(rows_, std::vector<std::string>(cols_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i][j] = (*this)(i, j).str();
  return out;
}

ScalarMatrix matrix_power(const ScalarMatrix& m, unsigned k) {
  if (!m.is_square()) throw ValidationError("power of a non-square matrix");
  ScalarMatrix r = ScalarMatrix::identity(m.domain(), m.rows());
  for (unsigned i = 0; i < k; ++i) r = r * m;
  return r;
}

}  // namespace hecke
