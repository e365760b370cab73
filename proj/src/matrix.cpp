#include "foliation/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace fol {

Matrix::Matrix(std::initializer_list<std::initializer_list<FElem>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(size_t n) {
  Matrix m(n, n);
  for (size_t i = 0; i < n; ++i) m(i, i) = FElem(1);
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix dimension mismatch");
  Matrix r(rows_, o.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      const FElem& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
    }
  return r;
}

std::vector<FElem> Matrix::apply(const std::vector<FElem>& v) const {
  if (v.size() != cols_) throw std::invalid_argument("vector dimension mismatch");
  std::vector<FElem> r(rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j)
      if (!(*this)(i, j).is_zero() && !v[j].is_zero()) r[i] += (*this)(i, j) * v[j];
  return r;
}

std::vector<size_t> Matrix::rref() {
  std::vector<size_t> pivots;
  size_t row = 0;
  for (size_t col = 0; col < cols_ && row < rows_; ++col) {
    size_t piv = rows_;
    for (size_t i = row; i < rows_; ++i)
      if (!(*this)(i, col).decide_zero()) {
        piv = i;
        break;
      }
    if (piv == rows_) continue;
    if (piv != row)
      for (size_t j = 0; j < cols_; ++j) std::swap((*this)(piv, j), (*this)(row, j));
    FElem inv = (*this)(row, col).inv();
    for (size_t j = col; j < cols_; ++j) (*this)(row, j) *= inv;
    for (size_t i = 0; i < rows_; ++i) {
      if (i == row) continue;
      FElem f = (*this)(i, col);
      if (f.is_zero()) continue;
      for (size_t j = col; j < cols_; ++j)
        if (!(*this)(row, j).is_zero()) (*this)(i, j) -= f * (*this)(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

size_t Matrix::rank() const {
  Matrix m(*this);
  return m.rref().size();
}

std::vector<std::vector<FElem>> Matrix::nullspace() const {
  Matrix m(*this);
  auto pivots = m.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (size_t p : pivots) is_pivot[p] = true;
  std::vector<std::vector<FElem>> basis;
  for (size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<FElem> v(cols_);
    v[free] = FElem(1);
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<FElem>> Matrix::solve(const std::vector<FElem>& rhs) const {
  if (rhs.size() != rows_) throw std::invalid_argument("rhs dimension mismatch");
  Matrix aug(rows_, cols_ + 1);
  for (size_t i = 0; i < rows_; ++i) {
    for (size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
    aug(i, cols_) = rhs[i];
  }
  auto pivots = aug.rref();
  if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
  std::vector<FElem> x(cols_);
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, cols_);
  return x;
}

FElem Matrix::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
  Matrix m(*this);
  FElem det(1);
  for (size_t col = 0; col < cols_; ++col) {
    size_t piv = rows_;
    for (size_t i = col; i < rows_; ++i)
      if (!m(i, col).decide_zero()) {
        piv = i;
        break;
      }
    if (piv == rows_) return FElem();
    if (piv != col) {
      for (size_t j = 0; j < cols_; ++j) std::swap(m(piv, j), m(col, j));
      det = -det;
    }
    det *= m(col, col);
    FElem inv = m(col, col).inv();
    for (size_t i = col + 1; i < rows_; ++i) {
      FElem f = m(i, col) * inv;
      if (f.is_zero()) continue;
      for (size_t j = col; j < cols_; ++j) m(i, j) -= f * m(col, j);
    }
  }
  return det;
}

std::optional<Matrix> Matrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
  Matrix aug(rows_, 2 * cols_);
  for (size_t i = 0; i < rows_; ++i) {
    for (size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
    aug(i, cols_ + i) = FElem(1);
  }
  auto pivots = aug.rref();
  if (pivots.size() < rows_ || pivots[rows_ - 1] >= cols_) return std::nullopt;
  Matrix inv(rows_, cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) inv(i, j) = aug(i, cols_ + j);
  return inv;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).to_string();
    os << "]";
  }
  os << "]";
  return os.str();
}

}  // namespace fol
