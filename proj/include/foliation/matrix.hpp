#pragma once

#include <optional>
#include <string>
#include <vector>

#include "foliation/field.hpp"

namespace fol {

/// Dense matrix over Q or an extension. Elimination decides pivots with
/// FElem::decide_zero, so a composite modulus surfaces as ZeroDivisor.
class Matrix {
 public:
  Matrix() = default;
  Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<FElem>> rows);

  static Matrix identity(size_t n);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  FElem& operator()(size_t r, size_t c) { return data_[r * cols_ + c]; }
  const FElem& operator()(size_t r, size_t c) const { return data_[r * cols_ + c]; }

  Matrix operator*(const Matrix& o) const;
  std::vector<FElem> apply(const std::vector<FElem>& v) const;
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  /// Reduced row echelon form; returns pivot columns.
  std::vector<size_t> rref();
  size_t rank() const;
  /// Basis of {v : M v = 0}, one vector per free column.
  std::vector<std::vector<FElem>> nullspace() const;
  /// Some solution of M v = rhs, or nullopt if inconsistent.
  std::optional<std::vector<FElem>> solve(const std::vector<FElem>& rhs) const;
  FElem determinant() const;
  std::optional<Matrix> inverse() const;
  Matrix transpose() const;

  std::string to_string() const;

 private:
  size_t rows_ = 0, cols_ = 0;
  std::vector<FElem> data_;
};

}  // namespace fol
