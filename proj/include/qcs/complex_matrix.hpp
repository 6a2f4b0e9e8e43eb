// Copyright 2026 The qcs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace qcs {

using Complex = std::complex<double>;

/// Dense complex matrix, row-major. The universal carrier for operators,
/// effects and Kraus blocks. Square almost everywhere; Kraus operators are
/// the one rectangular use, so rows/cols are tracked separately and the
/// square-only operations check.
class ComplexMatrix {
 public:
  ComplexMatrix() : rows_(0), cols_(0) {}
  ComplexMatrix(std::size_t rows, std::size_t cols);
  /// Entries are validated finite (no NaN/Inf admitted).
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix zero(std::size_t rows, std::size_t cols);
  /// dim x dim matrix with the given values on the diagonal.
  static ComplexMatrix diagonal(const std::vector<Complex>& values);
  /// Rank-one |i><j| in a dim-dimensional space.
  static ComplexMatrix unit(std::size_t dim, std::size_t i, std::size_t j);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  /// Side length; throws ShapeError if the matrix is not square.
  std::size_t dim() const;
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Complex operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }
  Complex& operator()(std::size_t r, std::size_t c) {
    return entries_[r * cols_ + c];
  }
  const std::vector<Complex>& entries() const { return entries_; }

  ComplexMatrix operator+(const ComplexMatrix& other) const;
  ComplexMatrix operator-(const ComplexMatrix& other) const;
  ComplexMatrix operator-() const;
  ComplexMatrix operator*(const ComplexMatrix& other) const;  // matrix product
  ComplexMatrix operator*(Complex scalar) const;
  ComplexMatrix& operator+=(const ComplexMatrix& other);

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  ComplexMatrix conjugate() const;

  Complex trace() const;
  double max_abs() const;
  double frobenius_norm() const;

  /// Throws ValidationError if any entry is NaN or infinite.
  void require_finite(const char* context) const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Complex> entries_;
};

inline ComplexMatrix operator*(Complex scalar, const ComplexMatrix& m) {
  return m * scalar;
}

/// max_ij |a_ij - b_ij|; shapes must match.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tol);

}  // namespace qcs
