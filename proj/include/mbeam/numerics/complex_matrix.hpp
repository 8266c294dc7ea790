// Copyright 2026 The mbeam Authors
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
#include <initializer_list>
#include <span>
#include <vector>

namespace mbeam {

using Complex = std::complex<double>;

/// Dense complex matrix stored column by column, so that each column
/// (a beam vector in this library) is a contiguous span.
class ComplexMatrix {
 public:
  ComplexMatrix(int rows, int cols);
  ComplexMatrix(int rows, int cols, std::vector<Complex> column_major);

  /// Row-major literal, convenient for transcribing printed matrices.
  static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);
  static ComplexMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Complex& operator()(int r, int c) { return data_[index(r, c)]; }
  const Complex& operator()(int r, int c) const { return data_[index(r, c)]; }

  std::span<Complex> column(int c);
  std::span<const Complex> column(int c) const;

  const std::vector<Complex>& data() const { return data_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix operator*(const ComplexMatrix& rhs) const;
  ComplexMatrix& operator*=(Complex scale);

  /// Non-negative integer power of a square matrix.
  ComplexMatrix power(int exponent) const;

  /// Columns of `this` followed by columns of `rhs`.
  ComplexMatrix hconcat(const ComplexMatrix& rhs) const;

  /// Largest entrywise modulus of (this - rhs).
  double max_abs_diff(const ComplexMatrix& rhs) const;

 private:
  std::size_t index(int r, int c) const {
    return static_cast<std::size_t>(c) * static_cast<std::size_t>(rows_) + static_cast<std::size_t>(r);
  }

  int rows_;
  int cols_;
  std::vector<Complex> data_;
};

/// Hermitian inner product u^H v.
Complex inner(std::span<const Complex> u, std::span<const Complex> v);

/// Plain (non-conjugating) product of a row vector with a column vector, h b.
Complex dot(std::span<const Complex> row, std::span<const Complex> column);

double norm(std::span<const Complex> v);

/// Orthonormalizes the columns in place (modified Gram-Schmidt, R with
/// positive real diagonal). Columns must be linearly independent.
void orthonormalize_columns(ComplexMatrix& m);

}  // namespace mbeam
