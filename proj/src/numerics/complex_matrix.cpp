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

#include "mbeam/numerics/complex_matrix.hpp"

#include <algorithm>
#include <cmath>

#include "mbeam/error.hpp"

namespace mbeam {

ComplexMatrix::ComplexMatrix(int rows, int cols)
    : rows_(rows), cols_(cols) {
  require(rows >= 1 && cols >= 1, "ComplexMatrix: rows and cols must be >= 1");
  data_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), Complex{});
}

ComplexMatrix::ComplexMatrix(int rows, int cols, std::vector<Complex> column_major)
    : rows_(rows), cols_(cols), data_(std::move(column_major)) {
  require(rows >= 1 && cols >= 1, "ComplexMatrix: rows and cols must be >= 1");
  require(data_.size() == static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols),
          "ComplexMatrix: entry count must equal rows*cols");
}

ComplexMatrix ComplexMatrix::from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
  const int r = static_cast<int>(rows.size());
  require(r >= 1, "ComplexMatrix::from_rows: empty literal");
  const int c = static_cast<int>(rows.begin()->size());
  ComplexMatrix m(r, c);
  int i = 0;
  for (const auto& row : rows) {
    require(static_cast<int>(row.size()) == c, "ComplexMatrix::from_rows: ragged literal");
    int j = 0;
    for (const auto& v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

ComplexMatrix ComplexMatrix::identity(int n) {
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

std::span<Complex> ComplexMatrix::column(int c) {
  return {data_.data() + index(0, c), static_cast<std::size_t>(rows_)};
}

std::span<const Complex> ComplexMatrix::column(int c) const {
  return {data_.data() + index(0, c), static_cast<std::size_t>(rows_)};
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (int c = 0; c < cols_; ++c)
    for (int r = 0; r < rows_; ++r) out(c, r) = std::conj((*this)(r, c));
  return out;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& rhs) const {
  require(cols_ == rhs.rows_, "ComplexMatrix: dimension mismatch in product");
  ComplexMatrix out(rows_, rhs.cols_);
  for (int c = 0; c < rhs.cols_; ++c)
    for (int k = 0; k < cols_; ++k) {
      const Complex s = rhs(k, c);
      for (int r = 0; r < rows_; ++r) out(r, c) += (*this)(r, k) * s;
    }
  return out;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
  for (auto& v : data_) v *= scale;
  return *this;
}

ComplexMatrix ComplexMatrix::power(int exponent) const {
  require(rows_ == cols_, "ComplexMatrix::power: matrix must be square");
  require(exponent >= 0, "ComplexMatrix::power: exponent must be non-negative");
  ComplexMatrix result = identity(rows_);
  for (int i = 0; i < exponent; ++i) result = result * (*this);
  return result;
}

ComplexMatrix ComplexMatrix::hconcat(const ComplexMatrix& rhs) const {
  require(rows_ == rhs.rows_, "ComplexMatrix::hconcat: row mismatch");
  std::vector<Complex> data = data_;
  data.insert(data.end(), rhs.data_.begin(), rhs.data_.end());
  return ComplexMatrix(rows_, cols_ + rhs.cols_, std::move(data));
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& rhs) const {
  require(rows_ == rhs.rows_ && cols_ == rhs.cols_, "ComplexMatrix::max_abs_diff: shape mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < data_.size(); ++i) worst = std::max(worst, std::abs(data_[i] - rhs.data_[i]));
  return worst;
}

Complex inner(std::span<const Complex> u, std::span<const Complex> v) {
  Complex acc{};
  for (std::size_t i = 0; i < u.size(); ++i) acc += std::conj(u[i]) * v[i];
  return acc;
}

Complex dot(std::span<const Complex> row, std::span<const Complex> column) {
  Complex acc{};
  for (std::size_t i = 0; i < row.size(); ++i) acc += row[i] * column[i];
  return acc;
}

double norm(std::span<const Complex> v) {
  double acc = 0.0;
  for (const auto& x : v) acc += std::norm(x);
  return std::sqrt(acc);
}

void orthonormalize_columns(ComplexMatrix& m) {
  for (int c = 0; c < m.cols(); ++c) {
    auto col = m.column(c);
    const double original = norm(col);
    for (int p = 0; p < c; ++p) {
      auto prev = m.column(p);
      const Complex proj = inner(prev, col);
      for (std::size_t i = 0; i < col.size(); ++i) col[i] -= proj * prev[i];
    }
    const double n = norm(col);
    if (!(n > 1e-10 * original)) throw InvalidArgument("orthonormalize_columns: columns are linearly dependent");
    for (auto& x : col) x /= n;
  }
}

}  // namespace mbeam
