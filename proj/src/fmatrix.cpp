/*
   Copyright 2026 The mtcodes Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "mtcodes/fmatrix.hpp"

#include <utility>

#include "mtcodes/error.hpp"

namespace mtcodes {

FMatrix::FMatrix(FieldRef field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols) {}

FMatrix FMatrix::identity(FieldRef field, std::size_t n) {
  FMatrix m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Felt{1};
  return m;
}

FMatrix FMatrix::from_rows(FieldRef field, const std::vector<std::vector<Felt>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  FMatrix m(std::move(field), rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) fail(ErrorKind::ShapeMismatch, "ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

FMatrix FMatrix::transpose() const {
  FMatrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

FMatrix FMatrix::operator*(const FMatrix& rhs) const {
  if (cols_ != rhs.rows_) fail(ErrorKind::ShapeMismatch, "matrix product dimensions");
  const Field& f = *field_;
  FMatrix out(field_, rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Felt a = (*this)(r, k);
      if (a.code == 0) continue;
      for (std::size_t c = 0; c < rhs.cols_; ++c) {
        out(r, c) = f.add(out(r, c), f.mul(a, rhs(k, c)));
      }
    }
  }
  return out;
}

bool FMatrix::operator==(const FMatrix& rhs) const {
  return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
}

FMatrix FMatrix::stacked(const FMatrix& below) const {
  if (below.rows_ > 0 && rows_ > 0 && below.cols_ != cols_) {
    fail(ErrorKind::ShapeMismatch, "stacking matrices of different widths");
  }
  FMatrix out(field_, rows_ + below.rows_, rows_ > 0 ? cols_ : below.cols_);
  std::copy(data_.begin(), data_.end(), out.data_.begin());
  std::copy(below.data_.begin(), below.data_.end(), out.data_.begin() + data_.size());
  return out;
}

void FMatrix::append_row(std::span<const Felt> r) {
  if (rows_ == 0 && cols_ == 0) cols_ = r.size();
  if (r.size() != cols_) fail(ErrorKind::ShapeMismatch, "appended row has wrong length");
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

FMatrix FMatrix::rref() const {
  const Field& f = *field_;
  FMatrix m = *this;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows_ && m(pivot, c).code == 0) ++pivot;
    if (pivot == rows_) continue;
    if (pivot != rank) {
      for (std::size_t k = 0; k < cols_; ++k) std::swap(m(pivot, k), m(rank, k));
    }
    const Felt inv = f.inv(m(rank, c));
    for (std::size_t k = 0; k < cols_; ++k) m(rank, k) = f.mul(m(rank, k), inv);
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == rank) continue;
      const Felt factor = m(r, c);
      if (factor.code == 0) continue;
      for (std::size_t k = 0; k < cols_; ++k) {
        m(r, k) = f.sub(m(r, k), f.mul(factor, m(rank, k)));
      }
    }
    ++rank;
  }
  FMatrix out(field_, rank, cols_);
  std::copy(m.data_.begin(), m.data_.begin() + rank * cols_, out.data_.begin());
  return out;
}

std::size_t FMatrix::rank() const { return rref().rows(); }

FMatrix FMatrix::null_space() const {
  const Field& f = *field_;
  const FMatrix e = rref();
  std::vector<std::size_t> pivot_col;
  std::vector<bool> is_pivot(cols_, false);
  for (std::size_t r = 0; r < e.rows(); ++r) {
    std::size_t c = 0;
    while (e(r, c).code == 0) ++c;
    pivot_col.push_back(c);
    is_pivot[c] = true;
  }
  FMatrix out(field_, 0, cols_);
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Felt> v(cols_);
    v[free] = f.one();
    for (std::size_t r = 0; r < e.rows(); ++r) v[pivot_col[r]] = f.neg(e(r, free));
    out.append_row(v);
  }
  return out;
}

bool same_row_space(const FMatrix& a, const FMatrix& b) {
  if (a.cols() != b.cols()) return false;
  return a.rref() == b.rref();
}

Felt dot(const Field& f, std::span<const Felt> a, std::span<const Felt> b) {
  Felt acc{0};
  for (std::size_t i = 0; i < a.size(); ++i) acc = f.add(acc, f.mul(a[i], b[i]));
  return acc;
}

}  // namespace mtcodes
