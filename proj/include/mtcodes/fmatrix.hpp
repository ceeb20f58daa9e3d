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

#ifndef MTCODES_FMATRIX_HPP
#define MTCODES_FMATRIX_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "mtcodes/gf.hpp"

namespace mtcodes {

/// Dense row-major matrix over F_q.
class FMatrix {
 public:
  FMatrix(FieldRef field, std::size_t rows, std::size_t cols);
  static FMatrix identity(FieldRef field, std::size_t n);
  static FMatrix from_rows(FieldRef field, const std::vector<std::vector<Felt>>& rows);

  const FieldRef& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Felt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Felt operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<const Felt> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Felt> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

  FMatrix transpose() const;
  FMatrix operator*(const FMatrix& rhs) const;
  bool operator==(const FMatrix& rhs) const;

  /// Rows of this matrix followed by the rows of `below`.
  FMatrix stacked(const FMatrix& below) const;
  void append_row(std::span<const Felt> r);

  /// Reduced row echelon form (nonzero rows only).
  FMatrix rref() const;
  std::size_t rank() const;
  /// Basis of {v : M v^t = 0}, one vector per row.
  FMatrix null_space() const;

 private:
  FieldRef field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Felt> data_;
};

/// True when the row spaces of a and b coincide.
bool same_row_space(const FMatrix& a, const FMatrix& b);

/// Standard inner product over F_q.
Felt dot(const Field& f, std::span<const Felt> a, std::span<const Felt> b);

}  // namespace mtcodes

#endif
