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


#ifndef MTCODES_POLYMAT_HPP
#define MTCODES_POLYMAT_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "mtcodes/poly.hpp"

namespace mtcodes {

/// Dense row-major matrix over F_q[x].
class PolyMat {
 public:
  PolyMat(FieldRef field, std::size_t rows, std::size_t cols);
  static PolyMat identity(FieldRef field, std::size_t n);
  static PolyMat diag(FieldRef field, const std::vector<Poly>& d);
  /// Backward identity J = [delta_{i, n+1-j}].
  static PolyMat backward_identity(FieldRef field, std::size_t n);
  static PolyMat from_rows(FieldRef field, const std::vector<std::vector<Poly>>& rows);

  const FieldRef& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Poly& operator()(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
  const Poly& operator()(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }
  std::vector<Poly> row(std::size_t r) const;
  void set_row(std::size_t r, const std::vector<Poly>& v);
  void swap_rows(std::size_t a, std::size_t b);

  PolyMat transpose() const;
  PolyMat operator*(const PolyMat& rhs) const;
  PolyMat operator+(const PolyMat& rhs) const;
  PolyMat operator-(const PolyMat& rhs) const;
  bool operator==(const PolyMat& rhs) const;

  /// Rows of this matrix followed by the rows of `below`.
  PolyMat stacked(const PolyMat& below) const;
  /// Leading `n` rows.
  PolyMat top_rows(std::size_t n) const;
  /// Number of rows that are not identically zero.
  std::size_t nonzero_rows() const;
  bool is_upper_triangular() const;

 private:
  FieldRef field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Poly> e_;
};

/// Matrix of Laurent polynomials; only used for intermediate values.
struct LauMat {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<LauPoly> e;

  LauPoly& at(std::size_t r, std::size_t c) { return e[r * cols + c]; }
  const LauPoly& at(std::size_t r, std::size_t c) const { return e[r * cols + c]; }
  bool operator==(const LauMat& rhs) const = default;
};

/// Throws ShapeMismatch unless square.
Poly det(const PolyMat& a);
bool is_unimodular(const PolyMat& a);

struct HnfResult {
  PolyMat h;
  PolyMat u;
  std::size_t rank = 0;
  /// Pivot column of each nonzero row of h.
  std::vector<std::size_t> pivots;
};

/// Row Hermite normal form: monic pivots, entries above a pivot of smaller
/// degree, zero rows last.  u is unimodular with u * a == h.
HnfResult hnf(const PolyMat& a);
bool is_hnf(const PolyMat& a);

struct Membership {
  bool member = false;
  std::vector<Poly> remainder;
  /// v - remainder == sum_i coeffs[i] * (row i of the basis).
  std::vector<Poly> coeffs;
};

/// Reduces v against the nonzero rows of a basis in HNF, left to right.
Membership member(const std::vector<Poly>& v, const PolyMat& basis_hnf);

/// Some U with U * g == b, or nullopt when no such U exists.
std::optional<PolyMat> solve_left(const PolyMat& b, const PolyMat& g);

}  // namespace mtcodes

#endif
