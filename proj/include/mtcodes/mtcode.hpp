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


#ifndef MTCODES_MTCODE_HPP
#define MTCODES_MTCODE_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "mtcodes/fmatrix.hpp"
#include "mtcodes/polymat.hpp"

namespace mtcodes {

/// Block lengths and shift constants of a multi-twisted code.
struct MTShape {
  FieldRef field;
  std::vector<int> ms;
  std::vector<Felt> lambdas;

  /// Validates lengths, positive blocks and nonzero constants.
  static MTShape make(FieldRef field, std::vector<int> ms, std::vector<Felt> lambdas);
  /// ell blocks of length m, all with constant lambda.
  static MTShape uniform(FieldRef field, std::size_t ell, int m, Felt lambda);

  std::size_t ell() const { return ms.size(); }
  int n() const;
  /// First coordinate of block j in a length-n vector.
  int offset(std::size_t j) const;

  bool equal_blocks() const;
  bool is_qc() const;
  bool is_qt() const;
  bool is_gqc() const;
  bool is_constacyclic() const { return ell() == 1; }

  /// Same blocks, constants inverted.
  MTShape dual() const;
  /// x^{m_j} - lambda_j
  Poly modulus(std::size_t j) const;
  /// diag[x^{m_j} - lambda_j]
  PolyMat D() const;

  bool operator==(const MTShape& rhs) const;
};

/// A multi-twisted code held by its reduced generator polynomial matrix.
class MTCode {
 public:
  /// Code generated by the rows of `gens` together with diag[x^{m_j}-lambda_j].
  static MTCode from_generators(const MTShape& shape, const PolyMat& gens);
  /// Accepts an l x l matrix already in Hermite normal form; throws
  /// InvalidArgument when it is not, InexactDivision when the identical
  /// equation has no polynomial solution.
  static MTCode from_reduced(const MTShape& shape, const PolyMat& gpm);

  const MTShape& shape() const { return shape_; }
  const PolyMat& gpm() const { return gpm_; }
  const PolyMat& amat() const { return amat_; }
  const FieldRef& field() const { return shape_.field; }

  bool operator==(const MTCode& rhs) const { return shape_ == rhs.shape_ && gpm_ == rhs.gpm_; }

 private:
  MTCode(MTShape shape, PolyMat gpm, PolyMat amat);

  MTShape shape_;
  PolyMat gpm_;
  PolyMat amat_;
};

/// Block-diagonal matrix with blocks [[0, lambda_j], [I, 0]].
FMatrix shift_matrix(const MTShape& shape);
/// rank [G; G M^t] == rank G
bool is_multi_twisted(const FMatrix& g, const MTShape& shape);

/// Packs each block of a length-n vector into a polynomial.
std::vector<Poly> phi(std::span<const Felt> v, const MTShape& shape);
/// Inverse of phi; throws BlockOverflow when deg v_j >= m_j.
std::vector<Felt> phi_inv(const std::vector<Poly>& pv, const MTShape& shape);
/// Reduces each entry modulo x^{m_j} - lambda_j.
std::vector<Poly> reduce_blocks(const std::vector<Poly>& pv, const MTShape& shape);

/// Throws NotInvariant unless the row space is closed under the shift.
MTCode from_generator_matrix(const FMatrix& g, const MTShape& shape);

/// The unique A with A * gpm == D, by back-substitution.
PolyMat identical_matrix(const PolyMat& gpm, const MTShape& shape);

int dimension(const MTCode& c);

/// Rows x^s * row_i (mod blockwise moduli) for i ascending, then
/// 0 <= s < m_i - deg g_ii ascending.  Throws RankDefect if dependent.
FMatrix expand(const MTCode& c);

/// Intermediate matrices of the dual construction.
struct DualTrace {
  LauMat a_inv;       // A(1/x)
  LauMat a_star;      // entry (i,j) times x^{m_i - d_j}
  PolyMat a_star_star;
  PolyMat h;          // transpose of a_star_star
  MTShape dual_shape;
};

DualTrace dual_trace(const MTCode& c);
PolyMat dual_gpm(const MTCode& c);
MTCode dual(const MTCode& c);

/// Closed forms for the subclasses; throw WrongCodeClass on other shapes.
PolyMat dual_gpm_qc(const MTCode& c);
PolyMat dual_gpm_qt(const MTCode& c);
PolyMat dual_gpm_gqc(const MTCode& c);

bool is_self_orthogonal(const MTCode& c);

struct Verdict {
  bool holds = false;
  std::string diagnostic;
};
Verdict is_self_dual(const MTCode& c);

/// The constacyclic code <g> of length m; throws NotADivisor.
MTCode constacyclic(const Poly& g, int m, Felt lambda);

}  // namespace mtcodes

#endif
