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

#include "mtcodes/qcrev.hpp"

#include <string>
#include <utility>

#include "mtcodes/error.hpp"

namespace mtcodes {

namespace {

void require_qc(const MTShape& shape) {
  if (!shape.is_qc()) fail(ErrorKind::WrongCodeClass, "reversal is defined for quasi-cyclic shapes only");
}

bool all_divisible(const PolyMat& m, const Poly& modulus) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!divides(modulus, m(r, c))) return false;
  return true;
}

}  // namespace

std::vector<Felt> reverse_word(std::span<const Felt> v) { return std::vector<Felt>(v.rbegin(), v.rend()); }

std::vector<Poly> reverse_polyvec(const std::vector<Poly>& pv, const MTShape& shape) {
  require_qc(shape);
  if (pv.size() != shape.ell()) fail(ErrorKind::ShapeMismatch, "vector length differs from the number of blocks");
  const int m = shape.ms.front();
  std::vector<Poly> out;
  for (std::size_t j = 0; j < pv.size(); ++j) {
    const Poly& src = pv[pv.size() - 1 - j];
    if (src.degree() >= m) fail(ErrorKind::BlockOverflow, "block degree " + std::to_string(src.degree()) + " >= " + std::to_string(m));
    out.push_back(lau_shift(substitute_inverse(src), m - 1).to_poly());
  }
  return out;
}

ReversedGpm reversed_gpm(const MTCode& c) {
  const MTShape& shape = c.shape();
  require_qc(shape);
  const FieldRef& f = shape.field;
  const std::size_t ell = shape.ell();
  const int m = shape.ms.front();
  const Poly one_minus_xm = Poly::constant(f, f->one()) - Poly::monomial(f, f->one(), m);
  PolyMat inner(f, ell, ell);
  for (std::size_t i = 0; i < ell; ++i) {
    const int di = c.gpm()(i, i).degree();
    for (std::size_t j = 0; j < ell; ++j) {
      inner(i, j) = lau_shift(substitute_inverse(c.gpm()(i, j)), m + di).to_poly();
    }
    inner(i, i) += one_minus_xm * reciprocal(c.gpm()(i, i));
  }
  return ReversedGpm{inner * PolyMat::backward_identity(f, ell), shape};
}

MTCode reversed_code(const MTCode& c) { return MTCode::from_generators(c.shape(), reversed_gpm(c).f); }

bool is_reversible(const MTCode& c) { return reversed_code(c).gpm() == c.gpm(); }

CombinedChecks combined_checks(const MTCode& c) {
  const MTShape& shape = c.shape();
  require_qc(shape);
  const PolyMat j = PolyMat::backward_identity(shape.field, shape.ell());
  const Poly modulus = shape.modulus(0);
  PolyMat gjg = c.gpm() * j * c.gpm().transpose();
  PolyMat aja = c.amat().transpose() * j * c.amat();
  const bool gjg_zero = all_divisible(gjg, modulus);
  const bool aja_zero = all_divisible(aja, modulus);
  const bool a_eq_jgj = c.amat() == j * c.gpm().transpose() * j;
  return CombinedChecks{gjg_zero, aja_zero, a_eq_jgj, std::move(gjg), std::move(aja)};
}

}  // namespace mtcodes
