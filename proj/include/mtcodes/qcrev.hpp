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


#ifndef MTCODES_QCREV_HPP
#define MTCODES_QCREV_HPP

#include <span>
#include <vector>

#include "mtcodes/mtcode.hpp"

namespace mtcodes {

/// Coordinate reversal of a word.
std::vector<Felt> reverse_word(std::span<const Felt> v);
/// x^{m-1} (v_l(1/x), ..., v_1(1/x)); throws WrongCodeClass for non-QC shapes.
std::vector<Poly> reverse_polyvec(const std::vector<Poly>& pv, const MTShape& shape);

struct ReversedGpm {
  PolyMat f;
  MTShape source_shape;
};

/// F = (diag[x^{m+d_i}] G(1/x) + (1 - x^m) diag[g*_ii]) J.
ReversedGpm reversed_gpm(const MTCode& c);
/// The code generated by F.
MTCode reversed_code(const MTCode& c);
bool is_reversible(const MTCode& c);

struct CombinedChecks {
  bool gjg_zero = false;  // G J G^t == 0 mod x^m - 1
  bool aja_zero = false;  // A^t J A == 0 mod x^m - 1
  bool a_eq_jgj = false;  // A == J G^t J
  PolyMat gjg;
  PolyMat aja;
};
CombinedChecks combined_checks(const MTCode& c);

}  // namespace mtcodes

#endif
