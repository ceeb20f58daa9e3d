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


#ifndef MTCODES_TEXTIO_HPP
#define MTCODES_TEXTIO_HPP

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "mtcodes/fmatrix.hpp"
#include "mtcodes/mtcode.hpp"

namespace mtcodes {

/// `field p=<p> ext=<d> [modulus=<c0,...,cd>]`
FieldRef parse_field_header(std::string_view line);

/// `0`, `c@e+c@e+...`, or over F_2 the exponent set `{e,...}`.
Poly parse_poly(const FieldRef& field, std::string_view text);
/// Canonical form: exponent sets over F_2, `c@e` terms ascending otherwise.
std::string format_poly(const Poly& p);

/// `pm <rows> <cols>` followed by one line per row, entries separated by `;`.
std::string format_polymat(const PolyMat& m);
std::string format_lau(const LauPoly& p);
std::string format_laumat(const LauMat& m);

/// Nonblank lines with `#` comments removed and whitespace trimmed.
std::vector<std::string> content_lines(std::istream& in);
std::vector<std::string> read_content_lines(const std::string& path);

/// Splits a `;`-separated row into polynomials.
std::vector<Poly> parse_poly_row(const FieldRef& field, std::string_view line, std::size_t expected);

struct CodeFile {
  MTShape shape;
  PolyMat gens;
};
/// field / blocks / lambdas / `gpm r l` and r rows.
CodeFile parse_code_file(const std::vector<std::string>& lines);
CodeFile read_code_file(const std::string& path);
MTCode load_code(const std::string& path);
std::string format_code(const MTCode& c);

struct GenMatFile {
  MTShape shape;
  FMatrix g;  // columns in block order
};
/// field / blocks / lambdas / optional `order block|interleaved` / `genmat k n`
/// and k rows of n codes.  Interleaved columns are permuted into block order.
GenMatFile parse_genmat_file(const std::vector<std::string>& lines);
GenMatFile read_genmat_file(const std::string& path);
std::string format_genmat(const FMatrix& g, const MTShape& shape);

/// Shared header lines `field`, `blocks`, `lambdas`.
std::string format_shape_header(const MTShape& shape);

}  // namespace mtcodes

#endif
