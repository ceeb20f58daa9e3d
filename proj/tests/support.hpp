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


#ifndef MTCODES_TESTS_SUPPORT_HPP
#define MTCODES_TESTS_SUPPORT_HPP

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "mtcodes/fmatrix.hpp"
#include "mtcodes/gf.hpp"
#include "mtcodes/poly.hpp"
#include "mtcodes/polymat.hpp"
#include "mtcodes/textio.hpp"

namespace mtcodes::testing {

inline FieldRef f2() { return Field::prime(2); }
inline FieldRef f3() { return Field::prime(3); }
inline FieldRef f5() { return Field::prime(5); }
/// F_4 = F_2[t]/(1 + t + t^2)
inline FieldRef f4() { return Field::make(2, 2, {1, 1, 1}); }
/// F_9 = F_3[t]/(2 + 2t + t^2)
inline FieldRef f9() { return Field::make(3, 2, {2, 2, 1}); }

inline Poly P(const FieldRef& f, std::string_view text) { return parse_poly(f, text); }

inline PolyMat PM(const FieldRef& f, std::initializer_list<std::initializer_list<const char*>> rows) {
  std::vector<std::vector<Poly>> out;
  for (const auto& r : rows) {
    std::vector<Poly> row;
    for (const char* e : r) row.push_back(parse_poly(f, e));
    out.push_back(std::move(row));
  }
  return PolyMat::from_rows(f, out);
}

inline std::string data_path(const std::string& name) { return std::string(MTCODES_DATA_DIR) + "/" + name; }

/// Every codeword of the row space of g, by plain nested enumeration.
std::vector<std::vector<Felt>> all_codewords(const FMatrix& g);

/// Weight distribution computed from all_codewords().
std::vector<long long> naive_weights(const FMatrix& g);

}  // namespace mtcodes::testing

#endif
