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


#ifndef MTCODES_ANALYSIS_HPP
#define MTCODES_ANALYSIS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "mtcodes/fmatrix.hpp"
#include "mtcodes/mtcode.hpp"

namespace mtcodes {

using BigInt = boost::multiprecision::cpp_int;

/// A_0..A_n, A_w = number of codewords of Hamming weight w.
struct WeightEnumerator {
  int n = 0;
  std::vector<BigInt> coeffs;

  BigInt total() const;
  /// Smallest w >= 1 with A_w > 0, or -1 when there is none.
  int min_nonzero_weight() const;
  bool operator==(const WeightEnumerator& rhs) const = default;
};

struct EnumOptions {
  std::uint64_t cap = std::uint64_t{1} << 26;
  unsigned jobs = 1;
};

/// Enumerates the row space of g (rows assumed independent).  Throws
/// EnumerationCapExceeded when q^k > cap.
WeightEnumerator weight_distribution(const FMatrix& g, const EnumOptions& opts = {});
WeightEnumerator weight_enumerator(const MTCode& c, const EnumOptions& opts = {});

/// Enumerator of the dual code; throws NonIntegerResult when a coefficient
/// is not an integer.
WeightEnumerator macwilliams(const WeightEnumerator& w, std::uint32_t q, const BigInt& code_size);

/// Throws InvalidArgument for the zero code.
int min_distance(const MTCode& c, const EnumOptions& opts = {});

struct SingletonReport {
  bool holds = false;
  bool is_mds = false;
};
SingletonReport singleton_check(int n, int k, int d);

/// `wenum n=<n> <w>:<A_w> ...` listing nonzero terms.
std::string format_wenum_line(const WeightEnumerator& w);
/// `A_0 + A_w y^w + ...` ascending in w.
std::string format_wenum_poly(const WeightEnumerator& w);
/// Inverse of format_wenum_line; throws ParseError.
WeightEnumerator parse_wenum_line(const std::string& line);

}  // namespace mtcodes

#endif
