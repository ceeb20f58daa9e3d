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

#include "support.hpp"

namespace mtcodes::testing {

std::vector<std::vector<Felt>> all_codewords(const FMatrix& g) {
  const Field& f = *g.field();
  std::vector<std::vector<Felt>> words{std::vector<Felt>(g.cols())};
  for (std::size_t r = 0; r < g.rows(); ++r) {
    std::vector<std::vector<Felt>> next;
    for (const auto& w : words) {
      for (Felt a : f.elements()) {
        std::vector<Felt> v = w;
        for (std::size_t c = 0; c < g.cols(); ++c) v[c] = f.add(v[c], f.mul(a, g(r, c)));
        next.push_back(std::move(v));
      }
    }
    words = std::move(next);
  }
  return words;
}

std::vector<long long> naive_weights(const FMatrix& g) {
  std::vector<long long> out(g.cols() + 1, 0);
  for (const auto& w : all_codewords(g)) {
    int wt = 0;
    for (Felt x : w) wt += x.code != 0;
    ++out[static_cast<std::size_t>(wt)];
  }
  return out;
}

}  // namespace mtcodes::testing
