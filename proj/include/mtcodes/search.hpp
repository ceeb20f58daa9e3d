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


#ifndef MTCODES_SEARCH_HPP
#define MTCODES_SEARCH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "mtcodes/analysis.hpp"
#include "mtcodes/mtcode.hpp"

namespace mtcodes {

struct TableEntry {
  int i = 0;  // 1-based
  int j = 0;
  Poly g;
};

/// One published code: QC shape with ell blocks of length n/ell and the
/// nonzero upper-triangular entries of its reduced GPM.
struct TableRow {
  FieldRef field;
  int ell = 0;
  int n = 0;
  int k = 0;
  int d = 0;
  std::vector<TableEntry> entries;

  int m() const { return n / ell; }
  MTShape shape() const;
  /// Validates the HNF structure; throws ParseError on malformed rows.
  MTCode code() const;
};

/// Optional `field` line, then rows `row ell=<l> n=<n> k=<k> d=<d>` each
/// followed by lines `g <i> <j> <poly>`.
std::vector<TableRow> parse_table(const std::vector<std::string>& lines);

enum class DistanceStatus { Verified, Mismatch, Skipped };

struct RowReport {
  int ell = 0, n = 0, k = 0, d = 0;
  int dimension = 0;
  bool self_orthogonal = false;
  bool reversible = false;
  DistanceStatus distance = DistanceStatus::Skipped;
  int d_found = -1;

  bool passed() const;
  /// Name of the first failed check, empty when passed.
  std::string failure() const;
};

RowReport verify_table_row(const TableRow& row, const EnumOptions& opts = {});
/// Throws PropertyViolation naming the failed check.
void require_table_row(const TableRow& row, const EnumOptions& opts = {});
/// `row ell=.. n=.. k=.. d=..: dim=.. so=yes rev=yes dmin=..|SKIPPED -> PASS|FAIL`
std::string format_row_report(const RowReport& r);

enum class OffDiagPolicy { Full, Weight, Zero };

struct Pin {
  int i = 0;  // 1-based, i < j
  int j = 0;
  Poly g;
};

struct SearchSpec {
  FieldRef field;
  int ell = 0;
  int m = 0;
  int k_lo = 1;
  int k_hi = 0;
  int target_d = 1;
  std::uint64_t budget = 1'000'000;
  /// Explicit diagonal tuples; empty means every tuple of monic divisors of x^m - 1.
  std::vector<std::vector<Poly>> diagonals;
  OffDiagPolicy policy = OffDiagPolicy::Weight;
  int max_weight = 2;
  std::vector<Pin> pins;
  unsigned jobs = 1;
  std::uint64_t cap = std::uint64_t{1} << 26;
};

/// Lines: `field ...` (optional), `ell L`, `m M`, `k LO HI`, `target_d D`,
/// `budget B`, `diagonal p1 ... pL` (repeatable), `offdiag full|zero|weight<=W`,
/// `pin I J poly` (repeatable), `jobs N`, `cap N`.
SearchSpec parse_search_spec(const std::vector<std::string>& lines);

struct SearchHit {
  MTCode code;
  int k = 0;
  int d = 0;
};

struct SearchResult {
  std::vector<SearchHit> hits;
  bool budget_exhausted = false;
  std::uint64_t nodes = 0;
};

/// Enumerates reduced GPMs (diagonal tuples, then off-diagonal rows from the
/// bottom up) in a fixed order, keeping reversible codes with G J G^t == 0
/// whose dimension lies in [k_lo, k_hi] and whose minimum distance reaches
/// target_d.  Each tried off-diagonal entry (and each last row) counts as one node.
SearchResult search_codes(const SearchSpec& spec);

}  // namespace mtcodes

#endif
