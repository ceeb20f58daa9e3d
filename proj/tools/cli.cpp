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

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>

#include "mtcodes/analysis.hpp"
#include "mtcodes/error.hpp"
#include "mtcodes/mtcode.hpp"
#include "mtcodes/qcrev.hpp"
#include "mtcodes/search.hpp"
#include "mtcodes/textio.hpp"

namespace mtcodes::cli {

namespace {

constexpr const char* kFormats = R"(File formats (blank lines and text after '#' are ignored):

  Field header     field p=<prime> ext=<d> [modulus=<c0>,<c1>,...,<cd>]
                   modulus is required when ext > 1 (ascending coefficients).
  Field element    integer code sum a_i p^i for a_0 + a_1 t + ... (t the
                   field generator).
  Polynomial       0 | <c>@<e>+<c>@<e>+...   e.g. 1@0+3@2 = 1 + (1+t)x^2
                   over F_2 also {e1,e2,...} listing the nonzero exponents.
  Matrix block     pm <rows> <cols>, then one line per row with entries
                   separated by ';'.
  Code file        field ... / blocks m1 ... ml / lambdas c1 ... cl /
                   gpm <r> <l> followed by r rows; any generating set is
                   accepted and reduced on load.
  Genmat file      field ... / blocks ... / lambdas ... /
                   [order block|interleaved] / genmat <k> <n> followed by
                   k rows of n element codes.  Interleaved order lists
                   c_{0,1} ... c_{0,l} c_{1,1} ... (equal blocks only).
  Table file       [field ...] then per code
                     row ell=<l> n=<n> k=<k> d=<d>
                     g <i> <j> <poly>        (upper-triangular entries)
  Search spec      [field ...] / ell <l> / m <m> / k <lo> <hi> /
                   target_d <d> / budget <nodes> / offdiag full|zero|weight<=W /
                   diagonal <p1> ... <pl> (repeatable) / pin <i> <j> <poly>
                   (repeatable) / jobs <n> / cap <codewords>
  Enumerator line  wenum n=<n> <w>:<A_w> ... (nonzero counts, ascending w)

Exit codes: 0 success or property holds, 1 property fails, 2 input error,
3 enumeration cap or search budget exceeded.)";

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EnumerationCapExceeded:
    case ErrorKind::BudgetExhausted:
      return kLimitExceeded;
    case ErrorKind::PropertyViolation:
      return kPropertyFails;
    default:
      return kInputError;
  }
}

bool is_genmat_file(const std::vector<std::string>& lines) {
  return std::any_of(lines.begin(), lines.end(), [](const std::string& l) { return l.rfind("genmat", 0) == 0; });
}

MTCode load_any(const std::string& path) {
  const auto lines = read_content_lines(path);
  if (is_genmat_file(lines)) {
    const GenMatFile gf = parse_genmat_file(lines);
    return from_generator_matrix(gf.g, gf.shape);
  }
  const CodeFile cf = parse_code_file(lines);
  return MTCode::from_generators(cf.shape, cf.gens);
}

int report(std::ostream& out, const std::string& property, bool holds, const std::string& note = "") {
  out << property << ": " << (holds ? "holds" : "fails");
  if (!note.empty()) out << " (" << note << ")";
  out << "\n";
  return holds ? kOk : kPropertyFails;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multi-twisted codes as free modules over F_q[x]", "mtcodes"};
  app.footer(kFormats);
  app.require_subcommand(1);

  std::string file;
  std::uint64_t cap = std::uint64_t{1} << 26;
  unsigned jobs = 1;

  auto* reduce = app.add_subcommand("reduce", "Print the code with its reduced GPM");
  reduce->add_option("code-file", file, "Code file")->required();

  auto* amat = app.add_subcommand("amat", "Print the matrix A of the identical equation A G = D");
  amat->add_option("code-file", file, "Code file")->required();

  auto* dim = app.add_subcommand("dim", "Print the dimension over F_q");
  dim->add_option("code-file", file, "Code file")->required();

  std::string variant = "general";
  bool trace = false;
  auto* dualc = app.add_subcommand("dual", "Print the dual code");
  dualc->add_option("code-file", file, "Code file")->required();
  dualc->add_option("--variant", variant, "Construction of the dual GPM")
      ->check(CLI::IsMember({"general", "qc", "qt", "gqc"}));
  dualc->add_flag("--trace", trace, "Also print A(1/x), A*, A** and H");

  bool show_f = false;
  auto* reverse = app.add_subcommand("reverse", "Print the reversed code of a quasi-cyclic code");
  reverse->add_option("code-file", file, "Code file")->required();
  reverse->add_flag("--matrix", show_f, "Also print the unreduced reversed GPM F");

  std::string property;
  auto* check = app.add_subcommand("check", "Test a property (exit 0 holds, 1 fails)");
  check->add_option("code-file", file, "Code file or genmat file")->required();
  check->add_option("--property", property, "Property to test")
      ->required()
      ->check(CLI::IsMember({"mt", "self-orthogonal", "self-dual", "reversible", "gjg", "aja", "a-jgj"}));

  bool mac_dual = false;
  auto* wenum = app.add_subcommand("wenum", "Print the weight enumerator");
  wenum->add_option("code-file", file, "Code file")->required();
  wenum->add_flag("--mac-dual", mac_dual, "Print the dual enumerator obtained by the MacWilliams transform");
  wenum->add_option("--cap", cap, "Maximum number of codewords to enumerate");
  wenum->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  auto* mindist = app.add_subcommand("mindist", "Print the minimum distance");
  mindist->add_option("code-file", file, "Code file")->required();
  mindist->add_option("--cap", cap, "Maximum number of codewords to enumerate");
  mindist->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  auto* fromgen = app.add_subcommand("from-genmat", "Convert a generator matrix to a code file");
  fromgen->add_option("genmat-file", file, "Genmat file")->required();

  std::string field_spec;
  std::string poly_text;
  int degree_cap = 24;
  auto* factor_cmd = app.add_subcommand("factor", "Factor a polynomial into monic irreducibles");
  factor_cmd->add_option("--field", field_spec, "Field, e.g. \"p=3 ext=2 modulus=2,2,1\"")->required();
  factor_cmd->add_option("poly", poly_text, "Polynomial")->required();
  factor_cmd->add_option("--degree-cap", degree_cap, "Largest degree accepted");

  auto* verify = app.add_subcommand("verify-table", "Verify every code of a table file");
  verify->add_option("table-file", file, "Table file")->required();
  verify->add_option("--cap", cap, "Codeword cap for minimum distances");
  verify->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  auto* search = app.add_subcommand("search", "Search self-orthogonal reversible quasi-cyclic codes");
  search->add_option("spec-file", file, "Search spec file")->required();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    EnumOptions eo;
    eo.cap = cap;
    eo.jobs = jobs;

    if (*reduce) {
      out << format_code(load_code(file));
    } else if (*amat) {
      out << format_polymat(load_code(file).amat());
    } else if (*dim) {
      out << "k=" << dimension(load_code(file)) << "\n";
    } else if (*dualc) {
      const MTCode c = load_code(file);
      PolyMat h = dual_gpm(c);
      if (variant == "qc") h = dual_gpm_qc(c);
      if (variant == "qt") h = dual_gpm_qt(c);
      if (variant == "gqc") h = dual_gpm_gqc(c);
      if (trace) {
        const DualTrace t = dual_trace(c);
        out << "# A(1/x)\n" << format_laumat(t.a_inv) << "# A*\n" << format_laumat(t.a_star) << "# A**\n"
            << format_polymat(t.a_star_star) << "# H\n" << format_polymat(h);
      }
      out << format_code(MTCode::from_generators(c.shape().dual(), h));
    } else if (*reverse) {
      const MTCode c = load_code(file);
      if (show_f) out << "# F\n" << format_polymat(reversed_gpm(c).f);
      out << format_code(reversed_code(c));
    } else if (*check) {
      const auto lines = read_content_lines(file);
      if (property == "mt") {
        if (is_genmat_file(lines)) {
          const GenMatFile gf = parse_genmat_file(lines);
          return report(out, property, is_multi_twisted(gf.g, gf.shape));
        }
        const MTCode c = load_code(file);
        return report(out, property, is_multi_twisted(expand(c), c.shape()));
      }
      const MTCode c = load_any(file);
      if (property == "self-orthogonal") return report(out, property, is_self_orthogonal(c));
      if (property == "self-dual") {
        const Verdict v = is_self_dual(c);
        return report(out, property, v.holds, v.diagnostic);
      }
      if (property == "reversible") return report(out, property, is_reversible(c));
      const CombinedChecks cc = combined_checks(c);
      if (property == "gjg") return report(out, property, cc.gjg_zero);
      if (property == "aja") return report(out, property, cc.aja_zero);
      return report(out, property, cc.a_eq_jgj);
    } else if (*wenum) {
      const MTCode c = load_code(file);
      WeightEnumerator w = weight_enumerator(c, eo);
      if (mac_dual) w = macwilliams(w, c.field()->q(), w.total());
      out << format_wenum_line(w) << "\n" << "W = " << format_wenum_poly(w) << "\n";
    } else if (*mindist) {
      out << "d=" << min_distance(load_code(file), eo) << "\n";
    } else if (*fromgen) {
      const GenMatFile gf = read_genmat_file(file);
      out << format_code(from_generator_matrix(gf.g, gf.shape));
    } else if (*factor_cmd) {
      const FieldRef f = parse_field_header("field " + field_spec);
      const Poly p = parse_poly(f, poly_text);
      if (p.is_zero()) fail(ErrorKind::InvalidArgument, "cannot factor the zero polynomial");
      if (p.lead() != f->one()) out << "unit " << p.lead().code << "\n";
      for (const auto& [g, mult] : factor(p, degree_cap)) out << format_poly(g) << " ^" << mult << "\n";
    } else if (*verify) {
      const auto rows = parse_table(read_content_lines(file));
      std::size_t passed = 0;
      for (const TableRow& row : rows) {
        const RowReport r = verify_table_row(row, eo);
        out << format_row_report(r) << "\n";
        passed += r.passed();
      }
      out << "summary: " << passed << "/" << rows.size() << " rows passed\n";
      return passed == rows.size() ? kOk : kPropertyFails;
    } else if (*search) {
      const SearchSpec spec = parse_search_spec(read_content_lines(file));
      const SearchResult res = search_codes(spec);
      for (const SearchHit& h : res.hits) {
        out << "hit k=" << h.k << " d=" << h.d << "\n" << format_polymat(h.code.gpm());
      }
      out << "nodes=" << res.nodes << " hits=" << res.hits.size()
          << " budget_exhausted=" << (res.budget_exhausted ? "yes" : "no") << "\n";
      return res.budget_exhausted ? kLimitExceeded : kOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kOk;
}

}  // namespace mtcodes::cli
