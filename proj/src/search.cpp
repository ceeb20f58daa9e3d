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

#include "mtcodes/search.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <map>
#include <sstream>
#include <thread>
#include <utility>

#include "mtcodes/error.hpp"
#include "mtcodes/qcrev.hpp"
#include "mtcodes/textio.hpp"

namespace mtcodes {

namespace {

std::vector<std::string> words(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  for (std::string w; is >> w;) out.push_back(w);
  return out;
}

long long to_int(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    fail(ErrorKind::ParseError, "bad " + what + " '" + s + "'");
  }
}

std::string rest_of(const std::vector<std::string>& w, std::size_t from) {
  std::string out;
  for (std::size_t i = from; i < w.size(); ++i) out += w[i];
  return out;
}

bool fits_cap(std::uint32_t q, int k, std::uint64_t cap) {
  std::uint64_t size = 1;
  for (int i = 0; i < k; ++i) {
    if (size > cap / q) return false;
    size *= q;
  }
  return size <= cap;
}

}  // namespace

MTShape TableRow::shape() const { return MTShape::uniform(field, static_cast<std::size_t>(ell), m(), Felt{1}); }

MTCode TableRow::code() const {
  const MTShape s = shape();
  PolyMat g(field, static_cast<std::size_t>(ell), static_cast<std::size_t>(ell));
  for (const TableEntry& e : entries) g(static_cast<std::size_t>(e.i - 1), static_cast<std::size_t>(e.j - 1)) = e.g;
  try {
    return MTCode::from_reduced(s, g);
  } catch (const Error& err) {
    fail(ErrorKind::ParseError, "row ell=" + std::to_string(ell) + " n=" + std::to_string(n) +
                                    " is not a reduced GPM: " + err.what());
  }
}

std::vector<TableRow> parse_table(const std::vector<std::string>& lines) {
  FieldRef field = Field::prime(2);
  std::vector<TableRow> rows;
  std::size_t pos = 0;
  if (pos < lines.size() && words(lines[pos]).front() == "field") field = parse_field_header(lines[pos++]);
  for (; pos < lines.size(); ++pos) {
    const auto w = words(lines[pos]);
    if (w.front() == "row") {
      TableRow row;
      row.field = field;
      std::map<std::string, long long> kv;
      for (std::size_t i = 1; i < w.size(); ++i) {
        const auto eq = w[i].find('=');
        if (eq == std::string::npos) fail(ErrorKind::ParseError, "bad row attribute '" + w[i] + "'");
        kv[w[i].substr(0, eq)] = to_int(w[i].substr(eq + 1), w[i].substr(0, eq));
      }
      for (const char* key : {"ell", "n", "k", "d"}) {
        if (!kv.count(key)) fail(ErrorKind::ParseError, std::string("row is missing '") + key + "='");
      }
      row.ell = static_cast<int>(kv["ell"]);
      row.n = static_cast<int>(kv["n"]);
      row.k = static_cast<int>(kv["k"]);
      row.d = static_cast<int>(kv["d"]);
      if (row.ell < 1 || row.n < 1 || row.n % row.ell != 0) {
        fail(ErrorKind::ParseError, "row needs ell >= 1 dividing n (ell=" + std::to_string(row.ell) + " n=" + std::to_string(row.n) + ")");
      }
      rows.push_back(std::move(row));
    } else if (w.front() == "g") {
      if (rows.empty()) fail(ErrorKind::ParseError, "'g' line before any 'row'");
      if (w.size() < 4) fail(ErrorKind::ParseError, "expected 'g <i> <j> <poly>'");
      TableRow& row = rows.back();
      const long long i = to_int(w[1], "row index");
      const long long j = to_int(w[2], "column index");
      if (i < 1 || j < i || j > row.ell) {
        fail(ErrorKind::ParseError, "entry (" + w[1] + "," + w[2] + ") outside the upper triangle");
      }
      row.entries.push_back(TableEntry{static_cast<int>(i), static_cast<int>(j), parse_poly(field, rest_of(w, 3))});
    } else {
      fail(ErrorKind::ParseError, "unexpected line '" + lines[pos] + "'");
    }
  }
  return rows;
}

bool RowReport::passed() const { return failure().empty(); }

std::string RowReport::failure() const {
  if (dimension != k) return "dimension";
  if (!self_orthogonal) return "self-orthogonality";
  if (!reversible) return "reversibility";
  if (distance == DistanceStatus::Mismatch) return "minimum distance";
  return "";
}

RowReport verify_table_row(const TableRow& row, const EnumOptions& opts) {
  const MTCode c = row.code();
  RowReport r;
  r.ell = row.ell;
  r.n = row.n;
  r.k = row.k;
  r.d = row.d;
  r.dimension = dimension(c);
  r.self_orthogonal = is_self_orthogonal(c);
  r.reversible = is_reversible(c);
  if (r.dimension >= 1 && fits_cap(row.field->q(), r.dimension, opts.cap)) {
    r.d_found = min_distance(c, opts);
    r.distance = r.d_found == row.d ? DistanceStatus::Verified : DistanceStatus::Mismatch;
  }
  return r;
}

void require_table_row(const TableRow& row, const EnumOptions& opts) {
  const RowReport r = verify_table_row(row, opts);
  if (!r.passed()) fail(ErrorKind::PropertyViolation, format_row_report(r) + " (failed: " + r.failure() + ")");
}

std::string format_row_report(const RowReport& r) {
  std::ostringstream os;
  os << "row ell=" << r.ell << " n=" << r.n << " k=" << r.k << " d=" << r.d << ": dim=" << r.dimension
     << " self-orthogonal=" << (r.self_orthogonal ? "yes" : "no") << " reversible=" << (r.reversible ? "yes" : "no")
     << " dmin=";
  if (r.distance == DistanceStatus::Skipped) {
    os << "SKIPPED";
  } else {
    os << r.d_found;
  }
  os << ' ' << (r.passed() ? "PASS" : "FAIL");
  return os.str();
}

SearchSpec parse_search_spec(const std::vector<std::string>& lines) {
  SearchSpec spec;
  spec.field = Field::prime(2);
  std::vector<std::vector<std::string>> deferred;
  bool have_ell = false, have_m = false, have_k = false;
  for (const std::string& line : lines) {
    const auto w = words(line);
    const std::string& key = w.front();
    if (key == "field") {
      spec.field = parse_field_header(line);
    } else if (key == "ell" && w.size() == 2) {
      spec.ell = static_cast<int>(to_int(w[1], "ell"));
      have_ell = true;
    } else if (key == "m" && w.size() == 2) {
      spec.m = static_cast<int>(to_int(w[1], "m"));
      have_m = true;
    } else if (key == "k" && w.size() == 3) {
      spec.k_lo = static_cast<int>(to_int(w[1], "k"));
      spec.k_hi = static_cast<int>(to_int(w[2], "k"));
      have_k = true;
    } else if (key == "target_d" && w.size() == 2) {
      spec.target_d = static_cast<int>(to_int(w[1], "target_d"));
    } else if (key == "budget" && w.size() == 2) {
      const long long b = to_int(w[1], "budget");
      if (b < 0) fail(ErrorKind::ParseError, "budget must be nonnegative");
      spec.budget = static_cast<std::uint64_t>(b);
    } else if (key == "jobs" && w.size() == 2) {
      const long long j = to_int(w[1], "jobs");
      if (j < 1) fail(ErrorKind::ParseError, "jobs must be positive");
      spec.jobs = static_cast<unsigned>(j);
    } else if (key == "cap" && w.size() == 2) {
      const long long c = to_int(w[1], "cap");
      if (c < 1) fail(ErrorKind::ParseError, "cap must be positive");
      spec.cap = static_cast<std::uint64_t>(c);
    } else if (key == "offdiag" && w.size() == 2) {
      if (w[1] == "full") {
        spec.policy = OffDiagPolicy::Full;
      } else if (w[1] == "zero") {
        spec.policy = OffDiagPolicy::Zero;
      } else if (w[1].rfind("weight<=", 0) == 0) {
        spec.policy = OffDiagPolicy::Weight;
        spec.max_weight = static_cast<int>(to_int(w[1].substr(8), "weight bound"));
        if (spec.max_weight < 0) fail(ErrorKind::ParseError, "weight bound must be nonnegative");
      } else {
        fail(ErrorKind::ParseError, "offdiag must be full, zero or weight<=W");
      }
    } else if (key == "diagonal" || key == "pin") {
      deferred.push_back(w);
    } else {
      fail(ErrorKind::ParseError, "unexpected search line '" + line + "'");
    }
  }
  if (!have_ell || !have_m) fail(ErrorKind::ParseError, "search spec needs 'ell' and 'm'");
  if (spec.ell < 1 || spec.m < 1) fail(ErrorKind::ParseError, "ell and m must be positive");
  if (!have_k) {
    spec.k_lo = 1;
    spec.k_hi = spec.ell * spec.m;
  }
  const Poly modulus = Poly::binomial(spec.field, spec.m, spec.field->one());
  for (const auto& w : deferred) {
    if (w.front() == "diagonal") {
      if (w.size() != static_cast<std::size_t>(spec.ell) + 1) {
        fail(ErrorKind::ParseError, "diagonal needs " + std::to_string(spec.ell) + " polynomials");
      }
      std::vector<Poly> tuple;
      for (std::size_t i = 1; i < w.size(); ++i) {
        Poly g = parse_poly(spec.field, w[i]);
        if (!g.is_monic() || !divides(g, modulus)) {
          fail(ErrorKind::ParseError, "diagonal entry " + w[i] + " is not a monic divisor of x^m - 1");
        }
        tuple.push_back(std::move(g));
      }
      spec.diagonals.push_back(std::move(tuple));
    } else {
      if (w.size() < 4) fail(ErrorKind::ParseError, "expected 'pin <i> <j> <poly>'");
      const long long i = to_int(w[1], "pin row");
      const long long j = to_int(w[2], "pin column");
      if (i < 1 || j <= i || j > spec.ell) fail(ErrorKind::ParseError, "pin must satisfy 1 <= i < j <= ell");
      spec.pins.push_back(Pin{static_cast<int>(i), static_cast<int>(j), parse_poly(spec.field, rest_of(w, 3))});
    }
  }
  return spec;
}

namespace {

constexpr std::size_t kResidueListLimit = std::size_t{1} << 20;

// Polynomials of degree < d allowed by the policy, in poly_less order.
std::vector<Poly> residues(const SearchSpec& spec, int d) {
  const FieldRef& f = spec.field;
  std::vector<Poly> out{Poly(f)};
  if (d <= 0 || spec.policy == OffDiagPolicy::Zero) return out;
  const int max_w = spec.policy == OffDiagPolicy::Full ? d : std::min(d, spec.max_weight);
  const std::uint32_t q = f->q();
  std::vector<Felt> coeffs(static_cast<std::size_t>(d));
  std::function<void(int, int)> rec = [&](int pos, int used) {
    if (pos == d) {
      if (used > 0) out.emplace_back(f, coeffs);
      return;
    }
    rec(pos + 1, used);
    if (used == max_w) return;
    for (std::uint32_t c = 1; c < q; ++c) {
      coeffs[pos] = Felt{c};
      rec(pos + 1, used + 1);
      if (out.size() > kResidueListLimit) {
        fail(ErrorKind::InvalidArgument, "off-diagonal residue set exceeds " + std::to_string(kResidueListLimit) +
                                             " polynomials; tighten the weight bound");
      }
    }
    coeffs[pos] = Felt{0};
  };
  rec(0, 0);
  std::sort(out.begin(), out.end(), poly_less);
  return out;
}

struct TaskHit {
  std::uint64_t node;
  SearchHit hit;
};

struct TaskOut {
  std::vector<TaskHit> hits;
  std::uint64_t nodes = 0;
  bool exhausted = false;
};

TaskOut run_diagonal(const SearchSpec& spec, const MTShape& shape, const std::vector<Poly>& diag, std::uint64_t budget) {
  const FieldRef& f = spec.field;
  const auto ell = static_cast<std::size_t>(spec.ell);
  const Poly modulus = shape.modulus(0);
  TaskOut out;
  int k = 0;
  for (const Poly& g : diag) k += spec.m - g.degree();

  // Candidate lists per entry (i, j), i < j.
  std::vector<std::vector<std::vector<Poly>>> cand(ell, std::vector<std::vector<Poly>>(ell));
  std::map<int, std::vector<Poly>> by_degree;
  for (std::size_t i = 0; i < ell; ++i) {
    for (std::size_t j = i + 1; j < ell; ++j) {
      const int dj = diag[j].degree();
      auto it = by_degree.find(dj);
      if (it == by_degree.end()) it = by_degree.emplace(dj, residues(spec, dj)).first;
      cand[i][j] = it->second;
    }
  }
  for (const Pin& p : spec.pins) {
    const auto i = static_cast<std::size_t>(p.i - 1), j = static_cast<std::size_t>(p.j - 1);
    if (p.g.degree() >= diag[j].degree()) {
      cand[i][j].clear();
    } else {
      cand[i][j] = {p.g};
    }
  }

  PolyMat g(f, ell, ell);
  PolyMat a(f, ell, ell);
  for (std::size_t i = 0; i < ell; ++i) g(i, i) = diag[i];
  const PolyMat jmat = PolyMat::backward_identity(f, ell);

  // Column j of row i is exact once a(i,j) g(j,j) matches the sum above it.
  auto column_ok = [&](std::size_t i, std::size_t j) {
    Poly s(f);
    for (std::size_t t = i; t < j; ++t) {
      if (!a(i, t).is_zero() && !g(t, j).is_zero()) s += a(i, t) * g(t, j);
    }
    const DivMod qr = divmod(-s, g(j, j));
    if (!qr.rem.is_zero()) return false;
    a(i, j) = qr.quot;
    return true;
  };
  // Entry (i,b) of G J G^t only involves g(i,c) for c <= ell-1-b.
  auto gjg_ok = [&](std::size_t i, std::size_t b) {
    Poly s(f);
    for (std::size_t c = i; c + b <= ell - 1; ++c) {
      const Poly& x = g(i, c);
      const Poly& y = g(b, ell - 1 - c);
      if (!x.is_zero() && !y.is_zero()) s += x * y;
    }
    return divides(modulus, s);
  };

  auto take_node = [&] {
    if (out.nodes >= budget) {
      out.exhausted = true;
      return false;
    }
    ++out.nodes;
    return true;
  };

  std::function<void(std::size_t)> solve_row;
  // Assigns entries (i, j..ell-1) in candidate order, then moves to row i-1.
  std::function<void(std::size_t, std::size_t)> solve_entry = [&](std::size_t i, std::size_t j) {
    if (j == ell) {
      solve_row(i);
      return;
    }
    for (const Poly& p : cand[i][j]) {
      if (out.exhausted || !take_node()) return;
      g(i, j) = p;
      if (!column_ok(i, j)) continue;
      const std::size_t b = ell - 1 - j;
      if (b >= i && !gjg_ok(i, b)) continue;
      solve_entry(i, j + 1);
    }
    g(i, j) = Poly(f);
  };

  solve_row = [&](std::size_t rows_left) {
    if (out.exhausted) return;
    if (rows_left == 0) {
      const MTCode code = MTCode::from_reduced(shape, g);
      if (!is_reversible(code)) return;
      if (!fits_cap(f->q(), k, spec.cap)) return;
      EnumOptions eo;
      eo.cap = spec.cap;
      const int d = min_distance(code, eo);
      if (d < spec.target_d) return;
      if (!is_self_orthogonal(code)) {
        fail(ErrorKind::PropertyViolation, "reversible code with G J G^t == 0 is not self-orthogonal");
      }
      out.hits.push_back(TaskHit{out.nodes, SearchHit{code, k, d}});
      return;
    }
    const std::size_t i = rows_left - 1;
    if (i + 1 == ell && !take_node()) return;
    a(i, i) = exact_div(modulus, g(i, i));
    for (std::size_t b = std::max(i, ell - 1 - i); b < ell; ++b) {
      if (!gjg_ok(i, b)) return;
    }
    solve_entry(i, i + 1);
  };
  solve_row(ell);
  return out;
}

std::vector<std::vector<Poly>> diagonal_tuples(const SearchSpec& spec) {
  if (!spec.diagonals.empty()) return spec.diagonals;
  const Poly modulus = Poly::binomial(spec.field, spec.m, spec.field->one());
  const std::vector<Poly> divs = monic_divisors(modulus, std::max(24, spec.m));
  std::vector<std::vector<Poly>> out;
  std::vector<std::size_t> idx(static_cast<std::size_t>(spec.ell), 0);
  for (;;) {
    std::vector<Poly> t;
    for (std::size_t i : idx) t.push_back(divs[i]);
    out.push_back(std::move(t));
    std::size_t p = idx.size();
    while (p > 0) {
      --p;
      if (++idx[p] < divs.size()) break;
      idx[p] = 0;
      if (p == 0) return out;
    }
  }
}

}  // namespace

SearchResult search_codes(const SearchSpec& spec) {
  const MTShape shape = MTShape::uniform(spec.field, static_cast<std::size_t>(spec.ell), spec.m, spec.field->one());
  std::vector<std::vector<Poly>> tuples;
  for (auto& t : diagonal_tuples(spec)) {
    int k = 0;
    for (const Poly& g : t) k += spec.m - g.degree();
    if (k >= spec.k_lo && k <= spec.k_hi && k >= 1) tuples.push_back(std::move(t));
  }

  SearchResult result;
  if (spec.budget == 0) {
    result.budget_exhausted = true;
    return result;
  }
  const unsigned jobs = std::max(1u, spec.jobs);
  std::size_t next = 0;
  while (next < tuples.size() && !result.budget_exhausted) {
    const std::size_t batch = std::min<std::size_t>(jobs, tuples.size() - next);
    const std::uint64_t remaining = spec.budget - result.nodes;
    std::vector<TaskOut> outs(batch);
    std::vector<std::exception_ptr> errors(batch);
    auto work = [&](std::size_t b) {
      try {
        outs[b] = run_diagonal(spec, shape, tuples[next + b], remaining);
      } catch (...) {
        errors[b] = std::current_exception();
      }
    };
    if (batch == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (std::size_t b = 0; b < batch; ++b) pool.emplace_back(work, b);
      for (auto& th : pool) th.join();
    }
    for (std::size_t b = 0; b < batch && !result.budget_exhausted; ++b) {
      if (errors[b]) std::rethrow_exception(errors[b]);
      const std::uint64_t left = spec.budget - result.nodes;
      for (TaskHit& h : outs[b].hits) {
        if (h.node <= left) result.hits.push_back(std::move(h.hit));
      }
      if (outs[b].exhausted || outs[b].nodes > left) {
        result.nodes = spec.budget;
        result.budget_exhausted = true;
      } else {
        result.nodes += outs[b].nodes;
      }
    }
    next += batch;
  }
  return result;
}

}  // namespace mtcodes
