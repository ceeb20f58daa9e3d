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

#include "mtcodes/textio.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>

#include "mtcodes/error.hpp"

namespace mtcodes {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

long long parse_int(std::string_view s, const char* what) {
  s = trim(s);
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    fail(ErrorKind::ParseError, std::string("bad ") + what + " '" + std::string(s) + "'");
  }
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::vector<std::string> words(std::string_view line) {
  std::istringstream is{std::string(line)};
  std::vector<std::string> out;
  for (std::string w; is >> w;) out.push_back(w);
  return out;
}

// Reads `<keyword> v1 v2 ...`.
std::vector<long long> keyword_ints(const std::string& line, const std::string& keyword) {
  const auto w = words(line);
  if (w.empty() || w.front() != keyword) fail(ErrorKind::ParseError, "expected '" + keyword + "' line, got '" + line + "'");
  std::vector<long long> out;
  for (std::size_t i = 1; i < w.size(); ++i) out.push_back(parse_int(w[i], keyword.c_str()));
  return out;
}

MTShape parse_shape_header(const std::vector<std::string>& lines, std::size_t& pos) {
  if (lines.size() < pos + 3) fail(ErrorKind::ParseError, "missing field/blocks/lambdas header");
  FieldRef f = parse_field_header(lines[pos++]);
  std::vector<int> ms;
  for (long long m : keyword_ints(lines[pos++], "blocks")) ms.push_back(static_cast<int>(m));
  std::vector<Felt> lambdas;
  for (long long l : keyword_ints(lines[pos++], "lambdas")) {
    if (l < 0) fail(ErrorKind::ParseError, "negative shift constant");
    lambdas.push_back(Felt{static_cast<std::uint32_t>(l)});
  }
  try {
    return MTShape::make(f, ms, lambdas);
  } catch (const Error& e) {
    fail(ErrorKind::ParseError, e.what());
  }
}

}  // namespace

FieldRef parse_field_header(std::string_view line) {
  const auto w = words(line);
  if (w.empty() || w.front() != "field") fail(ErrorKind::ParseError, "expected 'field' header, got '" + std::string(line) + "'");
  long long p = -1, ext = 1;
  std::vector<std::uint32_t> modulus;
  bool have_modulus = false;
  for (std::size_t i = 1; i < w.size(); ++i) {
    const auto eq = w[i].find('=');
    if (eq == std::string::npos) fail(ErrorKind::ParseError, "bad field attribute '" + w[i] + "'");
    const std::string key = w[i].substr(0, eq);
    const std::string val = w[i].substr(eq + 1);
    if (key == "p") {
      p = parse_int(val, "characteristic");
    } else if (key == "ext") {
      ext = parse_int(val, "extension degree");
    } else if (key == "modulus") {
      have_modulus = true;
      for (auto part : split(val, ',')) {
        const long long c = parse_int(part, "modulus coefficient");
        if (c < 0) fail(ErrorKind::ParseError, "negative modulus coefficient");
        modulus.push_back(static_cast<std::uint32_t>(c));
      }
    } else {
      fail(ErrorKind::ParseError, "unknown field attribute '" + key + "'");
    }
  }
  if (p < 2) fail(ErrorKind::ParseError, "field header needs p=<prime>");
  if (ext < 1) fail(ErrorKind::ParseError, "field extension degree must be >= 1");
  if (ext > 1 && !have_modulus) fail(ErrorKind::ParseError, "modulus required when ext > 1");
  return Field::make(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(ext), modulus);
}

Poly parse_poly(const FieldRef& field, std::string_view text) {
  std::string compact;
  for (char ch : text)
    if (ch != ' ' && ch != '\t') compact.push_back(ch);
  if (compact.empty()) fail(ErrorKind::ParseError, "empty polynomial");
  if (compact == "0") return Poly(field);
  std::map<int, Felt> terms;
  auto add_term = [&](Felt c, long long e) {
    if (e < 0 || e > (1 << 20)) fail(ErrorKind::ParseError, "exponent out of range in '" + compact + "'");
    if (!field->contains(c)) fail(ErrorKind::ParseError, "coefficient " + std::to_string(c.code) + " not in the field");
    auto [it, inserted] = terms.emplace(static_cast<int>(e), c);
    if (!inserted) it->second = field->add(it->second, c);
  };
  if (compact.front() == '{') {
    if (compact.back() != '}') fail(ErrorKind::ParseError, "unterminated exponent set '" + compact + "'");
    const std::string_view inner = std::string_view(compact).substr(1, compact.size() - 2);
    if (!inner.empty()) {
      for (auto part : split(inner, ',')) add_term(field->one(), parse_int(part, "exponent"));
    }
  } else {
    for (auto part : split(compact, '+')) {
      const auto at = part.find('@');
      if (at == std::string_view::npos) {
        const long long c = parse_int(part, "coefficient");
        if (c < 0) fail(ErrorKind::ParseError, "negative coefficient");
        add_term(Felt{static_cast<std::uint32_t>(c)}, 0);
      } else {
        const long long c = parse_int(part.substr(0, at), "coefficient");
        if (c < 0) fail(ErrorKind::ParseError, "negative coefficient");
        add_term(Felt{static_cast<std::uint32_t>(c)}, parse_int(part.substr(at + 1), "exponent"));
      }
    }
  }
  if (terms.empty()) return Poly(field);
  std::vector<Felt> coeffs(static_cast<std::size_t>(terms.rbegin()->first) + 1);
  for (const auto& [e, c] : terms) coeffs[e] = c;
  return Poly(field, std::move(coeffs));
}

std::string format_poly(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto c = p.coeffs();
  if (p.f().q() == 2) {
    out = "{";
    bool first = true;
    for (std::size_t e = 0; e < c.size(); ++e) {
      if (c[e].code == 0) continue;
      if (!first) out += ',';
      first = false;
      out += std::to_string(e);
    }
    return out + "}";
  }
  for (std::size_t e = 0; e < c.size(); ++e) {
    if (c[e].code == 0) continue;
    if (!out.empty()) out += '+';
    out += std::to_string(c[e].code) + "@" + std::to_string(e);
  }
  return out;
}

std::string format_lau(const LauPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int e = p.lo(); e <= p.hi(); ++e) {
    const Felt c = p.coeff(e);
    if (c.code == 0) continue;
    if (!out.empty()) out += '+';
    out += std::to_string(c.code) + "@" + std::to_string(e);
  }
  return out;
}

std::string format_polymat(const PolyMat& m) {
  std::string out = "pm " + std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c > 0) out += "; ";
      out += format_poly(m(r, c));
    }
    out += "\n";
  }
  return out;
}

std::string format_laumat(const LauMat& m) {
  std::string out = "lm " + std::to_string(m.rows) + " " + std::to_string(m.cols) + "\n";
  for (std::size_t r = 0; r < m.rows; ++r) {
    for (std::size_t c = 0; c < m.cols; ++c) {
      if (c > 0) out += "; ";
      out += format_lau(m.at(r, c));
    }
    out += "\n";
  }
  return out;
}

std::vector<std::string> content_lines(std::istream& in) {
  std::vector<std::string> out;
  for (std::string line; std::getline(in, line);) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto t = trim(line);
    if (!t.empty()) out.emplace_back(t);
  }
  return out;
}

std::vector<std::string> read_content_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::ParseError, "cannot open '" + path + "'");
  return content_lines(in);
}

std::vector<Poly> parse_poly_row(const FieldRef& field, std::string_view line, std::size_t expected) {
  std::vector<Poly> out;
  for (auto part : split(line, ';')) out.push_back(parse_poly(field, part));
  if (out.size() != expected) {
    fail(ErrorKind::ParseError, "row has " + std::to_string(out.size()) + " entries, expected " + std::to_string(expected));
  }
  return out;
}

CodeFile parse_code_file(const std::vector<std::string>& lines) {
  std::size_t pos = 0;
  MTShape shape = parse_shape_header(lines, pos);
  if (pos >= lines.size()) fail(ErrorKind::ParseError, "missing 'gpm' block");
  const auto dims = keyword_ints(lines[pos++], "gpm");
  if (dims.size() != 2 || dims[0] < 1) fail(ErrorKind::ParseError, "expected 'gpm <rows> <cols>'");
  if (dims[1] != static_cast<long long>(shape.ell())) {
    fail(ErrorKind::ParseError, "gpm has " + std::to_string(dims[1]) + " columns for " + std::to_string(shape.ell()) + " blocks");
  }
  const auto rows = static_cast<std::size_t>(dims[0]);
  if (lines.size() != pos + rows) {
    fail(ErrorKind::ParseError, "expected " + std::to_string(rows) + " gpm rows, found " + std::to_string(lines.size() - pos));
  }
  PolyMat gens(shape.field, rows, shape.ell());
  for (std::size_t r = 0; r < rows; ++r) gens.set_row(r, parse_poly_row(shape.field, lines[pos + r], shape.ell()));
  return CodeFile{std::move(shape), std::move(gens)};
}

CodeFile read_code_file(const std::string& path) { return parse_code_file(read_content_lines(path)); }

MTCode load_code(const std::string& path) {
  const CodeFile cf = read_code_file(path);
  return MTCode::from_generators(cf.shape, cf.gens);
}

std::string format_shape_header(const MTShape& shape) {
  std::string out = shape.field->header() + "\nblocks";
  for (int m : shape.ms) out += " " + std::to_string(m);
  out += "\nlambdas";
  for (Felt l : shape.lambdas) out += " " + std::to_string(l.code);
  return out + "\n";
}

std::string format_code(const MTCode& c) {
  std::string out = format_shape_header(c.shape());
  const std::string block = format_polymat(c.gpm());
  return out + "gpm" + block.substr(2);
}

GenMatFile parse_genmat_file(const std::vector<std::string>& lines) {
  std::size_t pos = 0;
  MTShape shape = parse_shape_header(lines, pos);
  bool interleaved = false;
  if (pos < lines.size() && words(lines[pos]).front() == "order") {
    const auto w = words(lines[pos++]);
    if (w.size() != 2 || (w[1] != "block" && w[1] != "interleaved")) {
      fail(ErrorKind::ParseError, "expected 'order block' or 'order interleaved'");
    }
    interleaved = w[1] == "interleaved";
    if (interleaved && !shape.equal_blocks()) fail(ErrorKind::ParseError, "interleaved order needs equal block lengths");
  }
  if (pos >= lines.size()) fail(ErrorKind::ParseError, "missing 'genmat' block");
  const auto dims = keyword_ints(lines[pos++], "genmat");
  if (dims.size() != 2 || dims[0] < 0) fail(ErrorKind::ParseError, "expected 'genmat <k> <n>'");
  if (dims[1] != shape.n()) {
    fail(ErrorKind::ParseError, "genmat has " + std::to_string(dims[1]) + " columns, shape length " + std::to_string(shape.n()));
  }
  const auto k = static_cast<std::size_t>(dims[0]);
  const auto n = static_cast<std::size_t>(dims[1]);
  if (lines.size() != pos + k) {
    fail(ErrorKind::ParseError, "expected " + std::to_string(k) + " genmat rows, found " + std::to_string(lines.size() - pos));
  }
  FMatrix g(shape.field, k, n);
  const std::size_t ell = shape.ell();
  const auto m = static_cast<std::size_t>(shape.ms.front());
  for (std::size_t r = 0; r < k; ++r) {
    const auto w = words(lines[pos + r]);
    if (w.size() != n) fail(ErrorKind::ParseError, "genmat row " + std::to_string(r + 1) + " has " + std::to_string(w.size()) + " entries");
    for (std::size_t c = 0; c < n; ++c) {
      const long long v = parse_int(w[c], "field element");
      if (v < 0 || !shape.field->contains(Felt{static_cast<std::uint32_t>(v)})) {
        fail(ErrorKind::ParseError, "element " + w[c] + " not in the field");
      }
      const std::size_t col = interleaved ? (c % ell) * m + c / ell : c;
      g(r, col) = Felt{static_cast<std::uint32_t>(v)};
    }
  }
  return GenMatFile{std::move(shape), std::move(g)};
}

GenMatFile read_genmat_file(const std::string& path) { return parse_genmat_file(read_content_lines(path)); }

std::string format_genmat(const FMatrix& g, const MTShape& shape) {
  std::string out = format_shape_header(shape);
  out += "genmat " + std::to_string(g.rows()) + " " + std::to_string(g.cols()) + "\n";
  for (std::size_t r = 0; r < g.rows(); ++r) {
    for (std::size_t c = 0; c < g.cols(); ++c) {
      if (c > 0) out += ' ';
      out += std::to_string(g(r, c).code);
    }
    out += "\n";
  }
  return out;
}

}  // namespace mtcodes
