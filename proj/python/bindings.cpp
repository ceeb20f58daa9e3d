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


#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include <sstream>

#include "mtcodes/analysis.hpp"
#include "mtcodes/error.hpp"
#include "mtcodes/mtcode.hpp"
#include "mtcodes/qcrev.hpp"
#include "mtcodes/search.hpp"
#include "mtcodes/textio.hpp"

namespace py = pybind11;
using namespace mtcodes;

namespace {

using MutField = std::shared_ptr<Field>;

MutField mut(const FieldRef& f) { return std::const_pointer_cast<Field>(f); }

py::object to_pyint(const BigInt& v) {
  const std::string s = v.str();
  return py::reinterpret_steal<py::object>(PyLong_FromString(s.c_str(), nullptr, 10));
}

BigInt from_pyint(const py::handle& h) { return BigInt(py::str(h).cast<std::string>()); }

py::list coeff_list(const WeightEnumerator& w) {
  py::list out;
  for (const auto& c : w.coeffs) out.append(to_pyint(c));
  return out;
}

std::vector<Felt> felts(const std::vector<std::uint32_t>& codes) {
  std::vector<Felt> out;
  for (auto c : codes) out.push_back(Felt{c});
  return out;
}

std::vector<std::uint32_t> codes(std::span<const Felt> v) {
  std::vector<std::uint32_t> out;
  for (Felt x : v) out.push_back(x.code);
  return out;
}

PolyMat polymat_from_rows(const MutField& f, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::vector<Poly>> out;
  for (const auto& r : rows) {
    std::vector<Poly> row;
    for (const auto& e : r) row.push_back(parse_poly(f, e));
    out.push_back(std::move(row));
  }
  return PolyMat::from_rows(f, out);
}

std::vector<std::string> split_lines(const std::string& text) {
  std::istringstream is(text);
  return content_lines(is);
}

EnumOptions enum_options(std::uint64_t cap, unsigned jobs) {
  EnumOptions o;
  o.cap = cap;
  o.jobs = jobs;
  return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Multi-twisted codes as free modules over F_q[x].";

  static PyObject* error = PyErr_NewException("mtcodes._core.Error", PyExc_ValueError, nullptr);
  m.attr("Error") = py::handle(error);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetString(error, e.what());
    }
  });

  py::class_<Field, MutField>(m, "Field")
      .def(py::init([](std::uint32_t p, std::uint32_t d, std::vector<std::uint32_t> modulus) {
             return mut(Field::make(p, d, std::move(modulus)));
           }),
           py::arg("p"), py::arg("d") = 1, py::arg("modulus") = std::vector<std::uint32_t>{})
      .def_static("parse", [](const std::string& header) { return mut(parse_field_header(header)); })
      .def_property_readonly("p", &Field::p)
      .def_property_readonly("d", &Field::d)
      .def_property_readonly("q", &Field::q)
      .def("add", [](const Field& f, std::uint32_t a, std::uint32_t b) { return f.add(Felt{a}, Felt{b}).code; })
      .def("mul", [](const Field& f, std::uint32_t a, std::uint32_t b) { return f.mul(Felt{a}, Felt{b}).code; })
      .def("inv", [](const Field& f, std::uint32_t a) { return f.inv(Felt{a}).code; })
      .def("mult_order", [](const Field& f, std::uint32_t a) { return f.mult_order(Felt{a}); })
      .def("__str__", &Field::header)
      .def("__repr__", [](const Field& f) { return "<Field " + f.header() + ">"; });

  py::class_<Poly>(m, "Poly")
      .def(py::init([](const MutField& f, const std::string& text) { return parse_poly(f, text); }), py::arg("field"),
           py::arg("text") = "0")
      .def_property_readonly("field", [](const Poly& p) { return mut(p.field()); })
      .def_property_readonly("degree", [](const Poly& p) { return p.is_zero() ? py::object(py::none()) : py::int_(p.degree()); })
      .def_property_readonly("coeffs", [](const Poly& p) { return codes(p.coeffs()); })
      .def("is_zero", &Poly::is_zero)
      .def("monic", &Poly::monic)
      .def("reciprocal", [](const Poly& p) { return reciprocal(p); })
      .def("divmod", [](const Poly& a, const Poly& b) {
        DivMod dm = divmod(a, b);
        return py::make_tuple(dm.quot, dm.rem);
      })
      .def("gcd", [](const Poly& a, const Poly& b) { return gcd(a, b); })
      .def("factor", [](const Poly& a, int cap) { return factor(a, cap); }, py::arg("degree_cap") = 24)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def("__str__", [](const Poly& p) { return format_poly(p); })
      .def("__repr__", [](const Poly& p) { return "<Poly " + format_poly(p) + ">"; });

  py::class_<PolyMat>(m, "PolyMat")
      .def(py::init(&polymat_from_rows), py::arg("field"), py::arg("rows"))
      .def_static("identity", [](const MutField& f, std::size_t n) { return PolyMat::identity(f, n); })
      .def_property_readonly("rows", &PolyMat::rows)
      .def_property_readonly("cols", &PolyMat::cols)
      .def("__getitem__", [](const PolyMat& a, std::pair<std::size_t, std::size_t> ij) {
        if (ij.first >= a.rows() || ij.second >= a.cols()) throw py::index_error("entry out of range");
        return a(ij.first, ij.second);
      })
      .def("transpose", &PolyMat::transpose)
      .def("det", [](const PolyMat& a) { return det(a); })
      .def("is_unimodular", [](const PolyMat& a) { return is_unimodular(a); })
      .def("hnf", [](const PolyMat& a) {
        HnfResult r = hnf(a);
        return py::make_tuple(r.h, r.u, r.rank);
      })
      .def("member", [](const PolyMat& basis, const std::vector<Poly>& v) { return member(v, basis).member; })
      .def(py::self * py::self)
      .def(py::self + py::self)
      .def(py::self == py::self)
      .def("__str__", [](const PolyMat& a) { return format_polymat(a); });

  py::class_<MTShape>(m, "Shape")
      .def(py::init([](const MutField& f, std::vector<int> ms, const std::vector<std::uint32_t>& lambdas) {
             return MTShape::make(f, std::move(ms), felts(lambdas));
           }),
           py::arg("field"), py::arg("blocks"), py::arg("lambdas"))
      .def_property_readonly("field", [](const MTShape& s) { return mut(s.field); })
      .def_property_readonly("blocks", [](const MTShape& s) { return s.ms; })
      .def_property_readonly("lambdas", [](const MTShape& s) { return codes(s.lambdas); })
      .def_property_readonly("n", &MTShape::n)
      .def_property_readonly("ell", &MTShape::ell)
      .def("is_qc", &MTShape::is_qc)
      .def("is_qt", &MTShape::is_qt)
      .def("is_gqc", &MTShape::is_gqc)
      .def("dual", &MTShape::dual)
      .def(py::self == py::self)
      .def("__str__", [](const MTShape& s) { return format_shape_header(s); });

  py::class_<MTCode>(m, "Code")
      .def(py::init([](const MTShape& s, const PolyMat& gens) { return MTCode::from_generators(s, gens); }),
           py::arg("shape"), py::arg("generators"))
      .def_static("load", [](const std::string& path) { return load_code(path); })
      .def_static("parse", [](const std::string& text) {
        const CodeFile cf = parse_code_file(split_lines(text));
        return MTCode::from_generators(cf.shape, cf.gens);
      })
      .def_static("from_generator_matrix", [](const MTShape& s, const std::vector<std::vector<std::uint32_t>>& rows) {
        std::vector<std::vector<Felt>> r;
        for (const auto& row : rows) r.push_back(felts(row));
        return from_generator_matrix(FMatrix::from_rows(s.field, r), s);
      })
      .def_static("constacyclic", [](const Poly& g, int m, std::uint32_t lambda) { return constacyclic(g, m, Felt{lambda}); })
      .def_property_readonly("shape", &MTCode::shape)
      .def_property_readonly("gpm", &MTCode::gpm)
      .def_property_readonly("amat", &MTCode::amat)
      .def_property_readonly("dimension", [](const MTCode& c) { return dimension(c); })
      .def("expand", [](const MTCode& c) {
        const FMatrix e = expand(c);
        std::vector<std::vector<std::uint32_t>> out;
        for (std::size_t i = 0; i < e.rows(); ++i) out.push_back(codes(e.row(i)));
        return out;
      })
      .def("dual", [](const MTCode& c) { return dual(c); })
      .def("dual_gpm", [](const MTCode& c, const std::string& variant) {
        if (variant == "qc") return dual_gpm_qc(c);
        if (variant == "qt") return dual_gpm_qt(c);
        if (variant == "gqc") return dual_gpm_gqc(c);
        if (variant == "general") return dual_gpm(c);
        throw py::value_error("variant must be general, qc, qt or gqc");
      }, py::arg("variant") = "general")
      .def("reversed", [](const MTCode& c) { return reversed_code(c); })
      .def("reversed_gpm", [](const MTCode& c) { return reversed_gpm(c).f; })
      .def("is_reversible", [](const MTCode& c) { return is_reversible(c); })
      .def("is_self_orthogonal", [](const MTCode& c) { return is_self_orthogonal(c); })
      .def("is_self_dual", [](const MTCode& c) {
        const Verdict v = is_self_dual(c);
        return py::make_tuple(v.holds, v.diagnostic);
      })
      .def("combined_checks", [](const MTCode& c) {
        const CombinedChecks cc = combined_checks(c);
        py::dict d;
        d["gjg_zero"] = cc.gjg_zero;
        d["aja_zero"] = cc.aja_zero;
        d["a_eq_jgj"] = cc.a_eq_jgj;
        return d;
      })
      .def("weight_enumerator", [](const MTCode& c, std::uint64_t cap, unsigned jobs) {
        WeightEnumerator w;
        {
          py::gil_scoped_release release;
          w = weight_enumerator(c, enum_options(cap, jobs));
        }
        return coeff_list(w);
      }, py::arg("cap") = std::uint64_t{1} << 26, py::arg("jobs") = 1)
      .def("min_distance", [](const MTCode& c, std::uint64_t cap, unsigned jobs) {
        py::gil_scoped_release release;
        return min_distance(c, enum_options(cap, jobs));
      }, py::arg("cap") = std::uint64_t{1} << 26, py::arg("jobs") = 1)
      .def(py::self == py::self)
      .def("__str__", [](const MTCode& c) { return format_code(c); });

  m.def("macwilliams", [](const std::vector<py::int_>& coeffs, std::uint32_t q, const py::int_& size) {
    WeightEnumerator w;
    w.n = static_cast<int>(coeffs.size()) - 1;
    for (const auto& c : coeffs) w.coeffs.push_back(from_pyint(c));
    return coeff_list(macwilliams(w, q, from_pyint(size)));
  }, py::arg("coeffs"), py::arg("q"), py::arg("code_size"));

  m.def("singleton_check", [](int n, int k, int d) {
    const SingletonReport r = singleton_check(n, k, d);
    return py::make_tuple(r.holds, r.is_mds);
  });

  m.def("verify_table", [](const std::string& text, std::uint64_t cap) {
    py::list out;
    for (const TableRow& row : parse_table(split_lines(text))) {
      const RowReport r = verify_table_row(row, enum_options(cap, 1));
      py::dict d;
      d["ell"] = r.ell;
      d["n"] = r.n;
      d["k"] = r.k;
      d["d"] = r.d;
      d["dimension"] = r.dimension;
      d["self_orthogonal"] = r.self_orthogonal;
      d["reversible"] = r.reversible;
      d["d_found"] = r.distance == DistanceStatus::Skipped ? py::object(py::none()) : py::int_(r.d_found);
      d["passed"] = r.passed();
      d["report"] = format_row_report(r);
      out.append(d);
    }
    return out;
  }, py::arg("text"), py::arg("cap") = std::uint64_t{1} << 26);

  m.def("search", [](const std::string& spec_text) {
    const SearchSpec spec = parse_search_spec(split_lines(spec_text));
    SearchResult r;
    {
      py::gil_scoped_release release;
      r = search_codes(spec);
    }
    py::list hits;
    for (const SearchHit& h : r.hits) hits.append(py::make_tuple(h.code, h.k, h.d));
    return py::make_tuple(hits, r.nodes, r.budget_exhausted);
  });
}
