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

#include "mtcodes/mtcode.hpp"

#include <numeric>
#include <string>
#include <utility>

#include "mtcodes/error.hpp"

namespace mtcodes {

MTShape MTShape::make(FieldRef field, std::vector<int> ms, std::vector<Felt> lambdas) {
  if (!field) fail(ErrorKind::InvalidArgument, "shape without a field");
  if (ms.empty()) fail(ErrorKind::InvalidArgument, "shape needs at least one block");
  if (ms.size() != lambdas.size()) {
    fail(ErrorKind::ShapeMismatch,
         std::to_string(ms.size()) + " block lengths but " + std::to_string(lambdas.size()) + " constants");
  }
  for (int m : ms) {
    if (m < 1) fail(ErrorKind::InvalidArgument, "block length " + std::to_string(m) + " is not positive");
  }
  for (Felt l : lambdas) {
    if (!field->contains(l) || l.code == 0) {
      fail(ErrorKind::InvalidArgument, "shift constant " + std::to_string(l.code) + " is not a nonzero field element");
    }
  }
  return MTShape{std::move(field), std::move(ms), std::move(lambdas)};
}

MTShape MTShape::uniform(FieldRef field, std::size_t ell, int m, Felt lambda) {
  return make(std::move(field), std::vector<int>(ell, m), std::vector<Felt>(ell, lambda));
}

int MTShape::n() const { return std::accumulate(ms.begin(), ms.end(), 0); }

int MTShape::offset(std::size_t j) const {
  return std::accumulate(ms.begin(), ms.begin() + static_cast<std::ptrdiff_t>(j), 0);
}

bool MTShape::equal_blocks() const {
  for (int m : ms)
    if (m != ms.front()) return false;
  return true;
}

bool MTShape::is_qc() const { return equal_blocks() && is_gqc(); }

bool MTShape::is_qt() const {
  if (!equal_blocks()) return false;
  for (Felt l : lambdas)
    if (l != lambdas.front()) return false;
  return true;
}

bool MTShape::is_gqc() const {
  for (Felt l : lambdas)
    if (l != Felt{1}) return false;
  return true;
}

MTShape MTShape::dual() const {
  std::vector<Felt> inv;
  for (Felt l : lambdas) inv.push_back(field->inv(l));
  return MTShape{field, ms, std::move(inv)};
}

Poly MTShape::modulus(std::size_t j) const { return Poly::binomial(field, ms[j], lambdas[j]); }

PolyMat MTShape::D() const {
  std::vector<Poly> d;
  for (std::size_t j = 0; j < ell(); ++j) d.push_back(modulus(j));
  return PolyMat::diag(field, d);
}

bool MTShape::operator==(const MTShape& rhs) const {
  return field->same_as(*rhs.field) && ms == rhs.ms && lambdas == rhs.lambdas;
}

MTCode::MTCode(MTShape shape, PolyMat gpm, PolyMat amat)
    : shape_(std::move(shape)), gpm_(std::move(gpm)), amat_(std::move(amat)) {}

MTCode MTCode::from_generators(const MTShape& shape, const PolyMat& gens) {
  if (gens.cols() != shape.ell()) {
    fail(ErrorKind::ShapeMismatch,
         "generators have " + std::to_string(gens.cols()) + " columns for " + std::to_string(shape.ell()) + " blocks");
  }
  const HnfResult r = hnf(gens.stacked(shape.D()));
  PolyMat g = r.h.top_rows(shape.ell());
  PolyMat a = identical_matrix(g, shape);
  return MTCode(shape, std::move(g), std::move(a));
}

MTCode MTCode::from_reduced(const MTShape& shape, const PolyMat& gpm) {
  if (gpm.rows() != shape.ell() || gpm.cols() != shape.ell()) {
    fail(ErrorKind::ShapeMismatch, "reduced GPM must be " + std::to_string(shape.ell()) + " x " + std::to_string(shape.ell()));
  }
  if (!is_hnf(gpm) || !gpm.is_upper_triangular()) {
    fail(ErrorKind::InvalidArgument, "matrix is not in Hermite normal form");
  }
  for (std::size_t j = 0; j < shape.ell(); ++j) {
    if (gpm(j, j).is_zero()) fail(ErrorKind::InvalidArgument, "zero diagonal entry in row " + std::to_string(j + 1));
  }
  PolyMat a = identical_matrix(gpm, shape);
  return MTCode(shape, gpm, std::move(a));
}

FMatrix shift_matrix(const MTShape& shape) {
  const FieldRef& f = shape.field;
  const auto n = static_cast<std::size_t>(shape.n());
  FMatrix m(f, n, n);
  for (std::size_t j = 0; j < shape.ell(); ++j) {
    const auto off = static_cast<std::size_t>(shape.offset(j));
    const auto mj = static_cast<std::size_t>(shape.ms[j]);
    m(off, off + mj - 1) = shape.lambdas[j];
    for (std::size_t i = 1; i < mj; ++i) m(off + i, off + i - 1) = f->one();
  }
  return m;
}

bool is_multi_twisted(const FMatrix& g, const MTShape& shape) {
  if (g.cols() != static_cast<std::size_t>(shape.n())) {
    fail(ErrorKind::ShapeMismatch, "generator matrix has " + std::to_string(g.cols()) + " columns, shape length " +
                                       std::to_string(shape.n()));
  }
  const FMatrix shifted = g * shift_matrix(shape).transpose();
  return g.stacked(shifted).rank() == g.rank();
}

std::vector<Poly> phi(std::span<const Felt> v, const MTShape& shape) {
  if (v.size() != static_cast<std::size_t>(shape.n())) {
    fail(ErrorKind::ShapeMismatch, "vector of length " + std::to_string(v.size()) + " for shape length " +
                                       std::to_string(shape.n()));
  }
  std::vector<Poly> out;
  for (std::size_t j = 0; j < shape.ell(); ++j) {
    const auto off = static_cast<std::size_t>(shape.offset(j));
    out.emplace_back(shape.field, std::vector<Felt>(v.begin() + static_cast<std::ptrdiff_t>(off),
                                                    v.begin() + static_cast<std::ptrdiff_t>(off + shape.ms[j])));
  }
  return out;
}

std::vector<Felt> phi_inv(const std::vector<Poly>& pv, const MTShape& shape) {
  if (pv.size() != shape.ell()) {
    fail(ErrorKind::ShapeMismatch, std::to_string(pv.size()) + " polynomials for " + std::to_string(shape.ell()) + " blocks");
  }
  std::vector<Felt> out;
  out.reserve(static_cast<std::size_t>(shape.n()));
  for (std::size_t j = 0; j < shape.ell(); ++j) {
    if (pv[j].degree() >= shape.ms[j]) {
      fail(ErrorKind::BlockOverflow, "block " + std::to_string(j + 1) + " has degree " + std::to_string(pv[j].degree()) +
                                         " >= " + std::to_string(shape.ms[j]));
    }
    for (int i = 0; i < shape.ms[j]; ++i) out.push_back(pv[j].coeff(i));
  }
  return out;
}

std::vector<Poly> reduce_blocks(const std::vector<Poly>& pv, const MTShape& shape) {
  if (pv.size() != shape.ell()) {
    fail(ErrorKind::ShapeMismatch, std::to_string(pv.size()) + " polynomials for " + std::to_string(shape.ell()) + " blocks");
  }
  std::vector<Poly> out;
  for (std::size_t j = 0; j < shape.ell(); ++j) {
    out.push_back(pv[j].degree() < shape.ms[j] ? pv[j] : reduce_mod_binomial(pv[j], shape.ms[j], shape.lambdas[j]));
  }
  return out;
}

MTCode from_generator_matrix(const FMatrix& g, const MTShape& shape) {
  if (!is_multi_twisted(g, shape)) fail(ErrorKind::NotInvariant, "row space is not invariant under the shift");
  PolyMat gens(shape.field, g.rows(), shape.ell());
  for (std::size_t r = 0; r < g.rows(); ++r) gens.set_row(r, phi(g.row(r), shape));
  return MTCode::from_generators(shape, gens);
}

PolyMat identical_matrix(const PolyMat& gpm, const MTShape& shape) {
  const std::size_t ell = shape.ell();
  if (gpm.rows() != ell || gpm.cols() != ell) fail(ErrorKind::ShapeMismatch, "GPM must be square of size l");
  PolyMat a(shape.field, ell, ell);
  for (std::size_t i = 0; i < ell; ++i) {
    a(i, i) = exact_div(shape.modulus(i), gpm(i, i));
    for (std::size_t j = i + 1; j < ell; ++j) {
      Poly s(shape.field);
      for (std::size_t t = i; t < j; ++t) {
        if (!a(i, t).is_zero() && !gpm(t, j).is_zero()) s += a(i, t) * gpm(t, j);
      }
      a(i, j) = exact_div(-s, gpm(j, j));
    }
  }
  return a;
}

int dimension(const MTCode& c) {
  int k = 0;
  for (std::size_t j = 0; j < c.shape().ell(); ++j) k += c.shape().ms[j] - c.gpm()(j, j).degree();
  return k;
}

FMatrix expand(const MTCode& c) {
  const MTShape& shape = c.shape();
  FMatrix out(shape.field, 0, static_cast<std::size_t>(shape.n()));
  for (std::size_t i = 0; i < shape.ell(); ++i) {
    const std::vector<Poly> row = c.gpm().row(i);
    const int count = shape.ms[i] - c.gpm()(i, i).degree();
    for (int s = 0; s < count; ++s) {
      std::vector<Poly> shifted;
      for (const Poly& p : row) shifted.push_back(p.shifted(s));
      out.append_row(phi_inv(reduce_blocks(shifted, shape), shape));
    }
  }
  if (out.rank() != out.rows()) {
    fail(ErrorKind::RankDefect, "expanded rows have rank " + std::to_string(out.rank()) + " < " + std::to_string(out.rows()));
  }
  return out;
}

DualTrace dual_trace(const MTCode& c) {
  const MTShape& shape = c.shape();
  const std::size_t ell = shape.ell();
  const FieldRef& f = shape.field;
  DualTrace t{LauMat{ell, ell, std::vector<LauPoly>(ell * ell, LauPoly(f))},
              LauMat{ell, ell, std::vector<LauPoly>(ell * ell, LauPoly(f))}, PolyMat(f, ell, ell), PolyMat(f, ell, ell),
              shape.dual()};
  for (std::size_t i = 0; i < ell; ++i) {
    for (std::size_t j = 0; j < ell; ++j) {
      t.a_inv.at(i, j) = substitute_inverse(c.amat()(i, j));
      t.a_star.at(i, j) = lau_shift(t.a_inv.at(i, j), shape.ms[i] - c.gpm()(j, j).degree());
      if (i < j) {
        t.a_star_star(i, j) = lau_reduce(t.a_star.at(i, j), shape.ms[i], shape.lambdas[i]);
      } else {
        t.a_star_star(i, j) = t.a_star.at(i, j).to_poly();
      }
    }
  }
  t.h = t.a_star_star.transpose();
  return t;
}

PolyMat dual_gpm(const MTCode& c) { return dual_trace(c).h; }

MTCode dual(const MTCode& c) {
  DualTrace t = dual_trace(c);
  return MTCode::from_generators(t.dual_shape, t.h);
}

namespace {

// Row i of A(1/x) diag[x^{m_i - d_j}] with each x^{-mu} replaced by
// lambda_i x^{m_i - mu}, stored as column i of the result.
PolyMat closed_form_dual(const MTCode& c, const std::vector<Felt>& mus) {
  const MTShape& shape = c.shape();
  const std::size_t ell = shape.ell();
  PolyMat h(shape.field, ell, ell);
  for (std::size_t i = 0; i < ell; ++i) {
    for (std::size_t j = 0; j < ell; ++j) {
      const LauPoly e = lau_shift(substitute_inverse(c.amat()(i, j)), shape.ms[i] - c.gpm()(j, j).degree());
      h(j, i) = lau_reduce(e, shape.ms[i], mus[i]);
    }
  }
  return h;
}

}  // namespace

PolyMat dual_gpm_qc(const MTCode& c) {
  if (!c.shape().is_qc()) fail(ErrorKind::WrongCodeClass, "shape is not quasi-cyclic");
  return closed_form_dual(c, c.shape().lambdas);
}

PolyMat dual_gpm_qt(const MTCode& c) {
  if (!c.shape().is_qt()) fail(ErrorKind::WrongCodeClass, "shape is not quasi-twisted");
  return closed_form_dual(c, c.shape().lambdas);
}

PolyMat dual_gpm_gqc(const MTCode& c) {
  if (!c.shape().is_gqc()) fail(ErrorKind::WrongCodeClass, "shape is not generalized quasi-cyclic");
  return closed_form_dual(c, c.shape().lambdas);
}

bool is_self_orthogonal(const MTCode& c) {
  const MTCode d = dual(c);
  if (c.shape() == d.shape()) {
    for (std::size_t i = 0; i < c.shape().ell(); ++i) {
      if (!member(c.gpm().row(i), d.gpm()).member) return false;
    }
    return true;
  }
  const FMatrix basis = expand(c);
  for (std::size_t r = 0; r < basis.rows(); ++r) {
    if (!member(phi(basis.row(r), c.shape()), d.gpm()).member) return false;
  }
  return true;
}

Verdict is_self_dual(const MTCode& c) {
  const MTShape ds = c.shape().dual();
  if (!(c.shape() == ds)) {
    return {false, "shift constants differ from their inverses; the code and its dual have different shapes"};
  }
  if (2 * dimension(c) != c.shape().n()) {
    return {false, "dimension " + std::to_string(dimension(c)) + " is not half of length " + std::to_string(c.shape().n())};
  }
  const MTCode d = dual(c);
  if (d.gpm() == c.gpm()) return {true, ""};
  return {false, "reduced GPMs of the code and its dual differ"};
}

MTCode constacyclic(const Poly& g, int m, Felt lambda) {
  const FieldRef& f = g.field();
  if (g.is_zero() || !g.is_monic()) fail(ErrorKind::InvalidArgument, "generator polynomial must be monic");
  const MTShape shape = MTShape::make(f, {m}, {lambda});
  if (!divides(g, shape.modulus(0))) fail(ErrorKind::NotADivisor, "generator does not divide x^m - lambda");
  PolyMat gpm(f, 1, 1);
  gpm(0, 0) = g;
  return MTCode::from_reduced(shape, gpm);
}

}  // namespace mtcodes
