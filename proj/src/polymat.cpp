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

#include "mtcodes/polymat.hpp"

#include <string>
#include <utility>

#include "mtcodes/error.hpp"

namespace mtcodes {

namespace {

std::string dims(std::size_t r, std::size_t c) { return std::to_string(r) + "x" + std::to_string(c); }

// row_dst -= q * row_src on columns [from, cols)
void sub_row_multiple(PolyMat& m, std::size_t dst, std::size_t src, const Poly& q, std::size_t from = 0) {
  for (std::size_t c = from; c < m.cols(); ++c) {
    if (m(src, c).is_zero()) continue;
    m(dst, c) -= q * m(src, c);
  }
}

void scale_row(PolyMat& m, std::size_t r, Felt s) {
  for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = m(r, c).scaled(s);
}

}  // namespace

PolyMat::PolyMat(FieldRef field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), e_(rows * cols, Poly(field_)) {}

PolyMat PolyMat::identity(FieldRef field, std::size_t n) {
  PolyMat m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Poly::constant(field, Felt{1});
  return m;
}

PolyMat PolyMat::diag(FieldRef field, const std::vector<Poly>& d) {
  PolyMat m(std::move(field), d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

PolyMat PolyMat::backward_identity(FieldRef field, std::size_t n) {
  PolyMat m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, n - 1 - i) = Poly::constant(field, Felt{1});
  return m;
}

PolyMat PolyMat::from_rows(FieldRef field, const std::vector<std::vector<Poly>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  PolyMat m(std::move(field), rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
  return m;
}

std::vector<Poly> PolyMat::row(std::size_t r) const {
  return std::vector<Poly>(e_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                           e_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

void PolyMat::set_row(std::size_t r, const std::vector<Poly>& v) {
  if (v.size() != cols_) fail(ErrorKind::ShapeMismatch, "row of length " + std::to_string(v.size()) + " in " + dims(rows_, cols_));
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = v[c];
}

void PolyMat::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

PolyMat PolyMat::transpose() const {
  PolyMat t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

PolyMat PolyMat::operator*(const PolyMat& rhs) const {
  if (cols_ != rhs.rows_) fail(ErrorKind::ShapeMismatch, dims(rows_, cols_) + " times " + dims(rhs.rows_, rhs.cols_));
  PolyMat out(field_, rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Poly& a = (*this)(r, k);
      if (a.is_zero()) continue;
      for (std::size_t c = 0; c < rhs.cols_; ++c) {
        if (!rhs(k, c).is_zero()) out(r, c) += a * rhs(k, c);
      }
    }
  }
  return out;
}

PolyMat PolyMat::operator+(const PolyMat& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) fail(ErrorKind::ShapeMismatch, dims(rows_, cols_) + " plus " + dims(rhs.rows_, rhs.cols_));
  PolyMat out = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] += rhs.e_[i];
  return out;
}

PolyMat PolyMat::operator-(const PolyMat& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) fail(ErrorKind::ShapeMismatch, dims(rows_, cols_) + " minus " + dims(rhs.rows_, rhs.cols_));
  PolyMat out = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] -= rhs.e_[i];
  return out;
}

bool PolyMat::operator==(const PolyMat& rhs) const {
  return rows_ == rhs.rows_ && cols_ == rhs.cols_ && e_ == rhs.e_;
}

PolyMat PolyMat::stacked(const PolyMat& below) const {
  if (cols_ != below.cols_) fail(ErrorKind::ShapeMismatch, "cannot stack " + dims(rows_, cols_) + " over " + dims(below.rows_, below.cols_));
  PolyMat out(field_, rows_ + below.rows_, cols_);
  std::copy(e_.begin(), e_.end(), out.e_.begin());
  std::copy(below.e_.begin(), below.e_.end(), out.e_.begin() + static_cast<std::ptrdiff_t>(e_.size()));
  return out;
}

PolyMat PolyMat::top_rows(std::size_t n) const {
  if (n > rows_) fail(ErrorKind::ShapeMismatch, "requested " + std::to_string(n) + " rows of " + dims(rows_, cols_));
  PolyMat out(field_, n, cols_);
  std::copy(e_.begin(), e_.begin() + static_cast<std::ptrdiff_t>(n * cols_), out.e_.begin());
  return out;
}

std::size_t PolyMat::nonzero_rows() const {
  std::size_t count = 0;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (!(*this)(r, c).is_zero()) {
        ++count;
        break;
      }
    }
  }
  return count;
}

bool PolyMat::is_upper_triangular() const {
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < r && c < cols_; ++c)
      if (!(*this)(r, c).is_zero()) return false;
  return true;
}

Poly det(const PolyMat& a) {
  if (a.rows() != a.cols()) fail(ErrorKind::ShapeMismatch, "determinant of " + dims(a.rows(), a.cols()));
  const std::size_t n = a.rows();
  const FieldRef& f = a.field();
  if (n == 0) return Poly::constant(f, Felt{1});
  PolyMat m = a;
  bool negate = false;
  Poly prev = Poly::constant(f, Felt{1});
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t i = k + 1;
      while (i < n && m(i, k).is_zero()) ++i;
      if (i == n) return Poly(f);
      m.swap_rows(i, k);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = exact_div(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
      }
      m(i, k) = Poly(f);
    }
    prev = m(k, k);
  }
  return negate ? -m(n - 1, n - 1) : m(n - 1, n - 1);
}

bool is_unimodular(const PolyMat& a) {
  if (a.rows() != a.cols()) return false;
  const Poly d = det(a);
  return !d.is_zero() && d.degree() == 0;
}

HnfResult hnf(const PolyMat& a) {
  const FieldRef& f = a.field();
  PolyMat h = a;
  PolyMat u = PolyMat::identity(f, a.rows());
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    bool have_pivot = false;
    for (;;) {
      std::size_t best = a.rows();
      for (std::size_t i = r; i < a.rows(); ++i) {
        if (h(i, c).is_zero()) continue;
        if (best == a.rows() || h(i, c).degree() < h(best, c).degree()) best = i;
      }
      if (best == a.rows()) break;
      have_pivot = true;
      h.swap_rows(best, r);
      u.swap_rows(best, r);
      bool cleared = true;
      for (std::size_t i = r + 1; i < a.rows(); ++i) {
        if (h(i, c).is_zero()) continue;
        const Poly q = divmod(h(i, c), h(r, c)).quot;
        sub_row_multiple(h, i, r, q, c);
        sub_row_multiple(u, i, r, q);
        if (!h(i, c).is_zero()) cleared = false;
      }
      if (cleared) break;
    }
    if (!have_pivot) continue;
    const Felt s = f->inv(h(r, c).lead());
    scale_row(h, r, s);
    scale_row(u, r, s);
    for (std::size_t i = 0; i < r; ++i) {
      if (h(i, c).is_zero()) continue;
      const Poly q = divmod(h(i, c), h(r, c)).quot;
      if (q.is_zero()) continue;
      sub_row_multiple(h, i, r, q, c);
      sub_row_multiple(u, i, r, q);
    }
    pivots.push_back(c);
    ++r;
  }
  return HnfResult{std::move(h), std::move(u), r, std::move(pivots)};
}

bool is_hnf(const PolyMat& a) {
  std::size_t last_pivot = 0;
  bool seen_zero_row = false;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    std::size_t c = 0;
    while (c < a.cols() && a(r, c).is_zero()) ++c;
    if (c == a.cols()) {
      seen_zero_row = true;
      continue;
    }
    if (seen_zero_row) return false;
    if (r > 0 && c <= last_pivot) return false;
    if (!a(r, c).is_monic()) return false;
    for (std::size_t i = 0; i < r; ++i) {
      if (!a(i, c).is_zero() && a(i, c).degree() >= a(r, c).degree()) return false;
    }
    last_pivot = c;
  }
  return true;
}

Membership member(const std::vector<Poly>& v, const PolyMat& basis_hnf) {
  if (v.size() != basis_hnf.cols()) {
    fail(ErrorKind::ShapeMismatch, "vector of length " + std::to_string(v.size()) + " against " +
                                       dims(basis_hnf.rows(), basis_hnf.cols()));
  }
  Membership out;
  out.remainder = v;
  for (std::size_t r = 0; r < basis_hnf.rows(); ++r) {
    std::size_t c = 0;
    while (c < basis_hnf.cols() && basis_hnf(r, c).is_zero()) ++c;
    if (c == basis_hnf.cols()) break;
    Poly q = divmod(out.remainder[c], basis_hnf(r, c)).quot;
    if (!q.is_zero()) {
      for (std::size_t j = c; j < basis_hnf.cols(); ++j) {
        if (!basis_hnf(r, j).is_zero()) out.remainder[j] -= q * basis_hnf(r, j);
      }
    }
    out.coeffs.push_back(std::move(q));
  }
  out.member = true;
  for (const Poly& p : out.remainder) {
    if (!p.is_zero()) {
      out.member = false;
      break;
    }
  }
  return out;
}

std::optional<PolyMat> solve_left(const PolyMat& b, const PolyMat& g) {
  if (b.cols() != g.cols()) fail(ErrorKind::ShapeMismatch, "solve_left " + dims(b.rows(), b.cols()) + " by " + dims(g.rows(), g.cols()));
  const HnfResult hr = hnf(g);
  const PolyMat basis = hr.h.top_rows(hr.rank);
  const PolyMat u_top = hr.u.top_rows(hr.rank);
  PolyMat out(g.field(), b.rows(), g.rows());
  for (std::size_t r = 0; r < b.rows(); ++r) {
    const Membership mres = member(b.row(r), basis);
    if (!mres.member) return std::nullopt;
    PolyMat c(g.field(), 1, hr.rank);
    c.set_row(0, mres.coeffs);
    out.set_row(r, (c * u_top).row(0));
  }
  return out;
}

}  // namespace mtcodes
