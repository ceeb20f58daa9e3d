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

#include "mtcodes/poly.hpp"

#include <algorithm>
#include <string>

#include "mtcodes/error.hpp"

namespace mtcodes {

Poly::Poly(FieldRef field) : field_(std::move(field)) {}

Poly::Poly(FieldRef field, std::vector<Felt> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
  trim();
}

void Poly::trim() {
  while (!c_.empty() && c_.back().code == 0) c_.pop_back();
}

Poly Poly::constant(FieldRef field, Felt c) { return Poly(std::move(field), {c}); }

Poly Poly::monomial(FieldRef field, Felt c, int exponent) {
  if (c.code == 0) return Poly(std::move(field));
  std::vector<Felt> v(static_cast<std::size_t>(exponent) + 1);
  v.back() = c;
  return Poly(std::move(field), std::move(v));
}

Poly Poly::binomial(FieldRef field, int m, Felt lambda) {
  const Field& f = *field;
  std::vector<Felt> v(static_cast<std::size_t>(m) + 1);
  v[0] = f.neg(lambda);
  v[m] = f.add(v[m], f.one());
  return Poly(std::move(field), std::move(v));
}

Felt Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Felt{0};
  return c_[i];
}

Poly Poly::operator+(const Poly& rhs) const {
  const Field& F = f();
  std::vector<Felt> out(std::max(c_.size(), rhs.c_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    const Felt a = i < c_.size() ? c_[i] : Felt{0};
    const Felt b = i < rhs.c_.size() ? rhs.c_[i] : Felt{0};
    out[i] = F.add(a, b);
  }
  return Poly(field_, std::move(out));
}

Poly Poly::operator-(const Poly& rhs) const {
  const Field& F = f();
  std::vector<Felt> out(std::max(c_.size(), rhs.c_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    const Felt a = i < c_.size() ? c_[i] : Felt{0};
    const Felt b = i < rhs.c_.size() ? rhs.c_[i] : Felt{0};
    out[i] = F.sub(a, b);
  }
  return Poly(field_, std::move(out));
}

Poly Poly::operator-() const {
  std::vector<Felt> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] = f().neg(c_[i]);
  return Poly(field_, std::move(out));
}

Poly Poly::operator*(const Poly& rhs) const {
  if (c_.empty() || rhs.c_.empty()) return Poly(field_);
  const Field& F = f();
  std::vector<Felt> out(c_.size() + rhs.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].code == 0) continue;
    for (std::size_t j = 0; j < rhs.c_.size(); ++j) {
      out[i + j] = F.add(out[i + j], F.mul(c_[i], rhs.c_[j]));
    }
  }
  return Poly(field_, std::move(out));
}

Poly Poly::scaled(Felt s) const {
  std::vector<Felt> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] = f().mul(c_[i], s);
  return Poly(field_, std::move(out));
}

Poly Poly::shifted(int e) const {
  if (c_.empty()) return *this;
  std::vector<Felt> out(static_cast<std::size_t>(e), Felt{0});
  out.insert(out.end(), c_.begin(), c_.end());
  return Poly(field_, std::move(out));
}

Poly Poly::monic() const {
  if (c_.empty()) return *this;
  return scaled(f().inv(lead()));
}

DivMod divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) fail(ErrorKind::DivisionByZeroPoly, "division by the zero polynomial");
  const Field& F = a.f();
  std::vector<Felt> rem(a.coeffs().begin(), a.coeffs().end());
  const int db = b.degree();
  if (a.degree() < db) return {Poly(a.field()), a};
  std::vector<Felt> quot(static_cast<std::size_t>(a.degree() - db) + 1);
  const Felt inv_lead = F.inv(b.lead());
  const auto bc = b.coeffs();
  for (int i = a.degree(); i >= db; --i) {
    const Felt c = rem[i];
    if (c.code == 0) continue;
    const Felt factor = F.mul(c, inv_lead);
    quot[i - db] = factor;
    for (int j = 0; j <= db; ++j) {
      rem[i - db + j] = F.sub(rem[i - db + j], F.mul(factor, bc[j]));
    }
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Poly(a.field(), std::move(quot)), Poly(a.field(), std::move(rem))};
}

bool divides(const Poly& divisor, const Poly& a) { return divmod(a, divisor).rem.is_zero(); }

Poly exact_div(const Poly& a, const Poly& b) {
  DivMod qr = divmod(a, b);
  if (!qr.rem.is_zero()) fail(ErrorKind::InexactDivision, "polynomial division leaves a remainder");
  return qr.quot;
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = divmod(x, y).rem;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

ExtGcd ext_gcd(const Poly& a, const Poly& b) {
  const FieldRef& F = a.field();
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::constant(F, Felt{1}), s1(F);
  Poly t0(F), t1 = Poly::constant(F, Felt{1});
  while (!r1.is_zero()) {
    DivMod qr = divmod(r0, r1);
    Poly s2 = s0 - qr.quot * s1;
    Poly t2 = t0 - qr.quot * t1;
    r0 = std::move(r1);
    r1 = std::move(qr.rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const Felt inv = a.f().inv(r0.lead());
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

Poly reciprocal(const Poly& g) {
  if (g.is_zero()) fail(ErrorKind::ReciprocalOfZero, "reciprocal of the zero polynomial");
  std::vector<Felt> v(g.coeffs().rbegin(), g.coeffs().rend());
  return Poly(g.field(), std::move(v));
}

bool poly_less(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const auto ac = a.coeffs(), bc = b.coeffs();
  return std::lexicographical_compare(ac.begin(), ac.end(), bc.begin(), bc.end());
}

std::vector<std::pair<Poly, int>> factor(const Poly& a, int degree_cap) {
  if (a.is_zero()) fail(ErrorKind::InvalidArgument, "factorization of the zero polynomial");
  if (a.degree() > degree_cap) {
    fail(ErrorKind::DegreeCapExceeded,
         "degree " + std::to_string(a.degree()) + " exceeds factorization cap " + std::to_string(degree_cap));
  }
  const FieldRef& field = a.field();
  const std::uint32_t q = a.f().q();
  Poly rem = a.monic();
  std::vector<std::pair<Poly, int>> out;
  for (int d = 1; 2 * d <= rem.degree(); ++d) {
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= q;
    for (std::uint64_t idx = 0; idx < count && 2 * d <= rem.degree(); ++idx) {
      std::vector<Felt> c(static_cast<std::size_t>(d) + 1);
      std::uint64_t v = idx;
      for (int i = 0; i < d; ++i) {
        c[i] = Felt{static_cast<std::uint32_t>(v % q)};
        v /= q;
      }
      c[d] = Felt{1};
      Poly trial(field, std::move(c));
      int mult = 0;
      for (;;) {
        DivMod qr = divmod(rem, trial);
        if (!qr.rem.is_zero()) break;
        rem = std::move(qr.quot);
        ++mult;
      }
      if (mult > 0) out.emplace_back(std::move(trial), mult);
    }
  }
  if (rem.degree() >= 1) {
    auto it = std::find_if(out.begin(), out.end(), [&](const auto& e) { return e.first == rem; });
    if (it != out.end()) {
      ++it->second;
    } else {
      out.emplace_back(rem, 1);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return poly_less(x.first, y.first); });
  return out;
}

std::vector<Poly> monic_divisors(const Poly& a, int degree_cap) {
  const auto factors = factor(a, degree_cap);
  std::vector<Poly> out{Poly::constant(a.field(), Felt{1})};
  for (const auto& [p, mult] : factors) {
    std::vector<Poly> next;
    for (const Poly& d : out) {
      Poly acc = d;
      next.push_back(acc);
      for (int e = 1; e <= mult; ++e) {
        acc = acc * p;
        next.push_back(acc);
      }
    }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end(), poly_less);
  return out;
}

LauPoly::LauPoly(FieldRef field) : field_(std::move(field)) {}

LauPoly::LauPoly(FieldRef field, int lo, std::vector<Felt> coeffs)
    : field_(std::move(field)), lo_(lo), c_(std::move(coeffs)) {
  trim();
}

void LauPoly::trim() {
  while (!c_.empty() && c_.back().code == 0) c_.pop_back();
  std::size_t skip = 0;
  while (skip < c_.size() && c_[skip].code == 0) ++skip;
  if (skip > 0) {
    c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(skip));
    lo_ += static_cast<int>(skip);
  }
  if (c_.empty()) lo_ = 0;
}

LauPoly LauPoly::from_poly(const Poly& p) {
  return LauPoly(p.field(), 0, std::vector<Felt>(p.coeffs().begin(), p.coeffs().end()));
}

Felt LauPoly::coeff(int e) const {
  if (c_.empty() || e < lo_ || e > hi()) return Felt{0};
  return c_[e - lo_];
}

LauPoly LauPoly::operator+(const LauPoly& rhs) const {
  if (is_zero()) return rhs;
  if (rhs.is_zero()) return *this;
  const int lo = std::min(lo_, rhs.lo_);
  const int hi = std::max(this->hi(), rhs.hi());
  std::vector<Felt> out(static_cast<std::size_t>(hi - lo + 1));
  for (int e = lo; e <= hi; ++e) out[e - lo] = field_->add(coeff(e), rhs.coeff(e));
  return LauPoly(field_, lo, std::move(out));
}

LauPoly LauPoly::operator*(const LauPoly& rhs) const {
  if (is_zero() || rhs.is_zero()) return LauPoly(field_);
  const Field& F = *field_;
  std::vector<Felt> out(c_.size() + rhs.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    for (std::size_t j = 0; j < rhs.c_.size(); ++j) out[i + j] = F.add(out[i + j], F.mul(c_[i], rhs.c_[j]));
  }
  return LauPoly(field_, lo_ + rhs.lo_, std::move(out));
}

Poly LauPoly::to_poly() const {
  if (!is_poly()) {
    fail(ErrorKind::NegativeExponentRemains, "exponent " + std::to_string(lo_) + " remains negative");
  }
  std::vector<Felt> v(static_cast<std::size_t>(lo_), Felt{0});
  v.insert(v.end(), c_.begin(), c_.end());
  return Poly(field_, std::move(v));
}

LauPoly substitute_inverse(const Poly& a) {
  if (a.is_zero()) return LauPoly(a.field());
  std::vector<Felt> v(a.coeffs().rbegin(), a.coeffs().rend());
  return LauPoly(a.field(), -a.degree(), std::move(v));
}

LauPoly lau_shift(const LauPoly& a, int e) {
  if (a.is_zero()) return a;
  return LauPoly(a.field(), a.lo() + e, std::vector<Felt>(a.coeffs().begin(), a.coeffs().end()));
}

namespace {

// One pass of x^{-k} -> mu x^{m-k} over every negative exponent.
LauPoly replace_negative(const LauPoly& a, int m, Felt mu) {
  const Field& F = *a.field();
  LauPoly acc(a.field());
  for (int e = a.lo(); e <= a.hi() && !a.is_zero(); ++e) {
    const Felt c = a.coeff(e);
    if (c.code == 0) continue;
    if (e >= 0) {
      acc = acc + LauPoly(a.field(), e, {c});
    } else {
      acc = acc + LauPoly(a.field(), m + e, {F.mul(c, mu)});
    }
  }
  return acc;
}

}  // namespace

Poly lau_reduce(const LauPoly& a, int m, Felt mu) {
  if (m < 1) fail(ErrorKind::InvalidArgument, "reduction length must be positive");
  LauPoly cur = a;
  while (!cur.is_poly()) cur = replace_negative(cur, m, mu);
  return cur.to_poly();
}

Poly lau_reduce_once(const LauPoly& a, int m, Felt mu) {
  if (m < 1) fail(ErrorKind::InvalidArgument, "reduction length must be positive");
  return replace_negative(a, m, mu).to_poly();
}

Poly reduce_mod_binomial(const Poly& a, int m, Felt lambda) {
  return lau_mod_binomial(LauPoly::from_poly(a), m, lambda);
}

Poly lau_mod_binomial(const LauPoly& a, int m, Felt lambda) {
  if (m < 1) fail(ErrorKind::InvalidArgument, "reduction length must be positive");
  const Field& F = *a.field();
  std::vector<Felt> out(static_cast<std::size_t>(m));
  for (int e = a.lo(); !a.is_zero() && e <= a.hi(); ++e) {
    const Felt c = a.coeff(e);
    if (c.code == 0) continue;
    int k = e / m;
    int r = e % m;
    if (r < 0) {
      r += m;
      --k;
    }
    out[r] = F.add(out[r], F.mul(c, F.pow(lambda, k)));
  }
  return Poly(a.field(), std::move(out));
}

}  // namespace mtcodes
