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

#include "mtcodes/gf.hpp"

#include <sstream>

#include "mtcodes/error.hpp"

namespace mtcodes {

namespace {

using Digits = std::vector<std::uint32_t>;

// Remainder of a by the monic polynomial m over F_p (ascending coefficients).
Digits fp_rem(Digits a, const Digits& m, std::uint32_t p) {
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const std::uint32_t c = a.back();
    if (c != 0) {
      const std::size_t shift = a.size() - 1 - dm;
      for (std::size_t i = 0; i <= dm; ++i) {
        a[shift + i] = (a[shift + i] + (p - (c * m[i]) % p)) % p;
      }
    }
    a.pop_back();
  }
  return a;
}

bool fp_divides(const Digits& divisor, const Digits& a, std::uint32_t p) {
  for (std::uint32_t c : fp_rem(a, divisor, p)) {
    if (c != 0) return false;
  }
  return true;
}

bool fp_irreducible(const Digits& f, std::uint32_t p) {
  const std::size_t d = f.size() - 1;
  for (std::size_t k = 1; 2 * k <= d; ++k) {
    // all monic polynomials of degree k
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < k; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Digits g(k + 1, 0);
      std::uint64_t v = idx;
      for (std::size_t i = 0; i < k; ++i) {
        g[i] = static_cast<std::uint32_t>(v % p);
        v /= p;
      }
      g[k] = 1;
      if (fp_divides(g, f, p)) return false;
    }
  }
  return true;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t k = 2; k * k <= n; ++k) {
    if (n % k == 0) return false;
  }
  return true;
}

FieldRef Field::make(std::uint32_t p, std::uint32_t d, std::vector<std::uint32_t> modulus,
                     std::uint32_t cap) {
  if (!is_prime(p)) fail(ErrorKind::InvalidField, "characteristic " + std::to_string(p) + " is not prime");
  if (d == 0) fail(ErrorKind::InvalidField, "extension degree must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < d; ++i) {
    q *= p;
    if (q > cap) fail(ErrorKind::InvalidField, "field order exceeds cap " + std::to_string(cap));
  }
  if (d == 1) {
    modulus.clear();
  } else {
    if (modulus.size() != d + 1) {
      fail(ErrorKind::InvalidField, "modulus must have " + std::to_string(d + 1) + " coefficients");
    }
    for (std::uint32_t c : modulus) {
      if (c >= p) fail(ErrorKind::InvalidField, "modulus coefficient out of range");
    }
    if (modulus.back() != 1) fail(ErrorKind::InvalidField, "modulus is not monic");
    if (!fp_irreducible(modulus, p)) fail(ErrorKind::InvalidField, "modulus is reducible over F_p");
  }
  return FieldRef(new Field(p, d, std::move(modulus)));
}

Field::Field(std::uint32_t p, std::uint32_t d, std::vector<std::uint32_t> modulus)
    : p_(p), d_(d), q_(1), modulus_(std::move(modulus)) {
  for (std::uint32_t i = 0; i < d_; ++i) q_ *= p_;
  if (q_ <= kTableLimit) build_tables();
}

void Field::build_tables() {
  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  neg_.resize(q_);
  inv_.assign(q_, 0);
  for (std::uint32_t a = 0; a < q_; ++a) {
    neg_[a] = static_cast<std::uint16_t>(add_slow(Felt{0}, Felt{a}, -1).code);
    for (std::uint32_t b = 0; b < q_; ++b) {
      add_[a * q_ + b] = static_cast<std::uint16_t>(add_slow(Felt{a}, Felt{b}, 1).code);
      const std::uint32_t ab = mul_slow(Felt{a}, Felt{b}).code;
      mul_[a * q_ + b] = static_cast<std::uint16_t>(ab);
      if (ab == 1) inv_[a] = static_cast<std::uint16_t>(b);
    }
  }
  tabled_ = true;
}

Felt Field::from_int(long long v) const {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return Felt{static_cast<std::uint32_t>(r)};
}

Felt Field::add_slow(Felt a, Felt b, int sign) const {
  std::uint32_t x = a.code, y = b.code, out = 0, place = 1;
  for (std::uint32_t i = 0; i < d_; ++i) {
    const std::uint32_t dx = x % p_, dy = y % p_;
    const std::uint32_t digit = sign > 0 ? (dx + dy) % p_ : (dx + p_ - dy) % p_;
    out += digit * place;
    place *= p_;
    x /= p_;
    y /= p_;
  }
  return Felt{out};
}

Felt Field::mul_slow(Felt a, Felt b) const {
  if (d_ == 1) {
    return Felt{static_cast<std::uint32_t>((static_cast<std::uint64_t>(a.code) * b.code) % p_)};
  }
  Digits x(d_), y(d_);
  std::uint32_t u = a.code, v = b.code;
  for (std::uint32_t i = 0; i < d_; ++i) {
    x[i] = u % p_;
    y[i] = v % p_;
    u /= p_;
    v /= p_;
  }
  Digits prod(2 * d_ - 1, 0);
  for (std::uint32_t i = 0; i < d_; ++i) {
    for (std::uint32_t j = 0; j < d_; ++j) {
      prod[i + j] = (prod[i + j] + x[i] * y[j]) % p_;
    }
  }
  const Digits r = fp_rem(std::move(prod), modulus_, p_);
  std::uint32_t out = 0, place = 1;
  for (std::uint32_t i = 0; i < r.size(); ++i) {
    out += r[i] * place;
    place *= p_;
  }
  return Felt{out};
}

Felt Field::add(Felt a, Felt b) const {
  if (p_ == 2) return Felt{a.code ^ b.code};
  if (tabled_) return Felt{add_[a.code * q_ + b.code]};
  return add_slow(a, b, 1);
}

Felt Field::sub(Felt a, Felt b) const {
  if (p_ == 2) return Felt{a.code ^ b.code};
  if (tabled_) return Felt{add_[a.code * q_ + neg_[b.code]]};
  return add_slow(a, b, -1);
}

Felt Field::neg(Felt a) const {
  if (p_ == 2) return a;
  if (tabled_) return Felt{neg_[a.code]};
  return add_slow(Felt{0}, a, -1);
}

Felt Field::mul(Felt a, Felt b) const {
  if (tabled_) return Felt{mul_[a.code * q_ + b.code]};
  return mul_slow(a, b);
}

Felt Field::inv(Felt a) const {
  if (a.code == 0) fail(ErrorKind::InverseOfZero, "inverse of zero in " + header());
  if (tabled_) return Felt{inv_[a.code]};
  return pow(a, static_cast<long long>(q_) - 2);
}

Felt Field::pow(Felt a, long long e) const {
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  Felt result = one();
  while (e > 0) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

std::uint32_t Field::mult_order(Felt a) const {
  if (a.code == 0) fail(ErrorKind::OrderOfZero, "multiplicative order of zero");
  const std::uint32_t group = q_ - 1;
  for (std::uint32_t t = 1; t <= group; ++t) {
    if (group % t == 0 && pow(a, t) == one()) return t;
  }
  return group;
}

std::vector<Felt> Field::elements() const {
  std::vector<Felt> out;
  out.reserve(q_);
  for (std::uint32_t c = 0; c < q_; ++c) out.emplace_back(c);
  return out;
}

std::string Field::header() const {
  std::ostringstream os;
  os << "field p=" << p_ << " ext=" << d_;
  if (d_ > 1) {
    os << " modulus=";
    for (std::size_t i = 0; i < modulus_.size(); ++i) {
      if (i) os << ',';
      os << modulus_[i];
    }
  }
  return os.str();
}

}  // namespace mtcodes
