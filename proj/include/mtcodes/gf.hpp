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

#ifndef MTCODES_GF_HPP
#define MTCODES_GF_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace mtcodes {

/// An element of F_q, integer-coded.  The element sum_i a_i * theta^i is
/// stored as sum_i a_i * p^i, i.e. the base-p digits of the code are the
/// coordinates over F_p in ascending powers of the field generator theta.
/// Code 0 is the additive identity and code 1 the multiplicative identity.
struct Felt {
  std::uint32_t code = 0;

  constexpr Felt() = default;
  constexpr explicit Felt(std::uint32_t c) : code(c) {}

  friend constexpr bool operator==(Felt, Felt) = default;
  friend constexpr auto operator<=>(Felt, Felt) = default;
};

class Field;
using FieldRef = std::shared_ptr<const Field>;

/// Finite field F_q with q = p^d, realised as F_p[t]/(modulus).
///
/// Immutable after construction.  Dense operation tables are built for
/// q <= 256; larger fields reduce on the fly.
class Field {
 public:
  static constexpr std::uint32_t kDefaultCap = 1u << 16;
  static constexpr std::uint32_t kTableLimit = 256;

  /// Throws Error(InvalidField) unless p is prime, the modulus is monic of
  /// degree d with digits in [0,p) and irreducible over F_p, and q <= cap.
  /// The modulus is ignored when d == 1.
  static FieldRef make(std::uint32_t p, std::uint32_t d = 1,
                       std::vector<std::uint32_t> modulus = {},
                       std::uint32_t cap = kDefaultCap);
  static FieldRef prime(std::uint32_t p) { return make(p); }

  std::uint32_t p() const { return p_; }
  std::uint32_t d() const { return d_; }
  std::uint32_t q() const { return q_; }
  /// Ascending coefficients of the modulus (length d+1); empty for d == 1.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  bool contains(Felt a) const { return a.code < q_; }
  Felt zero() const { return Felt{0}; }
  Felt one() const { return Felt{1}; }
  /// Image of an integer in the prime subfield.
  Felt from_int(long long v) const;

  Felt add(Felt a, Felt b) const;
  Felt sub(Felt a, Felt b) const;
  Felt neg(Felt a) const;
  Felt mul(Felt a, Felt b) const;
  Felt inv(Felt a) const;
  Felt div(Felt a, Felt b) const { return mul(a, inv(b)); }
  /// Negative exponents are allowed for nonzero a.
  Felt pow(Felt a, long long e) const;

  /// Least t >= 1 with a^t = 1.
  std::uint32_t mult_order(Felt a) const;

  /// All q elements in ascending code order.
  std::vector<Felt> elements() const;

  /// `field p=<p> ext=<d> [modulus=<c0,...,cd>]`
  std::string header() const;

  bool same_as(const Field& other) const {
    return p_ == other.p_ && d_ == other.d_ && modulus_ == other.modulus_;
  }

 private:
  Field(std::uint32_t p, std::uint32_t d, std::vector<std::uint32_t> modulus);

  Felt add_slow(Felt a, Felt b, int sign) const;
  Felt mul_slow(Felt a, Felt b) const;
  void build_tables();

  std::uint32_t p_;
  std::uint32_t d_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  bool tabled_ = false;
  std::vector<std::uint16_t> add_;
  std::vector<std::uint16_t> mul_;
  std::vector<std::uint16_t> neg_;
  std::vector<std::uint16_t> inv_;
};

bool is_prime(std::uint64_t n);

}  // namespace mtcodes

#endif
