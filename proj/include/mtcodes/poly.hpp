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

#ifndef MTCODES_POLY_HPP
#define MTCODES_POLY_HPP

#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "mtcodes/gf.hpp"

namespace mtcodes {

/// Degree of the zero polynomial; compares below every real degree.
inline constexpr int kDegNegInf = std::numeric_limits<int>::min();

/// Univariate polynomial over F_q in canonical form (no trailing zeros).
class Poly {
 public:
  explicit Poly(FieldRef field);
  Poly(FieldRef field, std::vector<Felt> coeffs);

  static Poly constant(FieldRef field, Felt c);
  static Poly monomial(FieldRef field, Felt c, int exponent);
  /// x^m - lambda
  static Poly binomial(FieldRef field, int m, Felt lambda);

  const FieldRef& field() const { return field_; }
  const Field& f() const { return *field_; }
  std::span<const Felt> coeffs() const { return c_; }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return c_.empty() ? kDegNegInf : static_cast<int>(c_.size()) - 1; }
  Felt coeff(int i) const;
  Felt lead() const { return c_.empty() ? Felt{0} : c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == Felt{1}; }
  bool is_constant() const { return c_.size() <= 1; }

  Poly operator+(const Poly& rhs) const;
  Poly operator-(const Poly& rhs) const;
  Poly operator-() const;
  Poly operator*(const Poly& rhs) const;
  Poly& operator+=(const Poly& rhs) { return *this = *this + rhs; }
  Poly& operator-=(const Poly& rhs) { return *this = *this - rhs; }
  Poly& operator*=(const Poly& rhs) { return *this = *this * rhs; }

  Poly scaled(Felt s) const;
  /// Multiplication by x^e, e >= 0.
  Poly shifted(int e) const;
  Poly monic() const;

  bool operator==(const Poly& rhs) const { return c_ == rhs.c_; }

 private:
  void trim();

  FieldRef field_;
  std::vector<Felt> c_;
};

struct DivMod {
  Poly quot;
  Poly rem;
};

/// a = quot*b + rem with deg rem < deg b.  Throws DivisionByZeroPoly.
DivMod divmod(const Poly& a, const Poly& b);
bool divides(const Poly& divisor, const Poly& a);
/// Exact quotient; throws InexactDivision when b does not divide a.
Poly exact_div(const Poly& a, const Poly& b);

/// Monic gcd; gcd(0,0) is the zero polynomial.
Poly gcd(const Poly& a, const Poly& b);

/// Bezout data g = s*a + t*b with g the monic gcd.
struct ExtGcd {
  Poly g;
  Poly s;
  Poly t;
};
ExtGcd ext_gcd(const Poly& a, const Poly& b);

/// g*(x) = x^{deg g} g(1/x).  Throws ReciprocalOfZero.
Poly reciprocal(const Poly& g);

/// Monic irreducible factors with multiplicities, sorted by degree then by the
/// ascending coefficient codes.  Throws DegreeCapExceeded when deg a > cap.
std::vector<std::pair<Poly, int>> factor(const Poly& a, int degree_cap = 24);

/// All monic divisors of a, sorted like factor().
std::vector<Poly> monic_divisors(const Poly& a, int degree_cap = 24);

/// Ordering used for deterministic output: degree, then coefficient codes.
bool poly_less(const Poly& a, const Poly& b);

/// Laurent polynomial sum_{i} c_i x^{lo+i}; canonical when both end
/// coefficients are nonzero (the zero element has no coefficients, lo = 0).
class LauPoly {
 public:
  explicit LauPoly(FieldRef field);
  LauPoly(FieldRef field, int lo, std::vector<Felt> coeffs);
  static LauPoly from_poly(const Poly& p);

  const FieldRef& field() const { return field_; }
  bool is_zero() const { return c_.empty(); }
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(c_.size()) - 1; }
  std::span<const Felt> coeffs() const { return c_; }
  Felt coeff(int e) const;

  LauPoly operator+(const LauPoly& rhs) const;
  LauPoly operator*(const LauPoly& rhs) const;
  bool operator==(const LauPoly& rhs) const { return lo_ == rhs.lo_ && c_ == rhs.c_; }

  bool is_poly() const { return c_.empty() || lo_ >= 0; }
  /// Throws NegativeExponentRemains when some exponent is negative.
  Poly to_poly() const;

 private:
  void trim();

  FieldRef field_;
  int lo_ = 0;
  std::vector<Felt> c_;
};

/// a(1/x)
LauPoly substitute_inverse(const Poly& a);
/// x^e * a
LauPoly lau_shift(const LauPoly& a, int e);
/// Reduces the negative-exponent part modulo x^m - 1/mu: every term
/// c x^{-k} (k >= 1) becomes c mu x^{m-k}, repeated until no negative
/// exponent remains.  Nonnegative exponents pass through unchanged.
Poly lau_reduce(const LauPoly& a, int m, Felt mu);
/// Remainder of a modulo x^m - lambda (degree < m).
Poly reduce_mod_binomial(const Poly& a, int m, Felt lambda);
/// Representative of degree < m of a Laurent polynomial modulo x^m - lambda.
Poly lau_mod_binomial(const LauPoly& a, int m, Felt lambda);
/// A single replacement pass; throws NegativeExponentRemains if a term
/// with exponent below -m is present.
Poly lau_reduce_once(const LauPoly& a, int m, Felt mu);

}  // namespace mtcodes

#endif
