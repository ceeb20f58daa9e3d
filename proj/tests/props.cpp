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

#include "props.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "mtcodes/analysis.hpp"
#include "mtcodes/error.hpp"
#include "mtcodes/qcrev.hpp"
#include "support.hpp"

namespace mtcodes::testing {

namespace {

struct FieldChoice {
  FieldRef f;
  int max_n;
};

FieldChoice pick_field(Rng& rng, bool binary_ok, bool need_nontrivial_lambda) {
  std::vector<FieldChoice> opts;
  if (binary_ok && !need_nontrivial_lambda) opts.push_back({f2(), 16});
  opts.push_back({f3(), 9});
  opts.push_back({f4(), 7});
  if (need_nontrivial_lambda) opts.push_back({f5(), 6});
  return opts[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(opts.size()) - 1))];
}

bool small_enough(const MTCode& c, double log2_cap) {
  const double lq = std::log2(static_cast<double>(c.field()->q()));
  const int k = dimension(c);
  const int n = c.shape().n();
  return k * lq <= log2_cap + 1e-9 && (n - k) * lq <= log2_cap + 1e-9;
}

std::string describe(const MTCode& c) {
  std::ostringstream os;
  os << c.field()->header() << " blocks";
  for (int m : c.shape().ms) os << ' ' << m;
  os << " lambdas";
  for (Felt l : c.shape().lambdas) os << ' ' << l.code;
  os << "\n" << format_polymat(c.gpm());
  return os.str();
}

PropResult failed(PropResult r, const std::string& what, const MTCode& c) {
  r.ok = false;
  r.detail = what + " for\n" + describe(c);
  return r;
}

// Random codes of the class whose size passes the filter.
template <typename Body>
PropResult for_codes(std::uint64_t seed, int trials, ShapeClass cls, double log2_cap, Body body) {
  Rng rng(seed);
  PropResult r;
  int attempts = 0;
  while (r.trials < trials) {
    if (++attempts > trials * 200) {
      r.ok = false;
      r.detail = "could not generate enough small codes";
      return r;
    }
    const MTCode c = random_code(rng, random_shape(rng, cls));
    if (!small_enough(c, log2_cap)) continue;
    ++r.trials;
    std::string why;
    try {
      if (!body(c, why)) return failed(r, why, c);
    } catch (const Error& e) {
      return failed(r, std::string("exception ") + e.what(), c);
    }
  }
  return r;
}

}  // namespace

Poly Rng::poly(const FieldRef& f, int max_deg) {
  if (max_deg < 0) return Poly(f);
  std::vector<Felt> c(static_cast<std::size_t>(max_deg) + 1);
  for (auto& x : c) x = element(*f);
  return Poly(f, std::move(c));
}

MTShape random_shape(Rng& rng, ShapeClass cls) {
  const bool twisted = cls == ShapeClass::MT || cls == ShapeClass::QT;
  const FieldChoice fc = pick_field(rng, true, twisted && rng.chance(0.7));
  const FieldRef& f = fc.f;
  const int ell = rng.uniform(1, 3);
  std::vector<int> ms;
  std::vector<Felt> lambdas;
  const bool equal = cls == ShapeClass::QC || cls == ShapeClass::QT;
  const int budget = fc.max_n;
  if (equal) {
    const int m = rng.uniform(std::min(2, std::max(1, budget / ell)), std::max(1, budget / ell));
    ms.assign(static_cast<std::size_t>(ell), m);
  } else {
    int left = budget;
    for (int j = 0; j < ell; ++j) {
      const int hi = std::max(1, left - (ell - 1 - j));
      const int m = rng.uniform(1, std::min(hi, 5));
      ms.push_back(m);
      left -= m;
    }
  }
  if (cls == ShapeClass::QC || cls == ShapeClass::GQC) {
    lambdas.assign(static_cast<std::size_t>(ell), f->one());
  } else if (cls == ShapeClass::QT) {
    lambdas.assign(static_cast<std::size_t>(ell), rng.nonzero(*f));
  } else {
    for (int j = 0; j < ell; ++j) lambdas.push_back(rng.nonzero(*f));
  }
  return MTShape::make(f, ms, lambdas);
}

MTCode random_code(Rng& rng, const MTShape& shape) {
  const FieldRef& f = shape.field;
  const auto ell = shape.ell();
  const int kind = rng.uniform(0, 19);
  if (kind == 0) return MTCode::from_generators(shape, PolyMat(f, 0, ell));
  if (kind == 1) return MTCode::from_generators(shape, PolyMat::identity(f, ell));
  if (kind < 6) {
    // Unstructured generators.
    const auto rows = static_cast<std::size_t>(rng.uniform(1, static_cast<int>(ell) + 1));
    PolyMat gens(f, rows, ell);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t j = 0; j < ell; ++j)
        if (!rng.chance(0.3)) gens(r, j) = rng.poly(f, shape.ms[j] - 1);
    return MTCode::from_generators(shape, gens);
  }
  // Triangular generators with divisor diagonals, scrambled by a unimodular matrix.
  PolyMat gens(f, ell, ell);
  for (std::size_t j = 0; j < ell; ++j) {
    auto divs = monic_divisors(shape.modulus(j), 24);
    if (divs.size() > 2 && rng.chance(0.75)) {
      divs.erase(std::remove_if(divs.begin(), divs.end(), [&](const Poly& d) { return d.degree() == 0 || d.degree() == shape.ms[j]; }),
                 divs.end());
    }
    gens(j, j) = divs[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(divs.size()) - 1))];
    for (std::size_t i = 0; i < j; ++i)
      if (rng.chance(0.5)) gens(i, j) = rng.poly(f, shape.ms[j] - 1);
  }
  return MTCode::from_generators(shape, random_unimodular(rng, f, ell) * gens);
}

PolyMat random_unimodular(Rng& rng, const FieldRef& f, std::size_t n) {
  PolyMat v = PolyMat::identity(f, n);
  const int ops = rng.uniform(1, 10);
  for (int k = 0; k < ops; ++k) {
    const auto i = static_cast<std::size_t>(rng.uniform(0, static_cast<int>(n) - 1));
    const auto j = static_cast<std::size_t>(rng.uniform(0, static_cast<int>(n) - 1));
    PolyMat e = PolyMat::identity(f, n);
    const int kind = rng.uniform(0, 2);
    if (kind == 0) {
      e = PolyMat(f, n, n);
      for (std::size_t t = 0; t < n; ++t) e(t, t == i ? j : (t == j ? i : t)) = Poly::constant(f, f->one());
    } else if (kind == 1) {
      e(i, i) = Poly::constant(f, rng.nonzero(*f));
    } else if (i != j) {
      e(i, j) = rng.poly(f, 2);
    }
    v = e * v;
  }
  return v;
}

PropResult prop_dual_null_space(std::uint64_t seed, int trials) {
  return for_codes(seed, trials, ShapeClass::MT, 12, [](const MTCode& c, std::string& why) {
    const FMatrix e = expand(c);
    const MTCode d = dual(c);
    const FMatrix ed = expand(d);
    if (dimension(c) + dimension(d) != c.shape().n()) {
      why = "dimensions do not add to n";
      return false;
    }
    if (!same_row_space(ed, e.null_space())) {
      why = "expanded dual differs from the null space";
      return false;
    }
    if (!(d.shape() == c.shape().dual()) || !is_multi_twisted(ed, d.shape())) {
      why = "dual is not invariant under the inverted shift";
      return false;
    }
    return true;
  });
}

PropResult prop_macwilliams(std::uint64_t seed, int trials) {
  return for_codes(seed, trials, ShapeClass::MT, 14, [](const MTCode& c, std::string& why) {
    const std::uint32_t q = c.field()->q();
    const int k = dimension(c);
    const int n = c.shape().n();
    const WeightEnumerator w = weight_enumerator(c);
    const std::vector<long long> brute = naive_weights(expand(dual(c)));
    BigInt size = 1;
    for (int i = 0; i < k; ++i) size *= q;
    const WeightEnumerator wd = macwilliams(w, q, size);
    for (int i = 0; i <= n; ++i) {
      if (wd.coeffs[i] != brute[i]) {
        why = "MacWilliams coefficient " + std::to_string(i) + " differs from enumeration";
        return false;
      }
    }
    if (!(macwilliams(wd, q, wd.total()) == w)) {
      why = "MacWilliams transform is not an involution";
      return false;
    }
    if (k >= 1) {
      const int d = min_distance(c);
      if (d != w.min_nonzero_weight() || !singleton_check(n, k, d).holds) {
        why = "minimum distance inconsistent or above the Singleton bound";
        return false;
      }
    }
    return true;
  });
}

PropResult prop_hnf_uniqueness(std::uint64_t seed, int trials) {
  Rng rng(seed);
  PropResult r;
  const FieldRef fields[] = {f2(), f3(), f4()};
  for (; r.trials < trials; ++r.trials) {
    const FieldRef& f = fields[r.trials % 3];
    const auto rows = static_cast<std::size_t>(rng.uniform(1, 4));
    const auto cols = static_cast<std::size_t>(rng.uniform(1, 3));
    PolyMat a(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        if (!rng.chance(0.25)) a(i, j) = rng.poly(f, 3);
    const PolyMat v = random_unimodular(rng, f, rows);
    const HnfResult h1 = hnf(a);
    const HnfResult h2 = hnf(v * a);
    std::string why;
    if (!(h1.h == h2.h)) why = "HNF differs after unimodular multiplication";
    if (!(h1.u * a == h1.h) || !(h2.u * (v * a) == h2.h)) why = "witness does not reproduce the HNF";
    if (!is_unimodular(h1.u) || !is_unimodular(h2.u)) why = "witness is not unimodular";
    if (!is_hnf(h1.h)) why = "result is not in Hermite normal form";
    if (!why.empty()) {
      r.ok = false;
      r.detail = why + " for\n" + format_polymat(a);
      return r;
    }
  }
  return r;
}

PropResult prop_qt_commutativity(std::uint64_t seed, int trials) {
  return for_codes(seed, trials, ShapeClass::QT, 24, [](const MTCode& c, std::string& why) {
    if (!(c.gpm() * c.amat() == c.shape().D()) || !(c.amat() * c.gpm() == c.shape().D())) {
      why = "G A != D";
      return false;
    }
    return true;
  });
}

PropResult prop_double_dual(std::uint64_t seed, int trials) {
  return for_codes(seed, trials, ShapeClass::MT, 24, [](const MTCode& c, std::string& why) {
    if (!(dual(dual(c)) == c)) {
      why = "dual of the dual differs";
      return false;
    }
    return true;
  });
}

PropResult prop_double_reverse(std::uint64_t seed, int trials) {
  return for_codes(seed, trials, ShapeClass::QC, 12, [](const MTCode& c, std::string& why) {
    const MTCode rc = reversed_code(c);
    if (!(reversed_code(rc) == c)) {
      why = "reversing twice differs";
      return false;
    }
    const FMatrix e = expand(c);
    FMatrix rev(c.field(), 0, e.cols());
    for (std::size_t i = 0; i < e.rows(); ++i) rev.append_row(reverse_word(e.row(i)));
    const FMatrix er = expand(rc);
    if (!same_row_space(rev, er) || !is_multi_twisted(er, c.shape())) {
      why = "reversed GPM does not generate the reversed code";
      return false;
    }
    return true;
  });
}

PropResult prop_corollaries(std::uint64_t seed, int trials_per_class) {
  PropResult total;
  const struct {
    ShapeClass cls;
    PolyMat (*fn)(const MTCode&);
    const char* name;
  } cases[] = {{ShapeClass::QC, dual_gpm_qc, "qc"}, {ShapeClass::QT, dual_gpm_qt, "qt"}, {ShapeClass::GQC, dual_gpm_gqc, "gqc"}};
  for (const auto& cs : cases) {
    PropResult r = for_codes(seed + static_cast<std::uint64_t>(cs.cls), trials_per_class, cs.cls, 24,
                             [&](const MTCode& c, std::string& why) {
                               const MTCode via = MTCode::from_generators(c.shape().dual(), cs.fn(c));
                               if (!(via == dual(c))) {
                                 why = std::string("closed form '") + cs.name + "' generates a different module";
                                 return false;
                               }
                               return true;
                             });
    total.trials += r.trials;
    if (!r.ok) {
      r.trials = total.trials;
      return r;
    }
  }
  return total;
}

}  // namespace mtcodes::testing
