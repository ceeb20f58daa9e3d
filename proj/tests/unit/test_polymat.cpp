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


#include <doctest.h>

#include <algorithm>
#include <set>

#include "mtcodes/error.hpp"
#include "mtcodes/polymat.hpp"
#include "props.hpp"
#include "support.hpp"

using namespace mtcodes;
using namespace mtcodes::testing;

namespace {

const char* const kQcG[5][5] = {{"{0,1}", "0", "0", "{1,4}", "{1,2,3,4}"},
                                {"0", "{0,1}", "0", "{1,2,3,4}", "{1,4}"},
                                {"0", "0", "{0,5}", "0", "0"},
                                {"0", "0", "0", "{0,5}", "0"},
                                {"0", "0", "0", "0", "{0,5}"}};

PolyMat qc_g() {
  PolyMat g(f2(), 5, 5);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) g(i, j) = P(f2(), kQcG[i][j]);
  return g;
}

PolyMat qc_f() {
  return PM(f2(), {{"{2,3,4,5}", "{2,5}", "0", "0", "{0,1}"},
                   {"{2,5}", "{2,3,4,5}", "0", "{0,1}", "0"},
                   {"0", "0", "{0,5}", "0", "0"},
                   {"0", "{0,5}", "0", "0", "0"},
                   {"{0,5}", "0", "0", "0", "0"}});
}

PolyMat qc_u() {
  return PM(f2(), {{"{2,4}", "{2,3,4}", "0", "0", "{0,1}"},
                   {"{2,3,4}", "{2,4}", "0", "{0,1}", "0"},
                   {"0", "0", "{0}", "0", "0"},
                   {"0", "{0,1,2,3,4}", "0", "{1,3}", "{1,2,3}"},
                   {"{0,1,2,3,4}", "0", "0", "{1,2,3}", "{1,3}"}});
}

PolyMat qc_gperp() {
  return PM(f2(), {{"{0}", "0", "0", "{1,2,3}", "{1,3}"},
                   {"0", "{0}", "0", "{1,3}", "{1,2,3}"},
                   {"0", "0", "{0}", "0", "0"},
                   {"0", "0", "0", "{0,1,2,3,4}", "0"},
                   {"0", "0", "0", "0", "{0,1,2,3,4}"}});
}

// Key for a row of polynomials, for set membership.
std::string key(const std::vector<Poly>& v) {
  std::string s;
  for (const auto& p : v) s += format_poly(p) + ";";
  return s;
}

}  // namespace

TEST_SUITE("polymat") {
  TEST_CASE("determinants and unimodularity") {
    CHECK(det(PolyMat::identity(f3(), 4)) == P(f3(), "1@0"));
    const PolyMat d = PolyMat::diag(f2(), {P(f2(), "{1}"), P(f2(), "{0}")});
    CHECK(det(d) == P(f2(), "{1}"));
    CHECK_FALSE(is_unimodular(d));
    const Poly du = det(qc_u());
    CHECK(du.degree() == 0);
    CHECK(is_unimodular(qc_u()));
    CHECK_THROWS_AS(det(PolyMat(f2(), 2, 3)), Error);
  }

  TEST_CASE("products and shape checks") {
    const PolyMat j = PolyMat::backward_identity(f2(), 3);
    CHECK(j * j == PolyMat::identity(f2(), 3));
    CHECK_THROWS_AS(PolyMat(f2(), 2, 3) * PolyMat(f2(), 2, 3), Error);
    CHECK(qc_u() * qc_g() == qc_f());
  }

  TEST_CASE("Hermite normal form of the reversed generator") {
    const HnfResult r = hnf(qc_f());
    CHECK(r.h == qc_g());
    CHECK(r.rank == 5);
    CHECK(r.u * qc_f() == r.h);
    CHECK(is_unimodular(r.u));
  }

  TEST_CASE("Hermite normal form is idempotent") {
    const HnfResult r = hnf(qc_g());
    CHECK(r.h == qc_g());
    CHECK(is_hnf(qc_g()));
    CHECK_FALSE(is_hnf(qc_f()));
  }

  TEST_CASE("zero rows sink to the bottom") {
    const PolyMat a = PM(f3(), {{"0", "0"}, {"1@1", "2@0"}, {"2@1", "1@0"}});
    const HnfResult r = hnf(a);
    CHECK(r.rank == 1);
    CHECK(r.h == PM(f3(), {{"1@1", "2@0"}, {"0", "0"}, {"0", "0"}}));
    CHECK(r.pivots == std::vector<std::size_t>{0});
  }

  TEST_CASE("membership") {
    const CodeFile cf = read_code_file(data_path("mt_f3_60.code"));
    const PolyMat g = cf.gens;
    for (std::size_t i = 0; i < g.rows(); ++i) {
      const Membership m = member(g.row(i), g);
      CHECK(m.member);
    }
    const Membership mx = member({P(f3(), "1@0+1@20"), Poly(f3())}, g);
    CHECK(mx.member);
    CHECK(std::all_of(mx.remainder.begin(), mx.remainder.end(), [](const Poly& p) { return p.is_zero(); }));

    const PolyMat d = PolyMat::diag(f2(), {P(f2(), "{0,1}"), P(f2(), "{0,1}")});
    const Membership no = member({P(f2(), "{0}"), Poly(f2())}, d);
    CHECK_FALSE(no.member);
    CHECK(no.remainder[0] == P(f2(), "{0}"));
    CHECK(no.remainder[1].is_zero());
  }

  TEST_CASE("left solves") {
    const PolyMat g = qc_g();
    const auto id = solve_left(g, g);
    REQUIRE(id.has_value());
    CHECK(*id == PolyMat::identity(f2(), 5));

    const auto u = solve_left(g, qc_gperp());
    REQUIRE(u.has_value());
    CHECK(*u * qc_gperp() == g);

    const PolyMat dmat = PolyMat::diag(f2(), std::vector<Poly>(5, P(f2(), "{0,5}")));
    const auto a = solve_left(dmat, g);
    REQUIRE(a.has_value());
    CHECK(*a * g == dmat);
    CHECK(*a == PM(f2(), {{"{0,1,2,3,4}", "0", "0", "{1,2,3}", "{1,3}"},
                          {"0", "{0,1,2,3,4}", "0", "{1,3}", "{1,2,3}"},
                          {"0", "0", "{0}", "0", "0"},
                          {"0", "0", "0", "{0}", "0"},
                          {"0", "0", "0", "0", "{0}"}}));

    CHECK_FALSE(solve_left(qc_gperp(), g).has_value());
  }

  TEST_CASE("HNF uniqueness and witness soundness") {
    const PropResult r = prop_hnf_uniqueness(21, 150);
    INFO(r.detail);
    CHECK(r.ok);
    CHECK(r.trials == 150);
  }

  TEST_CASE("determinant of the HNF is the monic associate") {
    Rng rng(22);
    int checked = 0;
    for (const auto& f : {f2(), f3(), f4()}) {
      for (int t = 0; t < 40; ++t) {
        const auto n = static_cast<std::size_t>(rng.uniform(1, 3));
        PolyMat a(f, n, n);
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) a(i, j) = rng.poly(f, 3);
        const Poly da = det(a);
        if (da.is_zero()) continue;
        CHECK(det(hnf(a).h) == da.monic());
        ++checked;
      }
    }
    CHECK(checked > 60);
  }

  TEST_CASE("membership agrees with span enumeration") {
    const auto f = f2();
    Rng rng(23);
    int checked = 0;
    while (checked < 40) {
      PolyMat a(f, 2, 2);
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) a(i, j) = rng.poly(f, 2);
      const PolyMat h = hnf(a).h;
      if (det(h).is_zero()) continue;
      ++checked;
      // All combinations c h with deg c_i <= 3, truncated to degree <= 3.
      std::set<std::string> span;
      for (int c0 = 0; c0 < 16; ++c0) {
        for (int c1 = 0; c1 < 16; ++c1) {
          std::vector<Felt> e0(4), e1(4);
          for (int b = 0; b < 4; ++b) {
            e0[b] = Felt{static_cast<std::uint32_t>((c0 >> b) & 1)};
            e1[b] = Felt{static_cast<std::uint32_t>((c1 >> b) & 1)};
          }
          const Poly p0(f, e0), p1(f, e1);
          const std::vector<Poly> v{p0 * h(0, 0) + p1 * h(1, 0), p0 * h(0, 1) + p1 * h(1, 1)};
          if (v[0].degree() <= 3 && v[1].degree() <= 3) span.insert(key(v));
        }
      }
      for (int t = 0; t < 256; ++t) {
        std::vector<Felt> e0(4), e1(4);
        for (int b = 0; b < 4; ++b) {
          e0[b] = Felt{static_cast<std::uint32_t>((t >> b) & 1)};
          e1[b] = Felt{static_cast<std::uint32_t>((t >> (b + 4)) & 1)};
        }
        const std::vector<Poly> v{Poly(f, e0), Poly(f, e1)};
        CHECK(member(v, h).member == (span.count(key(v)) == 1));
      }
    }
  }
}
