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

#include <functional>

#include "mtcodes/analysis.hpp"
#include "mtcodes/error.hpp"
#include "props.hpp"
#include "support.hpp"

using namespace mtcodes;
using namespace mtcodes::testing;

namespace {

MTCode mt60() { return load_code(data_path("mt_f3_60.code")); }
MTCode qc25() { return load_code(data_path("qc_f2_25.code")); }

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InvalidArgument;
}

WeightEnumerator sparse(int n, std::initializer_list<std::pair<int, const char*>> terms) {
  WeightEnumerator w;
  w.n = n;
  w.coeffs.assign(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& [i, c] : terms) w.coeffs[static_cast<std::size_t>(i)] = BigInt(c);
  return w;
}

BigInt binom(int n, int k) {
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_SUITE("analysis") {
  TEST_CASE("weight enumerators of the worked codes") {
    const WeightEnumerator w = weight_enumerator(mt60());
    CHECK(w == sparse(60, {{0, "1"}, {36, "400"}, {45, "328"}}));
    CHECK(w.total() == 729);
    const WeightEnumerator q = weight_enumerator(qc25());
    CHECK(q == sparse(25, {{0, "1"}, {8, "130"}, {12, "120"}, {16, "5"}}));
    CHECK(format_wenum_poly(q) == "1 + 130 y^8 + 120 y^12 + 5 y^16");
    CHECK(format_wenum_line(w) == "wenum n=60 0:1 36:400 45:328");
  }

  TEST_CASE("zero code") {
    const MTCode z = MTCode::from_generators(qc25().shape(), PolyMat(f2(), 0, 5));
    const WeightEnumerator w = weight_enumerator(z);
    CHECK(w == sparse(25, {{0, "1"}}));
    const WeightEnumerator full = macwilliams(w, 2, 1);
    for (int i = 0; i <= 25; ++i) CHECK(full.coeffs[static_cast<std::size_t>(i)] == binom(25, i));

    const WeightEnumerator w3 = sparse(7, {{0, "1"}});
    const WeightEnumerator full3 = macwilliams(w3, 3, 1);
    BigInt pw = 1;
    for (int i = 0; i <= 7; ++i, pw *= 2) CHECK(full3.coeffs[static_cast<std::size_t>(i)] == binom(7, i) * pw);
    CHECK_THROWS_AS(min_distance(z), Error);
  }

  TEST_CASE("MacWilliams transform of the worked enumerators") {
    const WeightEnumerator d = macwilliams(weight_enumerator(mt60()), 3, 729);
    CHECK(d.coeffs[0] == 1);
    CHECK(d.coeffs[1] == 0);
    CHECK(d.coeffs[2] == 40);
    CHECK(d.coeffs[3] == 240);
    CHECK(d.coeffs[4] == 8760);
    CHECK(d.coeffs[59] == BigInt("47445329187307520"));
    CHECK(d.coeffs[60] == BigInt("1581510989447168"));
    BigInt all = 1;
    for (int i = 0; i < 54; ++i) all *= 3;
    CHECK(d.total() == all);

    const WeightEnumerator dq = macwilliams(weight_enumerator(qc25()), 2, 256);
    CHECK(dq.coeffs[1] == 5);
    CHECK(dq.coeffs[2] == 10);
    CHECK(dq.coeffs[3] == 10);
    CHECK(dq.coeffs[24] == 5);
    CHECK(dq.coeffs[25] == 1);
    CHECK(dq == weight_enumerator(dual(qc25())));
  }

  TEST_CASE("MacWilliams input checks") {
    const WeightEnumerator q = weight_enumerator(qc25());
    CHECK(kind_of([&] { (void)macwilliams(q, 2, 255); }) == ErrorKind::InvalidArgument);
    const WeightEnumerator bad = sparse(3, {{0, "1"}, {1, "2"}});
    CHECK(kind_of([&] { (void)macwilliams(bad, 2, 3); }) == ErrorKind::NonIntegerResult);
  }

  TEST_CASE("minimum distances") {
    CHECK(min_distance(mt60()) == 36);
    CHECK(min_distance(qc25()) == 8);
    const GenMatFile qt = read_genmat_file(data_path("qt_f4_9.genmat"));
    const MTCode c = from_generator_matrix(qt.g, qt.shape);
    CHECK(min_distance(c) == 3);
    CHECK(weight_enumerator(c).total() == 4096);
    CHECK(min_distance(load_code(data_path("consta_f9_5.code"))) == 3);
  }

  TEST_CASE("enumeration cap") {
    EnumOptions o;
    o.cap = 100;
    CHECK(kind_of([&] { (void)weight_enumerator(mt60(), o); }) == ErrorKind::EnumerationCapExceeded);
    CHECK(kind_of([&] { (void)min_distance(qc25(), o); }) == ErrorKind::EnumerationCapExceeded);
    o.cap = 256;
    CHECK(min_distance(qc25(), o) == 8);
  }

  TEST_CASE("partitioning does not change results") {
    Rng rng(51);
    for (int t = 0; t < 30; ++t) {
      const MTCode c = random_code(rng, random_shape(rng, ShapeClass::MT));
      const WeightEnumerator w1 = weight_enumerator(c);
      for (unsigned jobs : {2u, 3u, 8u}) {
        EnumOptions o;
        o.jobs = jobs;
        CHECK(weight_enumerator(c, o) == w1);
      }
      const auto brute = naive_weights(expand(c));
      for (std::size_t i = 0; i < brute.size(); ++i) CHECK(w1.coeffs[i] == brute[i]);
    }
    EnumOptions o;
    o.jobs = 6;
    CHECK(weight_enumerator(mt60(), o) == weight_enumerator(mt60()));
  }

  TEST_CASE("Singleton bound") {
    SingletonReport r = singleton_check(5, 3, 3);
    CHECK(r.holds);
    CHECK(r.is_mds);
    r = singleton_check(7, 7, 1);
    CHECK(r.is_mds);
    r = singleton_check(25, 8, 8);
    CHECK(r.holds);
    CHECK_FALSE(r.is_mds);
    CHECK_FALSE(singleton_check(5, 3, 4).holds);
  }

  TEST_CASE("enumerator lines round trip") {
    const WeightEnumerator w = weight_enumerator(mt60());
    CHECK(parse_wenum_line(format_wenum_line(w)) == w);
    const WeightEnumerator d = macwilliams(w, 3, 729);
    CHECK(parse_wenum_line(format_wenum_line(d)) == d);
    CHECK_THROWS_AS(parse_wenum_line("wenum n=3 4:1"), Error);
    CHECK_THROWS_AS(parse_wenum_line("nonsense"), Error);
  }

  TEST_CASE("MacWilliams against enumeration of random duals") {
    const PropResult r = prop_macwilliams(52, 30);
    INFO(r.detail);
    CHECK(r.ok);
  }
}
