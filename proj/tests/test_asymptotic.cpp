// Copyright 2026 The paritysep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>

#include "doctest.h"
#include "paritysep/asymptotic.hpp"

using namespace paritysep;

namespace {

double digits(const Real& a, const Real& b) { return agreeing_digits(Complex(a), Complex(b)); }

}  // namespace

TEST_CASE("Ingham term reproduces the eu^ou main term") {
  const Bits bits = 160;
  const AsymptoticParams p = main_term_params(FamilyCode::parse("eu^ou"), bits);
  const Real pi = Real::pi(bits);
  for (long m : {1L, 7L, 50L, 1000L}) {
    const Real x(m, bits);
    const Real expected = exp(pi * sqrt(x / Real(3L, bits))) / (Real(2L, bits) * pi * sqrt(x));
    CHECK(digits(ingham_term(p, x), expected) > 30);
  }
}

TEST_CASE("gamma scaling") {
  const Bits bits = 128;
  AsymptoticParams p = main_term_params(FamilyCode::parse("eu^ou"), bits);
  AsymptoticParams q = p;
  q.gamma = p.gamma * Real(2L, bits);
  // The exponent 2 sqrt(gamma m) grows by sqrt 2.
  const Real m(1e6, bits);
  const Real ratio = log(ingham_term(q, m)) / log(ingham_term(p, m));
  CHECK(std::fabs(ratio.to_double() - std::sqrt(2.0)) < 0.01);
}

TEST_CASE("main term values") {
  const Bits bits = 128;
  const Real pi = Real::pi(bits);
  const Real e = exp(pi * sqrt(Real(100L, bits) / Real(3L, bits))) / (Real(20L, bits) * pi);
  CHECK(digits(main_term(FamilyCode::parse("eu^ou"), 100, bits), e) > 35);
  for (long n : {1L, 10L, 12345L}) {
    const Real ratio = main_term(FamilyCode::parse("ed^od"), n, bits) /
                       main_term(FamilyCode::parse("od^ed"), n, bits);
    CHECK(digits(ratio, Real(1L, bits) / sqrt(Real(2L, bits))) > 35);
  }
  CHECK_THROWS_AS(main_term(FamilyCode::parse("eu^ou"), 0), std::invalid_argument);
}

TEST_CASE("parameter table") {
  int stride2 = 0;
  for (const auto& f : FamilyCode::all()) {
    const AsymptoticParams p = main_term_params(f);
    CHECK(p.gamma.sign() > 0);
    CHECK(p.lambda.sign() > 0);
    CHECK(p.stride == (needs_parity_split(f) ? 2 : 1));
    stride2 += p.stride == 2;
  }
  CHECK(stride2 == 2);
}

TEST_CASE("consistency for all families, and a perturbed lambda fails") {
  for (const auto& f : FamilyCode::all()) {
    CAPTURE(f.label());
    const ConsistencyResult r = ingham_consistency(f);
    CHECK(r.pass);
    CHECK(r.grid.back() == 1'000'000);
    for (long n : r.grid) CHECK(n % 2 == 0);
  }
  const FamilyCode f = FamilyCode::parse("eu^od");
  AsymptoticParams p = main_term_params(f);
  p.lambda = p.lambda * Real("1.0000000001", kDefaultBits);
  CHECK_FALSE(ingham_consistency(f, p).pass);
  AsymptoticParams s = main_term_params(f);
  s.stride = 1;
  CHECK_FALSE(ingham_consistency(f, s).pass);
}

TEST_CASE("ratio report") {
  const FamilyCode f = FamilyCode::parse("eu^ou");
  const SeriesQ s = build_primary(f, 1001);
  const auto rows = ratio_report(f, s, {250, 500, 1000});
  REQUIRE(rows.size() == 3);
  for (const auto& r : rows) {
    CHECK(r.ratio.sign() > 0);
    CHECK(r.exact == s[r.n]);
  }
  CHECK(deviations_strictly_decrease(rows));
  CHECK_THROWS_AS(ratio_report(f, s, {1001}), OrderExceeded);
}

TEST_CASE("hypothesis guard") {
  const FamilyCode f = FamilyCode::parse("eu^ou");
  // Not weakly increasing.
  const SeriesQ bad = SeriesQ::from_ints(std::vector<long>{1, 5, 2, 7, 9, 11});
  CHECK_THROWS_AS(ratio_report(f, bad, {4}), HypothesisViolation);
  // Stride-2 families only need each half to increase.
  const FamilyCode g = FamilyCode::parse("eu^od");
  const SeriesQ s = build_primary(g, 301);
  CHECK_NOTHROW(ratio_report(g, s, {300}));
  CHECK_THROWS_AS(ratio_report(f, s, {300}), HypothesisViolation);
}
