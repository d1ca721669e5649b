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

#include <map>

#include "doctest.h"
#include "paritysep/genfun.hpp"

using namespace paritysep;

namespace {

const std::map<std::string, std::vector<long>>& displayed_tables() {
  static const std::map<std::string, std::vector<long>> tables = {
      {"eu^ou", {1, 1, 2, 2, 4, 4, 7, 7, 12, 12, 19, 19, 30, 30, 45, 45, 67, 67, 97}},
      {"eu^od", {1, 1, 1, 1, 3, 2, 4, 3, 7, 6, 10, 8, 16, 13, 22, 18, 34, 27, 46}},
      {"od^eu", {1, 1, 1, 2, 3, 3, 4, 5, 8, 8, 10, 12, 17, 17, 22, 26, 34, 35, 44}},
      {"ed^ou", {1, 1, 2, 2, 3, 4, 6, 6, 9, 10, 14, 16, 21, 23, 31, 34, 44, 49, 62}},
      {"ed^od", {1, 1, 1, 1, 2, 2, 3, 2, 4, 4, 6, 5, 8, 7, 10, 9, 14, 13, 18}},
      {"ou^eu", {1, 1, 2, 3, 5, 6, 10, 12, 18, 21, 31, 36, 51, 58, 80, 92, 124, 140, 186}},
      {"ou^ed", {1, 1, 2, 3, 4, 5, 8, 10, 13, 16, 22, 26, 34, 41, 52, 62, 78, 91, 113}},
      {"od^ed", {1, 1, 1, 2, 2, 2, 3, 4, 5, 5, 6, 7, 9, 10, 12, 14, 16, 17, 20}},
  };
  return tables;
}

}  // namespace

TEST_CASE("displayed expansions through q^18") {
  for (const auto& [label, coeffs] : displayed_tables()) {
    CAPTURE(label);
    REQUIRE(coeffs.size() == 19);
    CHECK(build_primary(FamilyCode::parse(label), 19) == SeriesQ::from_ints(coeffs));
  }
}

TEST_CASE("every alternate representation agrees") {
  for (const auto& f : FamilyCode::all()) {
    CAPTURE(f.label());
    const FamilySeries fs = build(f, 300);
    CHECK_FALSE(fs.alternates.empty());
    CHECK(fs.order() == 300);
  }
}

TEST_CASE("identity suite") {
  const auto checks = identity_suite(200);
  CHECK(checks.size() >= 20);
  for (const auto& c : checks) {
    CAPTURE(c.name);
    CAPTURE(c.detail);
    CHECK(c.pass);
    CHECK(c.order == 200);
  }
}

TEST_CASE("parity split") {
  for (const char* label : {"eu^od", "ed^od"}) {
    const FamilyCode f = FamilyCode::parse(label);
    CHECK(needs_parity_split(f));
    const auto [even, odd] = split_parity_subsequences(f, 400);
    const SeriesQ full = build_primary(f, 400);
    CHECK(interleave(even, odd).truncated(400) == full);
    CHECK(is_weakly_increasing(even));
    CHECK(is_weakly_increasing(odd));
  }
  int split = 0;
  for (const auto& f : FamilyCode::all()) split += needs_parity_split(f);
  CHECK(split == 2);
  CHECK_THROWS_AS(split_parity_subsequences(FamilyCode::parse("eu^ou"), 50),
                  std::invalid_argument);
}

TEST_CASE("monotonicity and its two counterexamples") {
  const FamilyCode eu_od = FamilyCode::parse("eu^od");
  const SeriesQ s = build_primary(eu_od, 600);
  const auto full = check_monotonicity(eu_od, s, 1);
  CHECK_FALSE(full.weakly_increasing);
  CHECK(*full.first_descent == 4);
  CHECK(s[4] == 3);
  CHECK(s[5] == 2);
  CHECK(check_monotonicity(eu_od, s, 2).weakly_increasing);

  const FamilyCode ed_od = FamilyCode::parse("ed^od");
  const SeriesQ t = build_primary(ed_od, 600);
  const auto full2 = check_monotonicity(ed_od, t, 1);
  CHECK(*full2.first_descent == 6);
  CHECK(t[6] == 3);
  CHECK(t[7] == 2);
  CHECK(check_monotonicity(ed_od, t, 2).weakly_increasing);

  for (const auto& f : FamilyCode::all()) {
    if (needs_parity_split(f)) continue;
    CAPTURE(f.label());
    CHECK(check_monotonicity(f, build_primary(f, 600), 1).weakly_increasing);
  }
  CHECK_THROWS_AS(check_monotonicity(eu_od, s, 3), std::invalid_argument);
}

TEST_CASE("chain scan threshold logic") {
  const auto& all = FamilyCode::all();
  std::array<FamilyCode, 8> chain = all;
  std::map<FamilyCode, SeriesQ> series;
  // Strictly increasing along the chain from n = 3 on.
  for (int i = 0; i < 8; ++i) {
    std::vector<long> c(10);
    for (int n = 0; n < 10; ++n) c[n] = n < 3 ? 1 : 10 * n + i;
    series.emplace(all[i], SeriesQ::from_ints(c));
  }
  const ChainResult r = scan_inequality_chain(chain, series);
  REQUIRE(r.threshold);
  CHECK(*r.threshold == 3);
  CHECK(r.upper == 10);
  CHECK(*r.last_failure[0] == 2);

  std::swap(chain[0], chain[1]);
  const ChainResult broken = scan_inequality_chain(chain, series);
  CHECK_FALSE(broken.threshold);
  CHECK(*broken.last_failure[0] == 9);
}

TEST_CASE("claimed chain against exact coefficients") {
  std::map<FamilyCode, SeriesQ> series;
  for (const auto& f : FamilyCode::all()) series.emplace(f, build_primary(f, 801));
  const ChainResult claimed = scan_inequality_chain(claimed_inequality_chain(), series);
  // ed^ou exceeds eu^od at every large n, so the claimed order never settles.
  CHECK_FALSE(claimed.threshold);
  CHECK(*claimed.last_failure[3] == 800);

  auto corrected = claimed_inequality_chain();
  std::swap(corrected[3], corrected[4]);
  const ChainResult fixed = scan_inequality_chain(corrected, series);
  REQUIRE(fixed.threshold);
  CHECK(*fixed.threshold <= 200);
}
