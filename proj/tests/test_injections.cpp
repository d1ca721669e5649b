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

#include "doctest.h"
#include "paritysep/injections.hpp"

using namespace paritysep;

namespace {

// Deliberately broken map: bump the smallest even part, or the smallest part
// when there is no even part.
Partition bump_smallest(const Partition& p) {
  const auto& parts = p.parts();
  for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
    if (*it % 2 == 0) return p.without(*it).with(*it + 1);
  }
  if (p.empty()) return Partition{1};
  return p.without(parts.back()).with(parts.back() + 1);
}

}  // namespace

TEST_CASE("maps on examples") {
  CHECK(apply_step2(Partition{}) == Partition{2});
  CHECK(apply_step2(Partition{3, 2, 2}) == Partition{5, 2, 2});
  CHECK(apply_phi1(Partition{5, 3}) == Partition{5, 3, 1});
  CHECK(apply_phi2(Partition{6, 4, 3}) == Partition{7, 4, 3});
  CHECK(apply_phi2(Partition{3, 1}) == Partition{3, 1, 1});
  CHECK(apply_phi3(Partition{4, 2}) == Partition{4, 2, 1});
  CHECK(apply_phi3(Partition{4, 2, 1}) == Partition{6, 2});
  CHECK_THROWS_AS(apply_phi3(Partition{1}), PreconditionViolation);
  CHECK_THROWS_AS(apply_phi3(Partition{}), PreconditionViolation);
}

TEST_CASE("catalog coverage") {
  const auto& catalog = injection_catalog();
  REQUIRE(catalog.size() == 4);
  CHECK(catalog[0].families.size() == 8);
  CHECK(injection_spec(InjectionName::one_or_grow).min_n == 2);
  CHECK(injection_spec(InjectionName::add_one).shift == 1);
  CHECK(injection_spec(InjectionName::step2).shift == 2);
}

TEST_CASE("every catalog injection holds for n <= 20") {
  for (const auto& spec : injection_catalog()) {
    for (const auto& f : spec.families) {
      for (int n = spec.min_n; n <= 20; ++n) {
        CAPTURE(spec.label());
        CAPTURE(f.label());
        CAPTURE(n);
        const InjectionReport r = verify_injection(spec, f, n);
        CHECK(r.well_defined);
        CHECK(r.injective);
        CHECK(r.outside.empty());
        CHECK(r.collisions.empty());
      }
    }
  }
  CHECK_THROWS_AS(verify_injection(injection_spec(InjectionName::one_or_grow),
                                   FamilyCode::parse("od^eu"), 1),
                  PreconditionViolation);
}

TEST_CASE("mutant map is caught") {
  const InjectionReport r =
      verify_injection("bump-smallest", bump_smallest, FamilyCode::parse("eu^ou"), 6, 1);
  CHECK_FALSE(r.injective);
  bool found = false;
  for (const auto& [a, b, image] : r.collisions) {
    if (image == Partition{4, 3} &&
        ((a == Partition{4, 2} && b == Partition{3, 3}) ||
         (a == Partition{3, 3} && b == Partition{4, 2}))) {
      found = true;
    }
  }
  CHECK(found);
  CHECK_FALSE(r.well_defined);
}

TEST_CASE("add-one on the wrong family leaves it") {
  // eu^ou forbids a part 1 below an even part.
  const InjectionReport r = verify_injection(
      "add-one", apply_phi1, FamilyCode::parse("eu^ou"), 4, 1);
  CHECK_FALSE(r.well_defined);
  CHECK(r.injective);
}
