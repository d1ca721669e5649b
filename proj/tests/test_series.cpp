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

#include <random>

#include "doctest.h"
#include "paritysep/series.hpp"

using namespace paritysep;

namespace {

SeriesQ random_sparse(std::mt19937_64& rng, std::size_t order, bool unit_constant) {
  std::vector<BigInt> c(order);
  std::uniform_int_distribution<int> coin(0, 3);
  std::uniform_int_distribution<long> value(-50, 50);
  for (auto& x : c) {
    if (coin(rng) == 0) x = value(rng);
  }
  if (unit_constant) c[0] = coin(rng) % 2 ? 1 : -1;
  return SeriesQ(std::move(c));
}

SeriesQ naive_product(const SeriesQ& a, const SeriesQ& b) {
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<BigInt> c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; i + j < n; ++j) c[i + j] += a[i] * b[j];
  }
  return SeriesQ(std::move(c));
}

}  // namespace

TEST_CASE("ring laws on random sparse series") {
  std::mt19937_64 rng(20261018);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t order = 1 + trial * 3;
    const SeriesQ a = random_sparse(rng, order, false);
    const SeriesQ b = random_sparse(rng, order, false);
    const SeriesQ c = random_sparse(rng, order, false);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b - b == a);
    CHECK(a * b == naive_product(a, b));
    CHECK(a * SeriesQ::one(order) == a);
    CHECK(-(-a) == a);
  }
}

TEST_CASE("inverse and binomial division") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t order = 2 + trial * 4;
    const SeriesQ u = random_sparse(rng, order, true);
    CHECK(u * inverse(u) == SeriesQ::one(order));
    const SeriesQ a = random_sparse(rng, order, false);
    for (std::size_t e = 1; e < 5; ++e) {
      for (int sign : {1, -1}) {
        SeriesQ binomial = SeriesQ::one(order);
        if (e < order) binomial -= BigInt(sign) * SeriesQ::monomial(e, order);
        CHECK(divide_by_binomial(a, sign, e) * binomial == a);
      }
    }
  }
}

TEST_CASE("truncated overlap semantics") {
  const SeriesQ a = SeriesQ::from_ints(std::vector<long>{1, 2, 3, 4});
  const SeriesQ b = SeriesQ::from_ints(std::vector<long>{1, 2});
  CHECK((a + b).order() == 2);
  CHECK(a.agrees_with(b.truncated(2)));
  CHECK_FALSE(a.first_mismatch(SeriesQ::from_ints(std::vector<long>{1, 2, 9})) == std::nullopt);
  CHECK(*a.first_mismatch(SeriesQ::from_ints(std::vector<long>{1, 2, 9})) == 2);
}

TEST_CASE("error cases") {
  const SeriesQ a = SeriesQ::from_ints(std::vector<long>{2, 1});
  CHECK_THROWS_AS(inverse(a), NonUnitConstantTerm);
  CHECK_THROWS_AS(a.at(2), OrderExceeded);
  CHECK_THROWS_AS(exact_divide(a, 2), IdentityMismatch);
  CHECK(exact_divide(SeriesQ::from_ints(std::vector<long>{4, -6}), 2) ==
        SeriesQ::from_ints(std::vector<long>{2, -3}));
}

TEST_CASE("substitutions and parity splits") {
  std::mt19937_64 rng(11);
  const SeriesQ a = random_sparse(rng, 41, false);
  CHECK(negate_q(negate_q(a)) == a);
  CHECK(interleave(subsequence(a, 2, 0), subsequence(a, 2, 1)).truncated(41) == a);
  const SeriesQ sq = substitute_power(a, 3, 60);
  CHECK(subsequence(sq, 3, 0) == a.truncated(20));
  CHECK(sgn(sq[4]) == 0);
  CHECK(shift(a, 5)[5] == a[0]);
  CHECK(shift(a, 5).order() == a.order());
}

TEST_CASE("pentagonal number theorem") {
  const std::size_t order = 300;
  CHECK(pentagonal_signed(order) == pochhammer(PochSpec::infinite(1, 1), order));
  CHECK(inverse_pochhammer(PochSpec::infinite(1, 1), order) *
            pochhammer(PochSpec::infinite(1, 1), order) ==
        SeriesQ::one(order));
}

TEST_CASE("finite pochhammer") {
  // (q;q)_2 = (1 - q)(1 - q^2) = 1 - q - q^2 + q^3
  const SeriesQ p = pochhammer({1, 1, 1, 2}, 6);
  CHECK(p == SeriesQ::from_ints(std::vector<long>{1, -1, -1, 1, 0, 0}));
  // (-q;q^2)_2 = (1 + q)(1 + q^3)
  CHECK(pochhammer({-1, 1, 2, 2}, 5) == SeriesQ::from_ints(std::vector<long>{1, 1, 0, 1, 1}));
}

TEST_CASE("theta series") {
  const SeriesQ one_sided = theta_gap(1, 0, ThetaRange::one_sided, 17);
  const SeriesQ two_sided = theta_gap(1, 0, ThetaRange::two_sided, 17);
  for (std::size_t n = 0; n < 17; ++n) {
    const bool square = n == 0 || n == 1 || n == 4 || n == 9 || n == 16;
    CHECK(one_sided[n] == (square ? 1 : 0));
    CHECK(two_sided[n] == (n == 0 ? 1 : square ? 2 : 0));
  }
}

TEST_CASE("mock theta f in its three forms") {
  const std::size_t order = 200;
  const SeriesQ f = mock_f(order);
  CHECK(f.truncated(8) == SeriesQ::from_ints(std::vector<long>{1, 1, -2, 3, -3, 3, -5, 7}));
  CHECK(f == mock_f_appell(order));
  CHECK(f == mock_f_appell_shifted(order));
}

TEST_CASE("sigma and phi against Hecke double sums") {
  const std::size_t order = 300;
  const SeriesQ sigma = sigma_series(order);
  CHECK(sigma.truncated(8) == SeriesQ::from_ints(std::vector<long>{1, 1, -1, 2, -2, 1, 0, 1}));
  CHECK(sigma == hecke_sigma(order));
  const SeriesQ phi = phi_series(order);
  const SeriesQ split = substitute_power(hecke_phi0(order / 2), 2, order) +
                        shift(substitute_power(hecke_phi1(order / 2), 2, order), 1);
  CHECK(phi == split);
}

TEST_CASE("monotone helper") {
  CHECK(is_weakly_increasing(SeriesQ::from_ints(std::vector<long>{1, 1, 2, 5})));
  CHECK_FALSE(is_weakly_increasing(SeriesQ::from_ints(std::vector<long>{1, 3, 2})));
}
