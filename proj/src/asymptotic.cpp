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

#include "paritysep/asymptotic.hpp"

#include <algorithm>
#include <string>

namespace paritysep {
namespace {

Real r(long v, Bits bits) { return Real(v, bits); }
Real frac(long num, long den, Bits bits) { return Real(mpq_class(num, den), bits); }

}  // namespace

AsymptoticParams main_term_params(const FamilyCode& family, Bits bits) {
  const Real pi = Real::pi(bits);
  const Real pi2 = pi * pi;
  const Real sqrt2 = sqrt(r(2, bits));
  const Real one = r(1, bits);
  const Real g12 = pi2 / r(12, bits);
  const std::string label = family.label();
  if (label == "eu^ou") return {one / sqrt(pi), frac(-1, 2, bits), g12, 1};
  if (label == "eu^od") return {frac(1, 4, bits), r(0, bits), pi2 / r(6, bits), 2};
  if (label == "od^eu") return {r(2, bits) / sqrt(pi), frac(1, 2, bits), g12, 1};
  if (label == "ed^ou") return {one / sqrt2, r(0, bits), g12, 1};
  if (label == "ed^od") return {one - one / sqrt2, r(-1, bits), g12, 2};
  if (label == "ou^eu") return {one / sqrt2, r(-1, bits), g12, 1};
  if (label == "ou^ed") return {sqrt(pi / r(2, bits)) / r(2, bits), frac(-1, 2, bits), g12, 1};
  return {sqrt2 - one, r(-1, bits), pi2 / r(24, bits), 1};
}

Real ingham_term(const AsymptoticParams& p, const Real& m) {
  const Bits bits = std::max({p.lambda.precision(), p.gamma.precision(), m.precision()});
  const Real quarter = frac(1, 4, bits), half = frac(1, 2, bits);
  const Real e1 = p.beta * half + quarter;
  const Real e2 = p.beta * half + frac(3, 4, bits);
  return p.lambda * pow(p.gamma, e1) / (r(2, bits) * sqrt(Real::pi(bits)) * pow(m, e2)) *
         exp(r(2, bits) * sqrt(p.gamma * m));
}

Real main_term(const FamilyCode& family, long n, Bits bits) {
  if (n < 1) throw std::invalid_argument("main term needs n >= 1");
  const Real pi = Real::pi(bits);
  const Real x = r(n, bits);
  const Real one = r(1, bits);
  const Real sqrt2 = sqrt(r(2, bits));
  const Real q3 = pow(r(3, bits), frac(1, 4, bits));  // 3^{1/4}
  const Real e3 = exp(pi * sqrt(x / r(3, bits)));
  const Real e6 = exp(pi * sqrt(x / r(6, bits)));
  const std::string label = family.label();
  if (label == "eu^ou") return e3 / (r(2, bits) * pi * sqrt(x));
  if (label == "eu^od") return e3 / (r(4, bits) * sqrt2 * q3 * pow(x, frac(3, 4, bits)));
  if (label == "od^eu") return e3 / (r(2, bits) * sqrt(r(3, bits)) * x);
  if (label == "ed^ou") return e3 / (r(4, bits) * q3 * pow(x, frac(3, 4, bits)));
  if (label == "ed^od") {
    return q3 * (sqrt2 - one) * e6 /
           (pow(r(2, bits), frac(3, 4, bits)) * pi * pow(x, frac(1, 4, bits)));
  }
  if (label == "ou^eu") return q3 * e3 / (r(2, bits) * pi * pow(x, frac(1, 4, bits)));
  if (label == "ou^ed") return e3 / (r(4, bits) * sqrt2 * sqrt(x));
  return q3 * (sqrt2 - one) * e6 /
         (pow(r(2, bits), frac(1, 4, bits)) * pi * pow(x, frac(1, 4, bits)));
}

std::vector<long> consistency_grid() {
  std::vector<long> grid;
  for (long decade = 1; decade <= 100'000; decade *= 10) {
    for (long k : {1L, 2L, 5L}) grid.push_back(2 * k * decade);
  }
  grid.push_back(1'000'000);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

ConsistencyResult ingham_consistency(const FamilyCode& family, const AsymptoticParams& params,
                                     Bits bits) {
  ConsistencyResult result{family, consistency_grid(), Real(0L, bits), false};
  const Real threshold("1e-20", bits);
  for (long n : result.grid) {
    const Real m = Real(n, bits) / Real(static_cast<long>(params.stride), bits);
    const Real expected = main_term(family, n, bits);
    const Real err = abs(ingham_term(params, m) / expected - Real(1L, bits));
    result.max_relative_error = max(result.max_relative_error, err);
  }
  result.pass = result.max_relative_error < threshold;
  return result;
}

ConsistencyResult ingham_consistency(const FamilyCode& family, Bits bits) {
  return ingham_consistency(family, main_term_params(family, bits), bits);
}

std::vector<RatioRow> ratio_report(const FamilyCode& family, const SeriesQ& series,
                                   const std::vector<long>& n_list, Bits bits) {
  if (n_list.empty()) return {};
  const long top = *std::max_element(n_list.begin(), n_list.end());
  if (top < 1) throw std::invalid_argument("ratio report needs n >= 1");
  if (static_cast<std::size_t>(top) >= series.order()) {
    throw OrderExceeded("n = " + std::to_string(top) + " is beyond the built order " +
                        std::to_string(series.order()));
  }
  const std::size_t stride = needs_parity_split(family) ? 2 : 1;
  const SeriesQ prefix = series.truncated(static_cast<std::size_t>(top) + 1);
  const MonotonicityResult mono = check_monotonicity(family, prefix, stride);
  if (!mono.weakly_increasing) {
    throw HypothesisViolation(family.label() + ": p(n) > p(n + " + std::to_string(stride) +
                              ") at n = " + std::to_string(*mono.first_descent));
  }
  for (std::size_t n = 0; n <= static_cast<std::size_t>(top); ++n) {
    if (sgn(prefix[n]) < 0) throw HypothesisViolation(family.label() + ": negative coefficient");
  }

  std::vector<RatioRow> rows;
  for (long n : n_list) {
    if (n < 1) throw std::invalid_argument("ratio report needs n >= 1");
    const BigInt& exact = series.at(static_cast<std::size_t>(n));
    Real main = main_term(family, n, bits);
    Real ratio = Real(exact, bits) / main;
    Real deviation = abs(ratio - Real(1L, bits));
    rows.push_back({n, exact, std::move(main), std::move(ratio), std::move(deviation)});
  }
  return rows;
}

bool deviations_strictly_decrease(const std::vector<RatioRow>& rows) {
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (!(rows[i].deviation < rows[i - 1].deviation)) return false;
  }
  return true;
}

}  // namespace paritysep
