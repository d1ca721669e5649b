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

#include "paritysep/bernoulli.hpp"

#include <stdexcept>

namespace paritysep {

namespace {

mpz_class binomial(int n, int k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

std::vector<mpq_class> bernoulli_numbers(int n) {
  std::vector<mpq_class> b(static_cast<std::size_t>(n) + 1);
  b[0] = 1;
  for (int m = 1; m <= n; ++m) {
    mpq_class acc = 0;
    for (int k = 0; k < m; ++k) acc += mpq_class(binomial(m + 1, k)) * b[k];
    b[m] = -acc / (m + 1);
  }
  return b;
}

}  // namespace

mpq_class bernoulli_number(int n) {
  if (n < 0) throw std::invalid_argument("Bernoulli index must be >= 0");
  return bernoulli_numbers(n)[static_cast<std::size_t>(n)];
}

std::vector<mpq_class> bernoulli_polynomial(int n) {
  if (n < 0) throw std::invalid_argument("Bernoulli index must be >= 0");
  const auto b = bernoulli_numbers(n);
  std::vector<mpq_class> c(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) c[n - k] = mpq_class(binomial(n, k)) * b[k];
  return c;
}

mpq_class bernoulli_poly(int n, const mpq_class& x) {
  const auto c = bernoulli_polynomial(n);
  mpq_class r = 0;
  for (std::size_t k = c.size(); k-- > 0;) r = r * x + c[k];
  return r;
}

mpq_class factorial(int n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return mpq_class(r);
}

}  // namespace paritysep
