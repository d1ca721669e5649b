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

#ifndef PARITYSEP_BERNOULLI_HPP
#define PARITYSEP_BERNOULLI_HPP

#include <gmpxx.h>

#include <vector>

namespace paritysep {

/// Bernoulli numbers with B_1 = -1/2.
mpq_class bernoulli_number(int n);

/// Coefficients c_k of B_n(x) = sum_k c_k x^k.
std::vector<mpq_class> bernoulli_polynomial(int n);

/// B_n(x), exactly.
mpq_class bernoulli_poly(int n, const mpq_class& x);

mpq_class factorial(int n);

}  // namespace paritysep

#endif  // PARITYSEP_BERNOULLI_HPP
