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

#ifndef PARITYSEP_ASYMPTOTIC_HPP
#define PARITYSEP_ASYMPTOTIC_HPP

#include <stdexcept>
#include <vector>

#include "paritysep/genfun.hpp"
#include "paritysep/mp.hpp"
#include "paritysep/partition.hpp"

namespace paritysep {

/// The coefficient sequence fed to the Tauberian step is not weakly
/// increasing, so the main term has no justification there.
class HypothesisViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// B(e^{-t}) ~ lambda t^beta e^{gamma/t}. With stride 2 the parameters
/// describe the subsequences p(2n) and p(2n+1), indexed by n.
struct AsymptoticParams {
  Real lambda;
  Real beta;
  Real gamma;
  int stride = 1;
};

AsymptoticParams main_term_params(const FamilyCode& family, Bits bits = kDefaultBits);

/// lambda gamma^{beta/2+1/4} / (2 sqrt(pi) m^{beta/2+3/4}) e^{2 sqrt(gamma m)}
Real ingham_term(const AsymptoticParams& p, const Real& m);

/// The closed-form main term of p(n) for the family.
Real main_term(const FamilyCode& family, long n, Bits bits = kDefaultBits);

struct ConsistencyResult {
  FamilyCode family;
  std::vector<long> grid;
  Real max_relative_error;
  bool pass = false;
};

/// Even n from 2 to 10^6 used by ingham_consistency.
std::vector<long> consistency_grid();

/// Compares ingham_term(params, n / stride) with main_term(family, n) on the
/// grid; passes when every relative error is below 1e-20.
ConsistencyResult ingham_consistency(const FamilyCode& family, const AsymptoticParams& params,
                                     Bits bits = kDefaultBits);
ConsistencyResult ingham_consistency(const FamilyCode& family, Bits bits = kDefaultBits);

struct RatioRow {
  long n;
  BigInt exact;
  Real main;
  Real ratio;
  Real deviation;  // |ratio - 1|
};

/// Exact coefficient against the main term at each n. Before any row is
/// produced, the monotonicity hypothesis is checked on the sequence the main
/// term comes from (whole sequence, or both stride-2 halves) up to max(n).
std::vector<RatioRow> ratio_report(const FamilyCode& family, const SeriesQ& series,
                                   const std::vector<long>& n_list, Bits bits = kDefaultBits);

/// True when the deviations strictly decrease along the rows.
bool deviations_strictly_decrease(const std::vector<RatioRow>& rows);

}  // namespace paritysep

#endif  // PARITYSEP_ASYMPTOTIC_HPP
