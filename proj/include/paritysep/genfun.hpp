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

#ifndef PARITYSEP_GENFUN_HPP
#define PARITYSEP_GENFUN_HPP

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "paritysep/partition.hpp"
#include "paritysep/series.hpp"

namespace paritysep {

/// Generating function of one family together with every alternative
/// representation that was built for it.
struct FamilySeries {
  FamilyCode family;
  SeriesQ primary;
  std::vector<std::pair<std::string, SeriesQ>> alternates;

  /// p(n) exactly; throws OrderExceeded past the built order.
  const BigInt& coefficient(std::size_t n) const { return primary.at(n); }
  std::size_t order() const { return primary.order(); }
};

/// The identity each family's primary form is built from.
SeriesQ build_primary(const FamilyCode& family, std::size_t order);

/// Primary form plus alternates; every alternate is compared against the
/// primary and IdentityMismatch is thrown on the first disagreement.
FamilySeries build(const FamilyCode& family, std::size_t order);

/// True for eu^od and ed^od, whose coefficients only increase along each
/// residue class mod 2.
bool needs_parity_split(const FamilyCode& family);

/// (sum p(2n) q^n, sum p(2n+1) q^n) for eu^od and ed^od. Also rebuilds both
/// halves from their closed forms and throws IdentityMismatch on
/// disagreement. Any other family is rejected with std::invalid_argument.
std::pair<SeriesQ, SeriesQ> split_parity_subsequences(const FamilyCode& family,
                                                      std::size_t order);

struct MonotonicityResult {
  FamilyCode family;
  std::size_t stride;  // 1 or 2
  bool weakly_increasing;
  /// First n with p(n) > p(n + stride), when there is one.
  std::optional<std::size_t> first_descent;
};

/// Checks p(n) <= p(n + stride) up to the series order.
MonotonicityResult check_monotonicity(const FamilyCode& family, const SeriesQ& series,
                                      std::size_t stride);

/// Ordering claimed for large n, smallest first.
std::array<FamilyCode, 8> claimed_inequality_chain();

struct ChainResult {
  std::array<FamilyCode, 8> chain;
  std::size_t upper;  // scanned n < upper
  /// Smallest N0 with the strict chain holding on [N0, upper); empty when it
  /// fails at upper - 1.
  std::optional<std::size_t> threshold;
  /// For each adjacent pair (i, i+1), the largest n where the pair fails.
  std::vector<std::optional<std::size_t>> last_failure;
};

ChainResult scan_inequality_chain(const std::array<FamilyCode, 8>& chain,
                                  const std::map<FamilyCode, SeriesQ>& series);

struct IdentityCheck {
  std::string name;
  std::size_t order;
  bool pass;
  /// Where the two sides first differ, or the mismatch message.
  std::string detail;
};

/// Every exact identity the catalog relies on, each compared to `order`:
/// sigma against its Hecke form, phi split by parity, the pentagonal theorem,
/// the (q;-q)_inf rewrites, (-q^2;q^2)(q^2;q^2) = (q^4;q^4), f in Appell
/// form, the parity-class closed forms, and each family's alternates.
std::vector<IdentityCheck> identity_suite(std::size_t order);

}  // namespace paritysep

#endif  // PARITYSEP_GENFUN_HPP
