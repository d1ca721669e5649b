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

#ifndef PARITYSEP_INJECTIONS_HPP
#define PARITYSEP_INJECTIONS_HPP

#include <functional>
#include <stdexcept>
#include <tuple>
#include <optional>
#include <string>
#include <vector>

#include "paritysep/partition.hpp"

namespace paritysep {

class PreconditionViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class InjectionName { step2, add_one, bump_largest_even, one_or_grow };

struct InjectionSpec {
  InjectionName name;
  std::vector<FamilyCode> families;
  int shift;      // target is P(n + shift)
  int min_n = 0;  // smallest n the map is defined for

  std::string label() const;
};

/// The four maps with the families each one covers.
const std::vector<InjectionSpec>& injection_catalog();
const InjectionSpec& injection_spec(InjectionName name);

/// Largest part + 2; the empty partition goes to (2).
Partition apply_step2(const Partition& p);
/// Adjoin a part 1.
Partition apply_phi1(const Partition& p);
/// Largest even part e becomes e + 1; without even parts adjoin 1.
Partition apply_phi2(const Partition& p);
/// Adjoin 1 if 1 is absent, else drop one 1 and the largest part l and adjoin
/// l + 2. Throws PreconditionViolation for partitions of n < 2.
Partition apply_phi3(const Partition& p);

Partition apply(InjectionName name, const Partition& p);

struct InjectionReport {
  std::string map;
  FamilyCode family;
  int n;
  int shift;
  std::size_t domain_size = 0;
  bool well_defined = true;
  bool injective = true;
  /// (source, image) pairs whose image is outside P(n + shift).
  std::vector<std::pair<Partition, Partition>> outside;
  /// (first source, second source, shared image).
  std::vector<std::tuple<Partition, Partition, Partition>> collisions;
};

using PartitionMap = std::function<Partition(const Partition&)>;

/// Applies `map` to all of P(n) and checks the image lands in P(n + shift)
/// and that no two sources share an image. Failures come back as witnesses.
InjectionReport verify_injection(const std::string& name, const PartitionMap& map,
                                 const FamilyCode& family, int n, int shift,
                                 std::size_t max_witnesses = 4);

InjectionReport verify_injection(const InjectionSpec& spec, const FamilyCode& family, int n);

}  // namespace paritysep

#endif  // PARITYSEP_INJECTIONS_HPP
