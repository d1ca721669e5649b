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

#ifndef PARITYSEP_PARTITION_HPP
#define PARITYSEP_PARTITION_HPP

#include <array>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace paritysep {

enum class Parity { even, odd };
enum class Restriction { unrestricted, distinct };

struct PartClass {
  Parity parity;
  Restriction restriction;

  bool operator==(const PartClass&) const = default;
  bool contains(int part) const { return (part % 2 == 0) == (parity == Parity::even); }
};

/// One of the eight families p_{lower}^{upper}: parts of the lower class all
/// lie strictly below parts of the upper class.
class FamilyCode {
 public:
  FamilyCode(PartClass upper, PartClass lower);

  const PartClass& upper() const { return upper_; }
  const PartClass& lower() const { return lower_; }

  /// "eu^od" for p_eu^od: subscript first, then superscript.
  std::string label() const;

  /// Accepts "eu^od" (sub^sup), "od/eu" (sup/sub) and "sup=od,sub=eu".
  static FamilyCode parse(std::string_view text);

  /// The eight families in canonical table order.
  static const std::array<FamilyCode, 8>& all();

  bool operator==(const FamilyCode&) const = default;
  auto operator<=>(const FamilyCode& other) const { return index() <=> other.index(); }

  /// Position in all().
  int index() const;

 private:
  PartClass upper_;
  PartClass lower_;
};

/// Weakly decreasing list of positive parts.
class Partition {
 public:
  Partition() = default;
  /// Sorts the parts; throws std::invalid_argument on non-positive parts.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int sum() const;
  int largest() const { return parts_.empty() ? 0 : parts_.front(); }
  bool contains(int part) const;
  int multiplicity(int part) const;

  /// Adds one copy of `part`.
  Partition with(int part) const;
  /// Removes one copy of `part`; throws std::invalid_argument if absent.
  Partition without(int part) const;

  std::string to_string() const;

  bool operator==(const Partition&) const = default;
  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

/// Constraint checker: distinctness per class and max(lower) < min(upper).
bool belongs_to(const FamilyCode& family, const Partition& partition);

/// Every partition of n in the family, each exactly once.
std::vector<Partition> enumerate(const FamilyCode& family, int n);

std::uint64_t count(const FamilyCode& family, int n);

}  // namespace paritysep

#endif  // PARITYSEP_PARTITION_HPP
