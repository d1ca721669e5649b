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

#include "paritysep/partition.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace paritysep {

namespace {

char parity_char(Parity p) { return p == Parity::even ? 'e' : 'o'; }
char restriction_char(Restriction r) {
  return r == Restriction::distinct ? 'd' : 'u';
}

PartClass parse_class(std::string_view s) {
  if (s.size() != 2) {
    throw std::invalid_argument("part class must be two letters, got '" +
                                std::string(s) + "'");
  }
  PartClass c{};
  switch (s[0]) {
    case 'e': c.parity = Parity::even; break;
    case 'o': c.parity = Parity::odd; break;
    default: throw std::invalid_argument("parity letter must be e or o");
  }
  switch (s[1]) {
    case 'u': c.restriction = Restriction::unrestricted; break;
    case 'd': c.restriction = Restriction::distinct; break;
    default: throw std::invalid_argument("restriction letter must be u or d");
  }
  return c;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

}  // namespace

FamilyCode::FamilyCode(PartClass upper, PartClass lower) : upper_(upper), lower_(lower) {
  if (upper.parity == lower.parity) {
    throw std::invalid_argument("upper and lower classes need opposite parity");
  }
}

std::string FamilyCode::label() const {
  return {parity_char(lower_.parity), restriction_char(lower_.restriction), '^',
          parity_char(upper_.parity), restriction_char(upper_.restriction)};
}

FamilyCode FamilyCode::parse(std::string_view text) {
  text = trim(text);
  if (auto pos = text.find('^'); pos != std::string_view::npos) {
    return {parse_class(trim(text.substr(pos + 1))), parse_class(trim(text.substr(0, pos)))};
  }
  if (auto pos = text.find('/'); pos != std::string_view::npos) {
    return {parse_class(trim(text.substr(0, pos))), parse_class(trim(text.substr(pos + 1)))};
  }
  if (auto pos = text.find(','); pos != std::string_view::npos) {
    std::string_view sup, sub;
    for (auto field : {text.substr(0, pos), text.substr(pos + 1)}) {
      field = trim(field);
      if (field.starts_with("sup=")) {
        sup = field.substr(4);
      } else if (field.starts_with("sub=")) {
        sub = field.substr(4);
      }
    }
    if (!sup.empty() && !sub.empty()) return {parse_class(trim(sup)), parse_class(trim(sub))};
  }
  throw std::invalid_argument("unrecognised family '" + std::string(text) +
                              "' (use sub^sup, sup/sub or sup=..,sub=..)");
}

const std::array<FamilyCode, 8>& FamilyCode::all() {
  static const std::array<FamilyCode, 8> families = [] {
    auto f = [](std::string_view s) { return FamilyCode::parse(s); };
    return std::array<FamilyCode, 8>{f("eu^ou"), f("eu^od"), f("od^eu"), f("ed^ou"),
                                     f("ed^od"), f("ou^eu"), f("ou^ed"), f("od^ed")};
  }();
  return families;
}

int FamilyCode::index() const {
  // upper determines lower's parity, so four bits of choice collapse to three
  static constexpr int kPosition[8] = {5, 2, 6, 7, 0, 3, 1, 4};
  const int code = (upper_.parity == Parity::odd ? 4 : 0) +
                   (upper_.restriction == Restriction::distinct ? 2 : 0) +
                   (lower_.restriction == Restriction::distinct ? 1 : 0);
  return kPosition[code];
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p <= 0) throw std::invalid_argument("partition parts must be positive");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

int Partition::sum() const {
  int s = 0;
  for (int p : parts_) s += p;
  return s;
}

bool Partition::contains(int part) const { return multiplicity(part) > 0; }

int Partition::multiplicity(int part) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
}

Partition Partition::with(int part) const {
  auto parts = parts_;
  parts.push_back(part);
  return Partition(std::move(parts));
}

Partition Partition::without(int part) const {
  auto parts = parts_;
  auto it = std::find(parts.begin(), parts.end(), part);
  if (it == parts.end()) {
    throw std::invalid_argument("part " + std::to_string(part) + " not in " + to_string());
  }
  parts.erase(it);
  return Partition(std::move(parts));
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

bool belongs_to(const FamilyCode& family, const Partition& partition) {
  int max_lower = 0;
  int min_upper = 0;
  int previous_upper = 0;
  int previous_lower = 0;
  for (int p : partition.parts()) {
    const bool upper = family.upper().contains(p);
    const PartClass& cls = upper ? family.upper() : family.lower();
    int& previous = upper ? previous_upper : previous_lower;
    if (cls.restriction == Restriction::distinct && previous == p) return false;
    previous = p;
    if (upper) {
      min_upper = p;  // parts are decreasing
    } else if (max_lower == 0) {
      max_lower = p;
    }
  }
  return max_lower == 0 || min_upper == 0 || max_lower < min_upper;
}

std::vector<Partition> enumerate(const FamilyCode& family, int n) {
  if (n < 0) throw std::invalid_argument("enumerate needs n >= 0");
  std::vector<Partition> out;
  std::vector<int> parts;
  // Parts are chosen in weakly decreasing order. Once a lower-class part is
  // placed no upper-class part may follow, and a distinct class forbids
  // repeating its previous part.
  std::function<void(int, int, bool)> descend = [&](int remaining, int max_part,
                                                    bool lower_started) {
    if (remaining == 0) {
      out.emplace_back(parts);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      const bool upper = family.upper().contains(p);
      if (upper && lower_started) continue;
      const PartClass& cls = upper ? family.upper() : family.lower();
      if (cls.restriction == Restriction::distinct && !parts.empty() && parts.back() == p) {
        continue;
      }
      parts.push_back(p);
      descend(remaining - p, p, lower_started || !upper);
      parts.pop_back();
    }
  };
  descend(n, n, false);
  return out;
}

std::uint64_t count(const FamilyCode& family, int n) { return enumerate(family, n).size(); }

}  // namespace paritysep
