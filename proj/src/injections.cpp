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

#include "paritysep/injections.hpp"

#include <map>
#include <tuple>

namespace paritysep {

std::string InjectionSpec::label() const {
  switch (name) {
    case InjectionName::step2: return "step2";
    case InjectionName::add_one: return "add-one";
    case InjectionName::bump_largest_even: return "bump-largest-even";
    case InjectionName::one_or_grow: return "one-or-grow";
  }
  return "?";
}

const std::vector<InjectionSpec>& injection_catalog() {
  static const std::vector<InjectionSpec> catalog = [] {
    auto f = [](const char* s) { return FamilyCode::parse(s); };
    std::vector<FamilyCode> all(FamilyCode::all().begin(), FamilyCode::all().end());
    return std::vector<InjectionSpec>{
        {InjectionName::step2, all, 2, 0},
        {InjectionName::add_one, {f("ou^eu"), f("ou^ed")}, 1, 0},
        {InjectionName::bump_largest_even, {f("ed^ou"), f("eu^ou")}, 1, 0},
        {InjectionName::one_or_grow, {f("od^eu"), f("od^ed")}, 1, 2},
    };
  }();
  return catalog;
}

const InjectionSpec& injection_spec(InjectionName name) {
  for (const auto& spec : injection_catalog()) {
    if (spec.name == name) return spec;
  }
  throw std::invalid_argument("unknown injection");
}

Partition apply_step2(const Partition& p) {
  if (p.empty()) return Partition{2};
  return p.without(p.largest()).with(p.largest() + 2);
}

Partition apply_phi1(const Partition& p) { return p.with(1); }

Partition apply_phi2(const Partition& p) {
  for (int part : p.parts()) {
    if (part % 2 == 0) return p.without(part).with(part + 1);
  }
  return p.with(1);
}

Partition apply_phi3(const Partition& p) {
  if (p.sum() < 2) {
    throw PreconditionViolation("one-or-grow is defined for n >= 2, got " + p.to_string());
  }
  if (!p.contains(1)) return p.with(1);
  const int largest = p.largest();
  return p.without(1).without(largest).with(largest + 2);
}

Partition apply(InjectionName name, const Partition& p) {
  switch (name) {
    case InjectionName::step2: return apply_step2(p);
    case InjectionName::add_one: return apply_phi1(p);
    case InjectionName::bump_largest_even: return apply_phi2(p);
    case InjectionName::one_or_grow: return apply_phi3(p);
  }
  throw std::invalid_argument("unknown injection");
}

InjectionReport verify_injection(const std::string& name, const PartitionMap& map,
                                 const FamilyCode& family, int n, int shift,
                                 std::size_t max_witnesses) {
  InjectionReport r{name, family, n, shift, 0, true, true, {}, {}};
  const auto domain = enumerate(family, n);
  r.domain_size = domain.size();
  std::map<Partition, Partition> preimage;
  for (const auto& source : domain) {
    Partition image = map(source);
    if (image.sum() != n + shift || !belongs_to(family, image)) {
      r.well_defined = false;
      if (r.outside.size() < max_witnesses) r.outside.emplace_back(source, image);
    }
    auto [it, inserted] = preimage.emplace(image, source);
    if (!inserted) {
      r.injective = false;
      if (r.collisions.size() < max_witnesses) r.collisions.emplace_back(it->second, source, image);
    }
  }
  return r;
}

InjectionReport verify_injection(const InjectionSpec& spec, const FamilyCode& family, int n) {
  if (n < spec.min_n) {
    throw PreconditionViolation(spec.label() + " needs n >= " + std::to_string(spec.min_n));
  }
  const InjectionName name = spec.name;
  return verify_injection(
      spec.label(), [name](const Partition& p) { return apply(name, p); }, family, n,
      spec.shift);
}

}  // namespace paritysep
