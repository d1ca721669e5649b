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

#ifndef PARITYSEP_REPORT_HPP
#define PARITYSEP_REPORT_HPP

#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "paritysep/asymptotic.hpp"
#include "paritysep/euler_maclaurin.hpp"
#include "paritysep/genfun.hpp"
#include "paritysep/injections.hpp"
#include "paritysep/lemmas.hpp"

namespace paritysep {

using Json = nlohmann::ordered_json;

enum class Format { csv, json };

Format parse_format(const std::string& text);

/// Rows of decimal or scientific strings under a header.
struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

/// Output of one command. The JSON form is {"schema": 1, "command", "pass",
/// ...}; when `body` is set it supplies the remaining fields, otherwise each
/// table becomes an array of row objects.
struct Report {
  std::string command;
  bool pass = true;
  std::vector<Table> tables;
  Json body;
};

/// One header-led block per table; blocks after the first start with
/// "# <name>".
std::string render_csv(const Report& report);
std::string render_json(const Report& report);
std::string render(const Report& report, Format format);

// Fixed formats used everywhere, so identical runs give identical bytes.
std::string sci(const Real& x, int digits = 20);
std::string to_decimal(const BigInt& x);

Table coefficient_table(const FamilyCode& family, const SeriesQ& series, std::size_t count);
Table family_table(const std::map<FamilyCode, SeriesQ>& series, std::size_t count);

Table injection_table(const std::vector<InjectionReport>& reports);
Table monotonicity_table(const std::vector<MonotonicityResult>& results);
Table ratio_table(const FamilyCode& family, const std::vector<RatioRow>& rows);
Table consistency_table(const std::vector<ConsistencyResult>& results);
Table order_check_table(const std::vector<OrderCheck>& checks);
Table chain_table(const ChainResult& result);

Table lemma_table(const std::vector<LemmaReport>& reports);
/// {lemma, ray{alpha, delta}, rows[{r, value, predicted, ratio, deviation}], trend_pass}
Json lemma_json(const LemmaReport& report);

}  // namespace paritysep

#endif  // PARITYSEP_REPORT_HPP
