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

#include "paritysep/report.hpp"

#include <sstream>
#include <stdexcept>

namespace paritysep {
namespace {

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string fixed_double(double x, int decimals) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(decimals);
  os << x;
  return os.str();
}

Json complex_json(const Complex& z) { return Json{{"re", sci(z.real())}, {"im", sci(z.imag())}}; }

}  // namespace

Format parse_format(const std::string& text) {
  if (text == "csv") return Format::csv;
  if (text == "json") return Format::json;
  throw std::invalid_argument("unknown format: " + text);
}

std::string sci(const Real& x, int digits) { return x.to_scientific(digits); }

std::string to_decimal(const BigInt& x) { return x.get_str(10); }

std::string render_csv(const Report& report) {
  std::string out;
  bool first = true;
  for (const auto& table : report.tables) {
    if (!first) out += "# " + table.name + "\n";
    first = false;
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
      out += (i ? "," : "") + csv_field(table.columns[i]);
    }
    out += '\n';
    for (const auto& row : table.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + csv_field(row[i]);
      out += '\n';
    }
  }
  return out;
}

std::string render_json(const Report& report) {
  Json doc;
  doc["schema"] = 1;
  doc["command"] = report.command;
  doc["pass"] = report.pass;
  if (!report.body.is_null()) {
    for (const auto& [key, value] : report.body.items()) doc[key] = value;
  } else {
    Json tables = Json::object();
    for (const auto& table : report.tables) {
      Json rows = Json::array();
      for (const auto& row : table.rows) {
        Json obj;
        for (std::size_t i = 0; i < table.columns.size() && i < row.size(); ++i) {
          obj[table.columns[i]] = row[i];
        }
        rows.push_back(std::move(obj));
      }
      tables[table.name] = std::move(rows);
    }
    doc["tables"] = std::move(tables);
  }
  return doc.dump(2) + "\n";
}

std::string render(const Report& report, Format format) {
  return format == Format::csv ? render_csv(report) : render_json(report);
}

Table coefficient_table(const FamilyCode& family, const SeriesQ& series, std::size_t count) {
  Table t{"coefficients:" + family.label(), {"n", "coefficient"}, {}};
  for (std::size_t n = 0; n < count; ++n) {
    t.rows.push_back({std::to_string(n), to_decimal(series.at(n))});
  }
  return t;
}

Table family_table(const std::map<FamilyCode, SeriesQ>& series, std::size_t count) {
  Table t{"coefficients", {"n"}, {}};
  for (const auto& [family, _] : series) t.columns.push_back(family.label());
  for (std::size_t n = 0; n < count; ++n) {
    std::vector<std::string> row{std::to_string(n)};
    for (const auto& [_, s] : series) row.push_back(to_decimal(s.at(n)));
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table injection_table(const std::vector<InjectionReport>& reports) {
  Table t{"injections",
          {"map", "family", "n", "shift", "domain", "well_defined", "injective", "witnesses"},
          {}};
  for (const auto& r : reports) {
    std::string witnesses;
    for (const auto& [src, img] : r.outside) {
      witnesses += (witnesses.empty() ? "" : " ") + src.to_string() + "->" + img.to_string();
    }
    for (const auto& [a, b, img] : r.collisions) {
      witnesses += (witnesses.empty() ? "" : " ") + a.to_string() + "," + b.to_string() + "->" +
                   img.to_string();
    }
    t.rows.push_back({r.map, r.family.label(), std::to_string(r.n), std::to_string(r.shift),
                      std::to_string(r.domain_size), yes_no(r.well_defined),
                      yes_no(r.injective), witnesses});
  }
  return t;
}

Table monotonicity_table(const std::vector<MonotonicityResult>& results) {
  Table t{"monotonicity", {"family", "stride", "weakly_increasing", "first_descent"}, {}};
  for (const auto& r : results) {
    t.rows.push_back({r.family.label(), std::to_string(r.stride), yes_no(r.weakly_increasing),
                      r.first_descent ? std::to_string(*r.first_descent) : ""});
  }
  return t;
}

Table ratio_table(const FamilyCode& family, const std::vector<RatioRow>& rows) {
  Table t{"ratios:" + family.label(), {"family", "n", "exact", "main_term", "ratio", "deviation"},
          {}};
  for (const auto& r : rows) {
    t.rows.push_back({family.label(), std::to_string(r.n), to_decimal(r.exact), sci(r.main),
                      sci(r.ratio), sci(r.deviation, 6)});
  }
  return t;
}

Table consistency_table(const std::vector<ConsistencyResult>& results) {
  Table t{"consistency", {"family", "stride", "grid_points", "max_n", "max_relative_error", "pass"},
          {}};
  for (const auto& r : results) {
    t.rows.push_back({r.family.label(), std::to_string(needs_parity_split(r.family) ? 2 : 1),
                      std::to_string(r.grid.size()), std::to_string(r.grid.back()),
                      sci(r.max_relative_error, 6), yes_no(r.pass)});
  }
  return t;
}

Table order_check_table(const std::vector<OrderCheck>& checks) {
  Table t{"euler_maclaurin",
          {"profile", "dim", "N", "alpha", "r", "error", "slope", "expected", "pass"},
          {}};
  for (const auto& c : checks) {
    for (std::size_t i = 0; i < c.magnitudes.size(); ++i) {
      t.rows.push_back({c.profile, std::to_string(c.dimension), std::to_string(c.N),
                        fixed_double(c.alpha, 6), sci(c.magnitudes[i], 6), sci(c.errors[i], 6),
                        fixed_double(c.slope, 4), fixed_double(c.expected, 1), yes_no(c.pass)});
    }
  }
  return t;
}

Table chain_table(const ChainResult& result) {
  Table t{"chain", {"lower", "upper", "last_failure", "holds_from"}, {}};
  for (std::size_t i = 0; i + 1 < result.chain.size(); ++i) {
    const auto& last = result.last_failure[i];
    t.rows.push_back({result.chain[i].label(), result.chain[i + 1].label(),
                      last ? std::to_string(*last) : "",
                      std::to_string(last ? *last + 1 : 0)});
  }
  return t;
}

Table lemma_table(const std::vector<LemmaReport>& reports) {
  Table t{"lemmas",
          {"lemma", "alpha", "delta", "r", "value_re", "value_im", "predicted_re", "predicted_im",
           "ratio_re", "ratio_im", "deviation", "digits", "trend_pass"},
          {}};
  for (const auto& rep : reports) {
    for (const auto& row : rep.rows) {
      t.rows.push_back({rep.lemma, sci(rep.alpha, 10), sci(rep.delta, 10), sci(row.r, 6),
                        sci(row.value.real()), sci(row.value.imag()), sci(row.predicted.real()),
                        sci(row.predicted.imag()), sci(row.ratio.real()), sci(row.ratio.imag()),
                        sci(row.deviation, 6),
                        row.agreeing_digits ? fixed_double(*row.agreeing_digits, 2) : "",
                        yes_no(rep.trend_pass)});
    }
  }
  return t;
}

Json lemma_json(const LemmaReport& report) {
  Json rows = Json::array();
  for (const auto& row : report.rows) {
    Json r{{"r", sci(row.r, 6)},
           {"value", complex_json(row.value)},
           {"predicted", complex_json(row.predicted)},
           {"ratio", complex_json(row.ratio)},
           {"deviation", sci(row.deviation, 6)},
           {"bits", row.bits_used}};
    if (row.agreeing_digits) r["digits"] = fixed_double(*row.agreeing_digits, 2);
    rows.push_back(std::move(r));
  }
  Json out{{"lemma", report.lemma},
           {"ray", Json{{"alpha", sci(report.alpha, 10)}, {"delta", sci(report.delta, 10)}}},
           {"rows", std::move(rows)},
           {"decreasing", report.decreasing},
           {"trend_pass", report.trend_pass}};
  if (report.tolerance) out["tolerance"] = fixed_double(*report.tolerance, 12);
  return out;
}

}  // namespace paritysep
