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

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "paritysep/asymptotic.hpp"
#include "paritysep/euler_maclaurin.hpp"
#include "paritysep/genfun.hpp"
#include "paritysep/injections.hpp"
#include "paritysep/lemmas.hpp"
#include "paritysep/partition.hpp"
#include "paritysep/report.hpp"

namespace {

using namespace paritysep;

constexpr int kExitFail = 1;
constexpr int kExitError = 3;
constexpr int kMaxOracleBound = 60;

struct RunConfig {
  std::size_t order = 0;
  int bound = 40;
  Bits bits = kDefaultBits;
  std::string format = "csv";
  std::string output;
  std::vector<std::string> families;
};

std::vector<FamilyCode> selected_families(const RunConfig& cfg) {
  if (cfg.families.empty()) {
    const auto& all = FamilyCode::all();
    return {all.begin(), all.end()};
  }
  std::vector<FamilyCode> out;
  for (const auto& f : cfg.families) out.push_back(FamilyCode::parse(f));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

double degrees_to_radians(double d) { return d * std::acos(-1.0) / 180.0; }

int emit(const Report& report, const RunConfig& cfg) {
  const std::string text = render(report, parse_format(cfg.format));
  if (cfg.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(cfg.output, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + cfg.output);
    out << text;
  }
  return report.pass ? 0 : kExitFail;
}

int cmd_coeffs(const RunConfig& cfg) {
  const std::size_t count = cfg.order ? cfg.order : 19;
  std::map<FamilyCode, SeriesQ> series;
  for (const auto& f : selected_families(cfg)) series.emplace(f, build_primary(f, count));
  Report report{"coeffs", true, {}, {}};
  if (series.size() == 1) {
    report.tables.push_back(
        coefficient_table(series.begin()->first, series.begin()->second, count));
  } else {
    report.tables.push_back(family_table(series, count));
  }
  return emit(report, cfg);
}

int cmd_oracle_check(const RunConfig& cfg) {
  const std::size_t order = std::max<std::size_t>(cfg.order, cfg.bound + 1);
  Table t{"oracle", {"family", "n", "generating_function", "enumeration", "match"}, {}};
  bool pass = true;
  for (const auto& f : selected_families(cfg)) {
    const SeriesQ s = build_primary(f, order);
    for (int n = 0; n <= cfg.bound; ++n) {
      const BigInt counted(static_cast<unsigned long>(count(f, n)));
      const bool match = s.at(n) == counted;
      pass = pass && match;
      t.rows.push_back({f.label(), std::to_string(n), to_decimal(s.at(n)), to_decimal(counted),
                        yes_no(match)});
    }
  }
  Report report{"oracle-check", pass, {t}, {}};
  return emit(report, cfg);
}

int cmd_monotone(const RunConfig& cfg) {
  const std::size_t order = cfg.order ? cfg.order : 2001;
  std::vector<MonotonicityResult> results;
  bool pass = true;
  Table witnesses{"witnesses", {"family", "n", "p(n)", "p(n+1)", "descent"}, {}};
  for (const auto& f : selected_families(cfg)) {
    const SeriesQ s = build_primary(f, order);
    const std::size_t stride = needs_parity_split(f) ? 2 : 1;
    results.push_back(check_monotonicity(f, s, stride));
    pass = pass && results.back().weakly_increasing;
    if (stride == 2) {
      // The full sequence is not monotone; its first descent is the witness.
      const MonotonicityResult full = check_monotonicity(f, s, 1);
      results.push_back(full);
      if (full.first_descent) {
        const std::size_t n = *full.first_descent;
        witnesses.rows.push_back({f.label(), std::to_string(n), to_decimal(s.at(n)),
                                  to_decimal(s.at(n + 1)), yes_no(s.at(n) > s.at(n + 1))});
      } else {
        pass = false;
      }
    }
  }
  Report report{"monotone", pass, {monotonicity_table(results)}, {}};
  if (!witnesses.rows.empty()) report.tables.push_back(witnesses);
  return emit(report, cfg);
}

int cmd_injections(const RunConfig& cfg) {
  const auto families = selected_families(cfg);
  std::vector<InjectionReport> reports;
  bool pass = true;
  for (const auto& spec : injection_catalog()) {
    for (const auto& f : spec.families) {
      if (std::find(families.begin(), families.end(), f) == families.end()) continue;
      for (int n = spec.min_n; n <= cfg.bound; ++n) {
        reports.push_back(verify_injection(spec, f, n));
        pass = pass && reports.back().well_defined && reports.back().injective;
      }
    }
  }
  Report report{"injections", pass, {injection_table(reports)}, {}};
  return emit(report, cfg);
}

int cmd_asym(const RunConfig& cfg, const std::vector<long>& n_list) {
  if (n_list.empty()) throw std::invalid_argument("asym needs at least one n");
  const long top = *std::max_element(n_list.begin(), n_list.end());
  const std::size_t order = std::max<std::size_t>(cfg.order, static_cast<std::size_t>(top) + 3);
  Report report{"asym", true, {}, {}};
  for (const auto& f : selected_families(cfg)) {
    const SeriesQ s = build_primary(f, order);
    std::vector<std::vector<long>> lists{n_list};
    if (needs_parity_split(f)) {
      // Both residue classes, each checked on its own.
      std::vector<long> even, odd;
      for (long n : n_list) {
        even.push_back(n % 2 == 0 ? n : n + 1);
        odd.push_back(n % 2 == 0 ? n + 1 : n);
      }
      lists = {even, odd};
    }
    Table combined{"ratios:" + f.label(), {}, {}};
    for (const auto& list : lists) {
      const auto rows = ratio_report(f, s, list, cfg.bits);
      const bool trend = deviations_strictly_decrease(rows);
      report.pass = report.pass && trend;
      Table t = ratio_table(f, rows);
      t.columns.push_back("trend_pass");
      for (auto& row : t.rows) row.push_back(yes_no(trend));
      if (combined.columns.empty()) combined.columns = t.columns;
      for (auto& row : t.rows) combined.rows.push_back(std::move(row));
    }
    report.tables.push_back(std::move(combined));
  }
  return emit(report, cfg);
}

int cmd_consistency(const RunConfig& cfg) {
  std::vector<ConsistencyResult> results;
  bool pass = true;
  for (const auto& f : selected_families(cfg)) {
    results.push_back(ingham_consistency(f, cfg.bits));
    pass = pass && results.back().pass;
  }
  Report report{"consistency", pass, {consistency_table(results)}, {}};
  return emit(report, cfg);
}

int cmd_lemmas(const RunConfig& cfg, std::vector<std::string> names,
               const std::vector<double>& angles, const std::vector<double>& radii,
               bool genfun) {
  if (names.empty()) names = lemma_names();
  EvalOptions eval;
  eval.bits = cfg.bits;
  std::vector<LemmaReport> reports;
  Json lemmas = Json::array();
  bool pass = true;
  for (double deg : angles) {
    const Ray ray = Ray::at_angle(degrees_to_radians(deg), radii, cfg.bits);
    for (const auto& name : names) {
      reports.push_back(check_lemma(name, ray, default_lemma_options(name, eval)));
      pass = pass && reports.back().trend_pass;
      lemmas.push_back(lemma_json(reports.back()));
    }
    if (genfun) {
      for (const auto& f : selected_families(cfg)) {
        LemmaCheckOptions options;
        options.eval = eval;
        GenfunCheck check = genfun_asymptotic_check(f, ray, options);
        pass = pass && check.pass;
        for (auto& part : check.parts) {
          lemmas.push_back(lemma_json(part));
          reports.push_back(std::move(part));
        }
      }
    }
  }
  Report report{"lemmas", pass, {lemma_table(reports)}, Json{{"lemmas", lemmas}}};
  return emit(report, cfg);
}

int cmd_em(const RunConfig& cfg, int dim, std::vector<int> orders, const std::vector<double>& angles,
           std::vector<double> radii, bool centred) {
  const Bits bits = cfg.bits;
  std::vector<OrderCheck> checks;
  bool pass = true;
  std::vector<Real> mags;
  if (radii.empty()) {
    radii = dim == 1 ? std::vector<double>{0.02, 0.01, 0.005}
                     : std::vector<double>{0.05, 0.025, 0.0125};
  }
  for (double r : radii) mags.emplace_back(r, bits);
  if (orders.empty()) orders = dim == 1 ? std::vector<int>{1, 2, 3} : std::vector<int>{1, 2};
  for (double deg : angles) {
    const Real alpha(degrees_to_radians(deg), bits);
    for (int N : orders) {
      if (dim == 1) {
        const GaussianProfile g = centred ? GaussianProfile(24) : GaussianProfile(1, 2);
        const std::string name = centred ? "exp(-24x^2)" : "exp(-x^2+2x)";
        const mpq_class a(5, 24);
        const double expected = centred ? effective_order(g, a, N) : N;
        checks.push_back(em_order_check_1d(g, name, a, alpha, mags, N, expected));
      } else {
        checks.push_back(em_order_check_2d(QuadraticFormProfile::sigma_form(),
                                           "exp(-24x1^2-48x1x2-8x2^2)", mpq_class(1, 24), 0,
                                           alpha, mags, N, N));
      }
      pass = pass && checks.back().pass;
    }
  }
  Report report{"em", pass, {order_check_table(checks)}, {}};

  // Shifted pentagonal aggregate: exact Bernoulli totals, then the aggregate
  // against its series on a real ray.
  const auto set = pentagonal_shift_set();
  const mpq_class eps_total = signed_shift_total(set);
  const mpq_class bern_total = signed_bernoulli_total(set);
  Table aggregate{"aggregate", {"quantity", "r", "value", "series", "deviation", "pass"}, {}};
  aggregate.rows.push_back({"sum eps(alpha)", "", eps_total.get_str(), "0", "",
                            yes_no(eps_total == 0)});
  aggregate.rows.push_back({"-sum eps(alpha) B_1(alpha)", "", bern_total.get_str(), "1", "",
                            yes_no(bern_total == 1)});
  pass = pass && eps_total == 0 && bern_total == 1;
  std::vector<Real> devs;
  for (double r : {0.1, 0.05, 0.025, 0.0125}) {
    const Complex z(Real(r, bits));
    const Complex agg = pentagonal_shift_aggregate(z);
    const Complex tail = pentagonal_tail_value(z);
    const Real dev = abs(agg - Complex(Real(1L, bits)));
    const bool routes = abs(agg - tail) <= Real("1e-25", bits) * abs(tail);
    const bool trend = devs.empty() || dev < devs.back();
    devs.push_back(dev);
    pass = pass && routes && trend;
    aggregate.rows.push_back({"aggregate", sci(Real(r, bits), 6), sci(agg.real()),
                              sci(tail.real()), sci(dev, 6), yes_no(routes && trend)});
  }
  report.tables.push_back(aggregate);
  report.pass = pass;
  return emit(report, cfg);
}

int cmd_identities(const RunConfig& cfg) {
  const std::size_t order = cfg.order ? cfg.order : 500;
  Table t{"identities", {"identity", "order", "pass", "detail"}, {}};
  bool pass = true;
  for (const auto& c : identity_suite(order)) {
    pass = pass && c.pass;
    t.rows.push_back({c.name, std::to_string(c.order), yes_no(c.pass), c.detail});
  }
  Report report{"identities", pass, {t}, {}};
  return emit(report, cfg);
}

int cmd_chain(const RunConfig& cfg, const std::vector<std::string>& custom, std::size_t max_n0) {
  const std::size_t order = cfg.order ? cfg.order : 2001;
  std::array<FamilyCode, 8> chain = claimed_inequality_chain();
  if (!custom.empty()) {
    if (custom.size() != 8) throw std::invalid_argument("--chain needs all eight families");
    for (std::size_t i = 0; i < 8; ++i) chain[i] = FamilyCode::parse(custom[i]);
  }
  std::map<FamilyCode, SeriesQ> series;
  for (const auto& f : chain) series.emplace(f, build_primary(f, order));
  const ChainResult result = scan_inequality_chain(chain, series);
  const bool pass = result.threshold && *result.threshold <= max_n0;
  Table summary{"chain_summary", {"chain", "upper", "N0", "pass"}, {}};
  std::string labels;
  for (const auto& f : chain) labels += (labels.empty() ? "" : " < ") + f.label();
  summary.rows.push_back({labels, std::to_string(result.upper - 1),
                          result.threshold ? std::to_string(*result.threshold) : "none",
                          yes_no(pass)});
  Report report{"chain", pass, {summary, chain_table(result)}, {}};
  return emit(report, cfg);
}


}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Partitions with parts separated by parity: series, oracles and asymptotics"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  cfg.bits = default_precision();
  app.add_option("--precision", cfg.bits, "Working precision in bits (env PARITYSEP_PRECISION)")
      ->check(CLI::Range(32, 1 << 16));
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--output,-o", cfg.output, "Write to a file instead of stdout");
  app.add_option("--family", cfg.families,
                 "Family as sub^sup (eu^od), sup/sub (od/eu) or sup=od,sub=eu; repeatable")
      ->delimiter(';');

  auto add_order = [&](CLI::App* sub, const std::string& help) {
    sub->add_option("--order,-N", cfg.order, help);
  };

  auto* coeffs = app.add_subcommand("coeffs", "Coefficient table");
  add_order(coeffs, "Number of coefficients (default 19)");

  auto* oracle = app.add_subcommand("oracle-check", "Generating functions against enumeration");
  oracle->add_option("--bound", cfg.bound, "Largest n enumerated (at most 60)")
      ->check(CLI::Range(0, kMaxOracleBound));
  add_order(oracle, "Series order (at least bound + 1)");

  auto* monotone = app.add_subcommand("monotone", "Monotonicity with stride-2 handling");
  add_order(monotone, "Series order (default 2001)");

  auto* injections = app.add_subcommand("injections", "Mechanized injection checks");
  int inj_bound = 30;
  injections->add_option("--bound", inj_bound, "Largest n (at most 60)")
      ->check(CLI::Range(0, kMaxOracleBound));

  auto* asym = app.add_subcommand("asym", "Exact coefficients against main terms");
  std::vector<long> n_list{500, 1000, 2000, 4000};
  asym->add_option("--n", n_list, "Indices, comma separated")->delimiter(',');
  add_order(asym, "Series order (default max n + 3)");

  auto* consistency = app.add_subcommand("consistency", "Tauberian parameters against main terms");

  auto* lemmas = app.add_subcommand("lemmas", "Lemma trend checks along rays");
  std::vector<std::string> lemma_list;
  std::vector<double> angles{0, 30, 60};
  std::vector<double> radii{0.2, 0.1, 0.05, 0.025};
  bool with_genfun = false;
  lemmas->add_option("--lemma", lemma_list, "Lemma names, comma separated")
      ->delimiter(',')
      ->check(CLI::IsMember(lemma_names()));
  lemmas->add_option("--angles", angles, "Ray angles in degrees")->delimiter(',');
  lemmas->add_option("--r", radii, "Decreasing magnitudes")->delimiter(',');
  lemmas->add_flag("--genfun", with_genfun, "Also check each generating function");

  auto* em = app.add_subcommand("em", "Euler-Maclaurin error orders");
  int dim = 1;
  std::vector<int> em_orders;
  std::vector<double> em_angles{0, 30};
  std::vector<double> em_radii;
  bool centred = false;
  em->add_option("--dim", dim, "1 or 2")->check(CLI::IsMember({1, 2}));
  em->add_option("--N", em_orders, "Expansion orders")->delimiter(',');
  em->add_option("--angles", em_angles, "Ray angles in degrees")->delimiter(',');
  em->add_option("--r", em_radii, "Decreasing magnitudes")->delimiter(',');
  em->add_flag("--centred", centred, "Use exp(-24x^2); expected slopes follow the first nonzero term");

  auto* identities = app.add_subcommand("identities", "Exact identity suite");
  add_order(identities, "Series order (default 500)");

  auto* chain = app.add_subcommand("chain", "Inequality chain scan");
  std::vector<std::string> custom_chain;
  std::size_t max_n0 = 200;
  add_order(chain, "Series order (default 2001)");
  chain->add_option("--chain", custom_chain, "Eight families, smallest first")->delimiter(',');
  chain->add_option("--max-n0", max_n0, "Largest acceptable threshold");

  CLI11_PARSE(app, argc, argv);

  if (app.got_subcommand(oracle) && cfg.order && cfg.order < static_cast<std::size_t>(cfg.bound)) {
    std::cerr << "order must be at least the oracle bound\n";
    return 2;
  }

  try {
    if (app.got_subcommand(coeffs)) return cmd_coeffs(cfg);
    if (app.got_subcommand(oracle)) return cmd_oracle_check(cfg);
    if (app.got_subcommand(monotone)) return cmd_monotone(cfg);
    if (app.got_subcommand(injections)) {
      cfg.bound = inj_bound;
      return cmd_injections(cfg);
    }
    if (app.got_subcommand(asym)) return cmd_asym(cfg, n_list);
    if (app.got_subcommand(consistency)) return cmd_consistency(cfg);
    if (app.got_subcommand(lemmas)) return cmd_lemmas(cfg, lemma_list, angles, radii, with_genfun);
    if (app.got_subcommand(em)) return cmd_em(cfg, dim, em_orders, em_angles, em_radii, centred);
    if (app.got_subcommand(identities)) return cmd_identities(cfg);
    if (app.got_subcommand(chain)) return cmd_chain(cfg, custom_chain, max_n0);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return 2;
}
