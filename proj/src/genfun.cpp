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

#include "paritysep/genfun.hpp"

#include <algorithm>
#include <stdexcept>

namespace paritysep {

namespace {

SeriesQ poch(int sign, std::size_t base, std::size_t step, std::size_t order) {
  return pochhammer({sign, base, step, std::nullopt}, order);
}

SeriesQ inv_poch(int sign, std::size_t base, std::size_t step, std::size_t order) {
  return inverse_pochhammer({sign, base, step, std::nullopt}, order);
}

SeriesQ over_one_minus_q(const SeriesQ& a) { return divide_by_binomial(a, +1, 1); }
SeriesQ over_one_plus_q(const SeriesQ& a) { return divide_by_binomial(a, -1, 1); }

SeriesQ two(std::size_t order) { return BigInt(2) * SeriesQ::one(order); }

// (q;-q)_inf = (q;q^2)_inf (-q^2;q^2)_inf
SeriesQ q_minus_q_product(std::size_t order) {
  return poch(+1, 1, 2, order) * poch(-1, 2, 2, order);
}

// (q;q)_inf (q^4;q^4)_inf / (q^2;q^2)_inf^2
SeriesQ q_minus_q_eta_quotient(std::size_t order) {
  return poch(+1, 1, 1, order) * poch(+1, 4, 4, order) *
         inv_poch(+1, 2, 2, order) * inv_poch(+1, 2, 2, order);
}

// sum_{n >= 0} (1 - (-1)^n q^n) (-1)^{n(3n-1)/2} q^{n(3n-1)/2}
SeriesQ pentagonal_tail_signed(std::size_t order) {
  std::vector<BigInt> c(order);
  for (std::size_t n = 0;; ++n) {
    const std::size_t e = n * (3 * n - 1) / 2;
    if (n > 0 && e >= order) break;
    const int s = (e % 2 == 0) ? 1 : -1;
    if (e < order) c[e] += s;
    if (e + n < order) c[e + n] -= s * ((n % 2 == 0) ? 1 : -1);
  }
  return SeriesQ(std::move(c));
}

// sum_{n >= 0} (1 - q^n) q^{n(3n-1)/2}
SeriesQ pentagonal_tail(std::size_t order) {
  std::vector<BigInt> c(order);
  for (std::size_t n = 0;; ++n) {
    const std::size_t e = n * (3 * n - 1) / 2;
    if (n > 0 && e >= order) break;
    if (e < order) c[e] += 1;
    if (e + n < order) c[e + n] -= 1;
  }
  return SeriesQ(std::move(c));
}

// sum_{n >= j >= 1} (-1)^{n+j} (1 - q^{2n+1}) q^{n(3n+1)/2 - j^2}
SeriesQ bj_double_sum(std::size_t order) {
  std::vector<BigInt> c(order);
  for (std::size_t n = 1; n * (n + 1) / 2 < order; ++n) {
    for (std::size_t j = 1; j <= n; ++j) {
      const std::size_t e = n * (3 * n + 1) / 2 - j * j;
      const int s = ((n + j) % 2 == 0) ? 1 : -1;
      if (e < order) c[e] += s;
      if (e + 2 * n + 1 < order) c[e + 2 * n + 1] -= s;
    }
  }
  return SeriesQ(std::move(c));
}

SeriesQ eu_ou(std::size_t order) { return over_one_minus_q(inv_poch(+1, 2, 2, order)); }

SeriesQ eu_od(std::size_t order) {
  return theta_gap(1, 0, ThetaRange::one_sided, order) * inv_poch(+1, 2, 2, order);
}

// (1/(q^2;q^2)) (1 - sigma(-q)/2 + (-q;-q)_inf/2)
SeriesQ od_eu_from_sigma(const SeriesQ& sigma, std::size_t order) {
  SeriesQ bracket = two(order) - negate_q(sigma) + negate_q(poch(+1, 1, 1, order));
  return inv_poch(+1, 2, 2, order) * exact_divide(bracket, 2);
}

// (1/(2 (q;q^2))) ((q;-q) + 1 - pentagonal_tail_signed)
SeriesQ ed_ou_from(const SeriesQ& q_minus_q, std::size_t order) {
  SeriesQ bracket = q_minus_q + SeriesQ::one(order) - pentagonal_tail_signed(order);
  return inv_poch(+1, 1, 2, order) * exact_divide(bracket, 2);
}

SeriesQ ed_od_from(const SeriesQ& minus_q_q2, const SeriesQ& minus_q2_q2) {
  return over_one_minus_q(minus_q_q2 - shift(minus_q2_q2, 1));
}

SeriesQ ou_eu_from(const SeriesQ& inv_q_q2, std::size_t order) {
  return over_one_minus_q(inv_q_q2 - shift(inv_poch(+1, 2, 2, order), 1));
}

// ((-q^2;q^2)/2) (2 - f(-q) + 1/(q;-q))
SeriesQ ou_ed_from(const SeriesQ& f, std::size_t order) {
  SeriesQ inv_q_minus_q = inv_poch(+1, 1, 2, order) * inv_poch(-1, 2, 2, order);
  SeriesQ bracket = two(order) - negate_q(f) + inv_q_minus_q;
  return poch(-1, 2, 2, order) * exact_divide(bracket, 2);
}

SeriesQ od_ed_from(const SeriesQ& minus_q_q2, const SeriesQ& minus_q2_q2) {
  SeriesQ one_plus_q = minus_q2_q2 + shift(minus_q2_q2, 1);
  return over_one_minus_q(one_plus_q - shift(minus_q_q2, 1));
}

// (-q;q^2) = (q^2;q^2)^2 / ((q;q)(q^4;q^4))
SeriesQ minus_q_q2_eta_quotient(std::size_t order) {
  SeriesQ q2 = poch(+1, 2, 2, order);
  return q2 * q2 * inv_poch(+1, 1, 1, order) * inv_poch(+1, 4, 4, order);
}

// (-q^2;q^2) = (q^4;q^4) / (q^2;q^2)
SeriesQ minus_q2_q2_eta_quotient(std::size_t order) {
  return poch(+1, 4, 4, order) * inv_poch(+1, 2, 2, order);
}

// 2 G_ev and 2 G_od for ed^od, each term transcribed separately.
std::pair<SeriesQ, SeriesQ> ed_od_doubled_parity_parts(std::size_t order) {
  SeriesQ a = over_one_minus_q(poch(-1, 1, 2, order));
  SeriesQ b = over_one_minus_q(shift(poch(-1, 2, 2, order), 1));
  SeriesQ c = over_one_plus_q(poch(+1, 1, 2, order));
  SeriesQ d = over_one_plus_q(shift(poch(-1, 2, 2, order), 1));
  return {a - b + c + d, a - b - c - d};
}

void require_agreement(const std::string& what, const SeriesQ& expected,
                       const SeriesQ& actual) {
  if (auto n = expected.first_mismatch(actual)) {
    throw IdentityMismatch(what + ": disagreement at q^" + std::to_string(*n) + " (" +
                           expected[*n].get_str() + " vs " + actual[*n].get_str() + ")");
  }
}

void require_vanishing(const std::string& what, const SeriesQ& s, std::size_t parity) {
  for (std::size_t n = parity; n < s.order(); n += 2) {
    if (sgn(s[n]) != 0) {
      throw IdentityMismatch(what + ": nonzero coefficient at q^" + std::to_string(n));
    }
  }
}

}  // namespace

SeriesQ build_primary(const FamilyCode& family, std::size_t order) {
  if (order == 0) throw std::invalid_argument("series order must be >= 1");
  const std::string label = family.label();
  if (label == "eu^ou") return eu_ou(order);
  if (label == "eu^od") return eu_od(order);
  if (label == "od^eu") return od_eu_from_sigma(sigma_series(order), order);
  if (label == "ed^ou") return ed_ou_from(q_minus_q_product(order), order);
  if (label == "ed^od") return ed_od_from(poch(-1, 1, 2, order), poch(-1, 2, 2, order));
  if (label == "ou^eu") return ou_eu_from(inv_poch(+1, 1, 2, order), order);
  if (label == "ou^ed") return ou_ed_from(mock_f(order), order);
  return od_ed_from(poch(-1, 1, 2, order), poch(-1, 2, 2, order));
}

FamilySeries build(const FamilyCode& family, std::size_t order) {
  FamilySeries out{family, build_primary(family, order), {}};
  auto& alt = out.alternates;
  const std::string label = family.label();
  if (label == "eu^ou") {
    alt.emplace_back("product over (q;q) quotient",
                     over_one_minus_q(poch(+1, 1, 2, order) * inv_poch(+1, 1, 1, order)));
  } else if (label == "eu^od") {
    const std::size_t half_even = (order + 1) / 2;
    const std::size_t half_odd = order / 2;
    SeriesQ even = theta_gap(2, 0, ThetaRange::one_sided, half_even) *
                   inv_poch(+1, 1, 1, half_even);
    SeriesQ odd = theta_gap(2, 2, ThetaRange::one_sided, std::max<std::size_t>(half_odd, 1)) *
                  inv_poch(+1, 1, 1, std::max<std::size_t>(half_odd, 1));
    alt.emplace_back("theta quotients per parity class", interleave(even, odd).truncated(order));
    SeriesQ g_ev = theta_gap(4, 0, ThetaRange::one_sided, order) * inv_poch(+1, 2, 2, order);
    SeriesQ g_od = (theta_gap(1, 0, ThetaRange::one_sided, order) -
                    theta_gap(4, 0, ThetaRange::one_sided, order)) *
                   inv_poch(+1, 2, 2, order);
    alt.emplace_back("G_ev + G_od", g_ev + g_od);
  } else if (label == "od^eu") {
    SeriesQ bj = inv_poch(+1, 2, 2, order) * (SeriesQ::one(order) - bj_double_sum(order));
    alt.emplace_back("double sum at -q", negate_q(bj));
    alt.emplace_back("sigma via Hecke double sum", od_eu_from_sigma(hecke_sigma(order), order));
  } else if (label == "ed^ou") {
    SeriesQ bracket =
        poch(-1, 1, 1, order) + SeriesQ::one(order) - pentagonal_tail(order);
    SeriesQ at_minus_q = inv_poch(-1, 1, 2, order) * exact_divide(bracket, 2);
    alt.emplace_back("identity at -q", negate_q(at_minus_q));
    alt.emplace_back("(q;-q) as eta quotient", ed_ou_from(q_minus_q_eta_quotient(order), order));
  } else if (label == "ed^od") {
    auto [ev2, od2] = ed_od_doubled_parity_parts(order);
    alt.emplace_back("G_ev + G_od", exact_divide(ev2, 2) + exact_divide(od2, 2));
    alt.emplace_back("eta quotients",
                     ed_od_from(minus_q_q2_eta_quotient(order), minus_q2_q2_eta_quotient(order)));
  } else if (label == "ou^eu") {
    alt.emplace_back("1/(q;q^2) as eta quotient",
                     ou_eu_from(poch(+1, 2, 2, order) * inv_poch(+1, 1, 1, order), order));
  } else if (label == "ou^ed") {
    SeriesQ minus_q2 = poch(-1, 2, 2, order);
    SeriesQ doubled = minus_q2 * inv_poch(-1, 1, 1, order) +
                      minus_q2 * inv_poch(+1, 1, 1, order) * appell_sum_doubled(3, 3, order);
    alt.emplace_back("Appell identity at -q", negate_q(exact_divide(doubled, 2)));
    alt.emplace_back("f in Appell form", ou_ed_from(mock_f_appell_shifted(order), order));
  } else {
    alt.emplace_back("eta quotients",
                     od_ed_from(minus_q_q2_eta_quotient(order), minus_q2_q2_eta_quotient(order)));
  }
  for (const auto& [name, series] : alt) {
    require_agreement(label + " " + name, out.primary, series);
  }
  return out;
}

bool needs_parity_split(const FamilyCode& family) {
  return family.lower().parity == Parity::even && family.upper().parity == Parity::odd &&
         family.upper().restriction == Restriction::distinct;
}

std::pair<SeriesQ, SeriesQ> split_parity_subsequences(const FamilyCode& family,
                                                      std::size_t order) {
  if (!needs_parity_split(family)) {
    throw std::invalid_argument(family.label() +
                                " is weakly increasing; no parity split applies");
  }
  if (order < 2) throw std::invalid_argument("parity split needs order >= 2");
  const std::string label = family.label();
  SeriesQ full = build_primary(family, order);
  SeriesQ even = subsequence(full, 2, 0);
  SeriesQ odd = subsequence(full, 2, 1);
  if (label == "eu^od") {
    SeriesQ g_ev = theta_gap(4, 0, ThetaRange::one_sided, order) * inv_poch(+1, 2, 2, order);
    SeriesQ g_od = (theta_gap(1, 0, ThetaRange::one_sided, order) -
                    theta_gap(4, 0, ThetaRange::one_sided, order)) *
                   inv_poch(+1, 2, 2, order);
    require_vanishing("eu^od G_ev odd part", g_ev, 1);
    require_vanishing("eu^od G_od even part", g_od, 0);
    require_agreement("eu^od G_ev", even, subsequence(g_ev, 2, 0));
    require_agreement("eu^od G_od", odd, subsequence(g_od, 2, 1));
    // G_ev(q^{1/2}) = (Theta(4 tau) + 1) / (2 (q;q)), and
    // q^{-1/2} G_od(q^{1/2}) = q^{-1/2} (Theta(tau) - Theta(4 tau)) / (2 (q;q)),
    // i.e. sum q^{2n^2} / (q;q) and sum q^{2n(n+1)} / (q;q) over n >= 0.
    SeriesQ theta4 = theta_gap(2, 0, ThetaRange::two_sided, even.order());
    SeriesQ even_closed =
        exact_divide(theta4 + SeriesQ::one(even.order()), 2) * inv_poch(+1, 1, 1, even.order());
    SeriesQ odd_closed = theta_gap(2, 2, ThetaRange::one_sided, odd.order()) *
                         inv_poch(+1, 1, 1, odd.order());
    require_agreement("eu^od even closed form", even, even_closed);
    require_agreement("eu^od odd closed form", odd, odd_closed);
  } else {
    auto [ev2, od2] = ed_od_doubled_parity_parts(order);
    SeriesQ g_ev = exact_divide(ev2, 2);
    SeriesQ g_od = exact_divide(od2, 2);
    require_vanishing("ed^od G_ev odd part", g_ev, 1);
    require_vanishing("ed^od G_od even part", g_od, 0);
    require_agreement("ed^od G_ev", even, subsequence(g_ev, 2, 0));
    require_agreement("ed^od G_od", odd, subsequence(g_od, 2, 1));
  }
  return {even, odd};
}

MonotonicityResult check_monotonicity(const FamilyCode& family, const SeriesQ& series,
                                      std::size_t stride) {
  if (stride != 1 && stride != 2) throw std::invalid_argument("stride must be 1 or 2");
  MonotonicityResult r{family, stride, true, std::nullopt};
  for (std::size_t n = 0; n + stride < series.order(); ++n) {
    if (series[n] > series[n + stride]) {
      r.weakly_increasing = false;
      r.first_descent = n;
      break;
    }
  }
  return r;
}

std::array<FamilyCode, 8> claimed_inequality_chain() {
  auto f = [](const char* s) { return FamilyCode::parse(s); };
  return {f("ed^od"), f("od^ed"), f("od^eu"), f("ed^ou"),
          f("eu^od"), f("eu^ou"), f("ou^ed"), f("ou^eu")};
}

ChainResult scan_inequality_chain(const std::array<FamilyCode, 8>& chain,
                                  const std::map<FamilyCode, SeriesQ>& series) {
  std::size_t upper = SIZE_MAX;
  for (const auto& f : chain) {
    auto it = series.find(f);
    if (it == series.end()) throw std::invalid_argument("missing series for " + f.label());
    upper = std::min(upper, it->second.order());
  }
  ChainResult r{chain, upper, std::nullopt, std::vector<std::optional<std::size_t>>(7)};
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    const SeriesQ& lo = series.at(chain[i]);
    const SeriesQ& hi = series.at(chain[i + 1]);
    for (std::size_t n = upper; n-- > 0;) {
      if (!(lo[n] < hi[n])) {
        r.last_failure[i] = n;
        break;
      }
    }
  }
  std::size_t threshold = 0;
  for (const auto& f : r.last_failure) {
    if (f) threshold = std::max(threshold, *f + 1);
  }
  if (threshold < upper) r.threshold = threshold;
  return r;
}

namespace {

IdentityCheck compare(const std::string& name, const SeriesQ& lhs, const SeriesQ& rhs) {
  const std::size_t order = std::min(lhs.order(), rhs.order());
  if (auto n = lhs.first_mismatch(rhs)) {
    return {name, order, false,
            "q^" + std::to_string(*n) + ": " + lhs[*n].get_str() + " vs " + rhs[*n].get_str()};
  }
  return {name, order, true, ""};
}

// prod_{j >= 0} (1 - q (-q)^j), one factor at a time.
SeriesQ q_minus_q_direct(std::size_t order) {
  SeriesQ acc = SeriesQ::one(order);
  for (std::size_t k = 1; k < order; ++k) {
    SeriesQ term = shift(acc, k);
    if (k % 2 == 1) {
      acc -= term;
    } else {
      acc += term;
    }
  }
  return acc;
}

}  // namespace

std::vector<IdentityCheck> identity_suite(std::size_t order) {
  if (order < 2) throw std::invalid_argument("identity suite needs order >= 2");
  std::vector<IdentityCheck> out;
  out.push_back(compare("sigma: Eulerian = Hecke double sum", sigma_series(order),
                        hecke_sigma(order)));
  const std::size_t half = (order + 1) / 2;
  SeriesQ phi_split = substitute_power(hecke_phi0(half), 2, order) +
                      shift(substitute_power(hecke_phi1(half), 2, order), 1);
  out.push_back(compare("phi(q) = Phi0(q^2) + q Phi1(q^2)", phi_series(order), phi_split));
  out.push_back(compare("pentagonal sum = (q;q)_inf", pentagonal_signed(order),
                        poch(+1, 1, 1, order)));
  out.push_back(compare("(q;-q)_inf = (q;q^2)_inf (-q^2;q^2)_inf", q_minus_q_direct(order),
                        q_minus_q_product(order)));
  out.push_back(compare("(q;-q)_inf = (q;q)(q^4;q^4)/(q^2;q^2)^2", q_minus_q_product(order),
                        q_minus_q_eta_quotient(order)));
  out.push_back(compare("(-q^2;q^2)_inf (q^2;q^2)_inf = (q^4;q^4)_inf",
                        poch(-1, 2, 2, order) * poch(+1, 2, 2, order), poch(+1, 4, 4, order)));
  out.push_back(compare("(-q;q^2)_inf eta quotient", poch(-1, 1, 2, order),
                        minus_q_q2_eta_quotient(order)));
  out.push_back(compare("(-q^2;q^2)_inf eta quotient", poch(-1, 2, 2, order),
                        minus_q2_q2_eta_quotient(order)));
  out.push_back(compare("f: Eulerian = Appell sum", mock_f(order), mock_f_appell(order)));
  out.push_back(compare("f: Eulerian = shifted Appell sum", mock_f(order),
                        mock_f_appell_shifted(order)));
  for (const char* label : {"eu^od", "ed^od"}) {
    const std::string name = std::string(label) + ": G_ev / G_od closed forms";
    try {
      split_parity_subsequences(FamilyCode::parse(label), order);
      out.push_back({name, order, true, ""});
    } catch (const IdentityMismatch& e) {
      out.push_back({name, order, false, e.what()});
    }
  }
  for (const auto& family : FamilyCode::all()) {
    const std::string name = family.label() + ": alternate representations";
    try {
      const FamilySeries fs = build(family, order);
      out.push_back({name + " (" + std::to_string(fs.alternates.size()) + ")", order, true, ""});
    } catch (const IdentityMismatch& e) {
      out.push_back({name, order, false, e.what()});
    }
  }
  return out;
}

}  // namespace paritysep
