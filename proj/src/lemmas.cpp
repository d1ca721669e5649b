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

#include "paritysep/lemmas.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

namespace paritysep {
namespace {

Real ln2(Bits bits) { return log(Real(2L, bits)); }

Complex cone(Bits bits) { return Complex(Real(1L, bits)); }

Complex cpow_real(const Complex& z, const Real& e) { return pow(z, e); }

// Number of bits by which |q|^e falls below 1.
double bits_below_one(const QPoint& q, double e) {
  return e * q.w.real().to_double() / std::log(2.0);
}

void require_decaying(const QPoint& q) {
  if (q.w.real().sign() <= 0) throw std::invalid_argument("evaluation needs |q| < 1");
}

enum class Eulerian { mock_f, sigma, phi };

struct CoreResult {
  Complex sum;
  Real max_term;
  std::size_t terms;
};

CoreResult eulerian_core(Eulerian kind, const QPoint& q, Bits p, std::size_t max_terms) {
  const Complex qv = q.value(p);
  const Complex one = cone(p);
  const Real eps = exp(-Real(static_cast<long>(p), p) * ln2(p));
  Complex qn = one;
  Complex t = one;
  Complex sum = one;
  Real max_term(1L, p);
  for (std::size_t n = 1; n < max_terms; ++n) {
    qn *= qv;
    switch (kind) {
      case Eulerian::mock_f: {
        const Complex d = one + qn;
        t *= qn * qn / (qv * d * d);
        break;
      }
      case Eulerian::sigma:
        t *= qn / (one + qn);
        break;
      case Eulerian::phi: {
        const Complex q2n = qn * qn;
        t *= q2n / (qv * (one + q2n));
        break;
      }
    }
    sum += t;
    const Real mag = abs(t);
    max_term = max(max_term, mag);
    if (bits_below_one(q, static_cast<double>(n)) > 1.0 && mag <= eps * abs(sum)) {
      return {sum, max_term, n + 1};
    }
  }
  throw PrecisionUnderflow("Eulerian sum did not settle within the term cap");
}

Complex eulerian(Eulerian kind, const QPoint& q, const EvalOptions& options,
                 SumDiagnostics* diag) {
  require_decaying(q);
  Bits p = options.bits + options.guard;
  for (;;) {
    const CoreResult r = eulerian_core(kind, q, p, options.max_terms);
    const Real modulus = abs(r.sum);
    double lost = 0;
    if (modulus.is_zero()) {
      lost = static_cast<double>(p);
    } else {
      lost = std::max(0.0, (log(r.max_term / modulus) / ln2(p)).to_double());
    }
    const Bits needed = options.bits + static_cast<Bits>(std::ceil(lost)) + 32;
    if (p >= needed) {
      if (diag) *diag = {p, lost, r.terms};
      return r.sum;
    }
    const Bits next = std::max(needed + options.guard, p + 64);
    if (next > options.max_bits) {
      throw PrecisionUnderflow("cancellation of " + std::to_string(lost) +
                               " bits exceeds the precision cap of " +
                               std::to_string(options.max_bits) + " bits");
    }
    p = next;
  }
}

Complex pentagonal_tail_at(const QPoint& q, const EvalOptions& options) {
  const Bits p = options.bits + options.guard;
  const Complex one = cone(p);
  Complex total(p);
  for (long n = 1;; ++n) {
    const long e = n * (3 * n - 1) / 2;
    const Complex qe = q.power(e).value(p);
    const Complex qn = q.power(n).value(p);
    Complex term = (n % 2 == 0 ? one - qn : one + qn) * qe;
    if (e % 2 != 0) term = -term;
    total += term;
    if (bits_below_one(q, static_cast<double>(e)) > static_cast<double>(p) + 8) break;
    if (static_cast<std::size_t>(n) > options.max_terms) {
      throw PrecisionUnderflow("pentagonal tail did not settle within the term cap");
    }
  }
  return total;
}

bool strictly_decreasing(const std::vector<LemmaRow>& rows) {
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (!(rows[i].deviation < rows[i - 1].deviation)) return false;
  }
  return true;
}

void finish(LemmaReport& report, const LemmaCheckOptions& options) {
  const Bits bits = options.eval.bits;
  report.max_deviation = Real(0L, bits);
  for (const auto& row : report.rows) {
    report.max_deviation = max(report.max_deviation, row.deviation);
    if (row.agreeing_digits) {
      report.min_digits = report.min_digits ? std::min(*report.min_digits, *row.agreeing_digits)
                                            : *row.agreeing_digits;
    }
  }
  report.decreasing = strictly_decreasing(report.rows);
  report.tolerance = options.tolerance;
  bool pass = !options.require_decreasing || report.decreasing;
  if (options.tolerance && report.max_deviation > Real(*options.tolerance, bits)) pass = false;
  if (report.min_digits) {
    report.required_digits = options.required_digits;
    if (*report.min_digits < options.required_digits) pass = false;
  }
  report.trend_pass = pass;
}

LemmaRow make_row(const Real& r, const Complex& z, Complex value, Complex predicted,
                  DeviationKind kind, Bits bits) {
  Complex ratio = value / predicted;
  Real deviation = kind == DeviationKind::relative ? abs(ratio - cone(bits)) : abs(value - predicted);
  return {r, z, std::move(value), std::move(predicted), std::move(ratio), std::move(deviation),
          bits, std::nullopt, std::nullopt};
}

}  // namespace

Bits default_precision() {
  if (const char* env = std::getenv("PARITYSEP_PRECISION")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 32 && v <= (1L << 20)) return static_cast<Bits>(v);
  }
  return kDefaultBits;
}

Complex QPoint::value(Bits bits) const {
  Complex e = exp(-w.with_precision(bits));
  return sign < 0 ? -e : e;
}

QPoint QPoint::power(long k) const {
  const int s = (sign < 0 && k % 2 != 0) ? -1 : 1;
  return {s, w * Real(k, w.precision())};
}

Ray::Ray(Real alpha, std::vector<Real> magnitudes)
    : alpha_(std::move(alpha)), delta_(alpha_.precision()), magnitudes_(std::move(magnitudes)) {
  const Bits bits = alpha_.precision();
  if (!(abs(alpha_) < Real::pi(bits) / Real(2L, bits))) {
    throw RegionViolation("ray angle must satisfy |alpha| < pi/2");
  }
  if (magnitudes_.empty()) throw std::invalid_argument("ray needs at least one magnitude");
  for (std::size_t i = 0; i < magnitudes_.size(); ++i) {
    if (magnitudes_[i].sign() <= 0) throw std::invalid_argument("ray magnitudes must be positive");
    if (i > 0 && !(magnitudes_[i] < magnitudes_[i - 1])) {
      throw std::invalid_argument("ray magnitudes must strictly decrease");
    }
  }
  delta_ = tan(abs(alpha_));
  for (const Complex& z : points()) require_in_cone(z, delta_);
}

Ray Ray::real_axis(const std::vector<double>& magnitudes, Bits bits) {
  return at_angle(0.0, magnitudes, bits);
}

Ray Ray::at_angle(double alpha, const std::vector<double>& magnitudes, Bits bits) {
  std::vector<Real> mags;
  for (double m : magnitudes) mags.emplace_back(m, bits);
  return Ray(Real(alpha, bits), std::move(mags));
}

std::vector<Complex> Ray::points() const {
  std::vector<Complex> out;
  for (const Real& r : magnitudes_) {
    out.push_back(alpha_.is_zero() ? Complex(r) : Complex::polar(r, alpha_));
  }
  return out;
}

void require_in_cone(const Complex& z, const Real& delta) {
  const Bits bits = z.precision();
  if (z.real().sign() <= 0) throw RegionViolation("Re z must be positive");
  const Real slack = Real(1L, bits) + exp(-Real(static_cast<long>(bits / 2), bits) * ln2(bits));
  if (abs(z.imag()) > delta * z.real() * slack) {
    throw RegionViolation("z lies outside R_Delta for Delta = " + delta.to_scientific(6));
  }
}

Complex eval_product(const PochSpec& spec, const QPoint& q, const EvalOptions& options) {
  require_decaying(q);
  const Bits p = options.bits + options.guard;
  const Complex one = cone(p);
  Complex current = q.power(static_cast<long>(spec.base)).value(p);
  const Complex ratio = q.power(static_cast<long>(spec.step)).value(p);
  Complex product = one;
  for (std::size_t j = 0;; ++j) {
    if (spec.count && j >= *spec.count) break;
    const double e = static_cast<double>(spec.base + j * spec.step);
    if (!spec.count && bits_below_one(q, e) > static_cast<double>(p)) break;
    if (j >= options.max_terms) {
      throw PrecisionUnderflow("product needs more than " + std::to_string(options.max_terms) +
                               " factors");
    }
    product *= spec.sign > 0 ? one - current : one + current;
    current *= ratio;
  }
  return product;
}

Complex eval_product(const PochSpec& spec, const Complex& z, const EvalOptions& options) {
  return eval_product(spec, QPoint::from_z(z), options);
}

Complex eval_theta_sum(const QPoint& q, int s, const EvalOptions& options) {
  require_decaying(q);
  const Bits p = options.bits + options.guard;
  Complex tail(p);
  for (long n = 1;; ++n) {
    if (bits_below_one(q, static_cast<double>(n * n)) > static_cast<double>(p) + 8) break;
    const Complex term = q.power(n * n).value(p);
    if (s < 0 && n % 2 != 0) {
      tail -= term;
    } else {
      tail += term;
    }
  }
  return cone(p) + tail * Real(2L, p);
}

Complex eval_theta(const Complex& z, const EvalOptions& options) {
  return eval_theta_sum(QPoint{1, z / Real(2L, z.precision())}, 1, options);
}

Complex eval_mock_f(const QPoint& q, const EvalOptions& options, SumDiagnostics* diag) {
  return eulerian(Eulerian::mock_f, q, options, diag);
}

Complex eval_sigma(const QPoint& q, const EvalOptions& options, SumDiagnostics* diag) {
  return eulerian(Eulerian::sigma, q, options, diag);
}

Complex eval_phi(const QPoint& q, const EvalOptions& options, SumDiagnostics* diag) {
  return eulerian(Eulerian::phi, q, options, diag);
}

Complex eval_f_at_minus_q(const Complex& z, const EvalOptions& options, SumDiagnostics* diag) {
  return eval_mock_f(QPoint{-1, z}, options, diag);
}

Complex eval_sigma_at_minus_q(const Complex& z, const EvalOptions& options,
                              SumDiagnostics* diag) {
  return eval_sigma(QPoint{-1, z}, options, diag);
}

Complex eval_q_minus_q(const QPoint& q, const EvalOptions& options) {
  return eval_product(PochSpec::infinite(1, 2), q, options) *
         eval_product(PochSpec::infinite_plus(2, 2), q, options);
}

Complex eval_f_watson(const Complex& z, Theta4Form form, const EvalOptions& options) {
  const QPoint q = QPoint::from_z(z);
  const Complex theta4 = form == Theta4Form::alternating ? eval_theta_sum(q.negated(), -1, options)
                                                         : eval_theta_sum(q, 1, options);
  const Complex phi = eval_phi(q, options);
  return phi * Real(2L, phi.precision()) - theta4 / eval_q_minus_q(q, options);
}

Complex eval_generating_function(const FamilyCode& family, const QPoint& x,
                                 const EvalOptions& options) {
  const Bits p = options.bits + options.guard;
  const Complex one = cone(p);
  const Complex two = one + one;
  const Complex q = x.value(p);
  auto prod = [&](const PochSpec& spec) { return eval_product(spec, x, options); };
  const PochSpec q2q2 = PochSpec::infinite(2, 2);
  const PochSpec qq2 = PochSpec::infinite(1, 2);
  const PochSpec mq2q2 = PochSpec::infinite_plus(2, 2);
  const PochSpec mqq2 = PochSpec::infinite_plus(1, 2);
  const std::string label = family.label();

  if (label == "eu^ou") return one / ((one - q) * prod(q2q2));
  if (label == "eu^od") return (eval_theta_sum(x, 1, options) + one) / (two * prod(q2q2));
  if (label == "od^eu") {
    const Complex sigma = eval_sigma(x.negated(), options);
    const Complex mq = eval_product(PochSpec::infinite(1, 1), x.negated(), options);
    return (one - sigma / Real(2L, p) + mq / Real(2L, p)) / prod(q2q2);
  }
  if (label == "ed^ou") {
    const Complex bracket = eval_q_minus_q(x, options) + one - pentagonal_tail_at(x, options);
    return bracket / (two * prod(qq2));
  }
  if (label == "ed^od") return (prod(mqq2) - q * prod(mq2q2)) / (one - q);
  if (label == "ou^eu") return (one / prod(qq2) - q / prod(q2q2)) / (one - q);
  if (label == "ou^ed") {
    const Complex f = eval_mock_f(x.negated(), options);
    return prod(mq2q2) / Real(2L, p) * (two - f + one / eval_q_minus_q(x, options));
  }
  return ((one + q) * prod(mq2q2) - q * prod(mqq2)) / (one - q);
}

LemmaCheckOptions default_lemma_options(const std::string& name, const EvalOptions& eval) {
  LemmaCheckOptions options;
  options.eval = eval;
  if (name == "theta" || name == "theta4") {
    options.tolerance = 1e-10;
    options.require_decreasing = false;
  }
  return options;
}

const std::vector<std::string>& lemma_names() {
  static const std::vector<std::string> names = {"eta",       "theta", "inv-q2", "theta4",
                                                 "q-minus-q", "f",     "sigma"};
  return names;
}

LemmaReport check_lemma(const std::string& name, const Ray& ray,
                        const LemmaCheckOptions& options) {
  const EvalOptions& eval = options.eval;
  const Bits bits = eval.bits;
  LemmaReport report;
  report.lemma = name;
  report.alpha = ray.alpha();
  report.delta = ray.delta();
  if (name == "sigma") report.kind = DeviationKind::absolute;

  const Real pi = Real::pi(bits + eval.guard);
  const Real pi2 = pi * pi;
  const auto& mags = ray.magnitudes();
  const auto points = ray.points();
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Complex z = points[i].with_precision(bits + eval.guard);
    require_in_cone(z, ray.delta());
    const Complex inv = cone(z.precision()) / z;
    Complex value(bits), predicted(bits);
    std::optional<Complex> alternate;
    Bits used = bits + eval.guard;
    if (name == "eta") {
      value = eval_product(PochSpec::infinite(1, 1), z, eval);
      predicted = sqrt(inv * (pi * Real(2L, bits))) * exp(-(inv * (pi2 / Real(6L, bits))));
    } else if (name == "theta") {
      value = eval_theta(z, eval);
      predicted = sqrt(inv * (pi * Real(2L, bits)));
    } else if (name == "inv-q2") {
      value = cone(bits) / eval_product(PochSpec::infinite(2, 2), z, eval);
      predicted = sqrt(z / pi) * exp(inv * (pi2 / Real(12L, bits)));
    } else if (name == "theta4") {
      const QPoint q = QPoint::from_z(z);
      value = eval_theta_sum(q.negated(), -1, eval);
      alternate = eval_theta_sum(q, 1, eval);
      predicted = sqrt(inv * pi);
    } else if (name == "q-minus-q") {
      value = eval_q_minus_q(QPoint::from_z(z), eval);
      predicted = exp(-(inv * (pi2 / Real(24L, bits))));
    } else if (name == "f") {
      SumDiagnostics diag;
      value = eval_f_at_minus_q(z, eval, &diag);
      used = diag.bits_used;
      alternate = eval_f_watson(z, Theta4Form::plain, eval);
      predicted = -(sqrt(inv * pi) * exp(inv * (pi2 / Real(24L, bits))));
    } else if (name == "sigma") {
      SumDiagnostics diag;
      value = eval_sigma_at_minus_q(z, eval, &diag);
      used = diag.bits_used;
      predicted = Complex(Real(-2L, bits));
    } else {
      throw std::invalid_argument("unknown lemma: " + name);
    }
    LemmaRow row = make_row(mags[i], points[i], value, predicted, report.kind, bits);
    row.bits_used = used;
    if (alternate) {
      row.agreeing_digits = agreeing_digits(*alternate, value);
      row.alternate = std::move(alternate);
    }
    report.rows.push_back(std::move(row));
  }
  finish(report, options);
  return report;
}

GenfunCheck genfun_asymptotic_check(const FamilyCode& family, const Ray& ray,
                                    const LemmaCheckOptions& options) {
  return genfun_asymptotic_check(family, main_term_params(family, options.eval.bits), ray,
                                 options);
}

GenfunCheck genfun_asymptotic_check(const FamilyCode& family, const AsymptoticParams& params,
                                    const Ray& ray, const LemmaCheckOptions& options) {
  const EvalOptions& eval = options.eval;
  const Bits bits = eval.bits;
  GenfunCheck check{family, {}, false};
  const bool split = params.stride == 2;
  const std::vector<std::string> suffixes =
      split ? std::vector<std::string>{":even", ":odd"} : std::vector<std::string>{""};
  for (const auto& suffix : suffixes) {
    LemmaReport report;
    report.lemma = "genfun:" + family.label() + suffix;
    report.alpha = ray.alpha();
    report.delta = ray.delta();
    check.parts.push_back(std::move(report));
  }

  const auto& mags = ray.magnitudes();
  const auto points = ray.points();
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Complex z = points[i].with_precision(bits + eval.guard);
    require_in_cone(z, ray.delta());
    const Complex predicted =
        cpow_real(z, params.beta) * exp(cone(z.precision()) / z * params.gamma) * params.lambda;
    if (!split) {
      const Complex value = eval_generating_function(family, QPoint::from_z(z), eval);
      check.parts[0].rows.push_back(
          make_row(mags[i], points[i], value, predicted, DeviationKind::relative, bits));
      continue;
    }
    const QPoint x{1, z / Real(2L, z.precision())};
    const Complex fx = eval_generating_function(family, x, eval);
    const Complex fmx = eval_generating_function(family, x.negated(), eval);
    const Complex two = cone(z.precision()) * Real(2L, z.precision());
    const Complex even = (fx + fmx) / two;
    const Complex odd = (fx - fmx) / (two * x.value(z.precision()));
    check.parts[0].rows.push_back(
        make_row(mags[i], points[i], even, predicted, DeviationKind::relative, bits));
    check.parts[1].rows.push_back(
        make_row(mags[i], points[i], odd, predicted, DeviationKind::relative, bits));
  }
  check.pass = true;
  for (auto& part : check.parts) {
    finish(part, options);
    check.pass = check.pass && part.trend_pass;
  }
  return check;
}

}  // namespace paritysep
