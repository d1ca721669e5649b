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

#ifndef PARITYSEP_LEMMAS_HPP
#define PARITYSEP_LEMMAS_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "paritysep/asymptotic.hpp"
#include "paritysep/mp.hpp"
#include "paritysep/partition.hpp"
#include "paritysep/series.hpp"

namespace paritysep {

/// Cancellation in a sum needs more bits than the configured cap.
class PrecisionUnderflow : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A point z outside the declared cone R_Delta.
class RegionViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct EvalOptions {
  Bits bits = kDefaultBits;  // target precision of results
  Bits guard = 64;
  Bits max_bits = 1 << 14;
  std::size_t max_terms = 4'000'000;
};

/// Reads PARITYSEP_PRECISION, falling back to kDefaultBits.
Bits default_precision();

/// q = sign * e^{-w}. Keeping w instead of q lets every evaluation recompute q
/// at whatever precision it needs.
struct QPoint {
  int sign = 1;
  Complex w;

  static QPoint from_z(const Complex& z) { return {1, z}; }
  Complex value(Bits bits) const;
  QPoint negated() const { return {-sign, w}; }
  /// q^k
  QPoint power(long k) const;
  /// log|q| = -Re w
  Real log_modulus() const { return -w.real(); }
};

/// Rays z = r e^{i alpha} with strictly decreasing r, all in R_Delta where
/// Delta = tan|alpha|.
class Ray {
 public:
  Ray(Real alpha, std::vector<Real> magnitudes);
  /// Real ray with the given magnitudes.
  static Ray real_axis(const std::vector<double>& magnitudes, Bits bits = kDefaultBits);
  static Ray at_angle(double alpha, const std::vector<double>& magnitudes,
                      Bits bits = kDefaultBits);

  const Real& alpha() const { return alpha_; }
  const Real& delta() const { return delta_; }
  const std::vector<Real>& magnitudes() const { return magnitudes_; }
  std::vector<Complex> points() const;

 private:
  Real alpha_;
  Real delta_;
  std::vector<Real> magnitudes_;
};

/// Throws RegionViolation unless Re z > 0 and |Im z| <= delta Re z (up to
/// rounding at the working precision).
void require_in_cone(const Complex& z, const Real& delta);

/// prod (1 - sign q^{base + j step}) at q, with terms dropped once
/// |q^e| < 2^{-bits-guard}.
Complex eval_product(const PochSpec& spec, const QPoint& q, const EvalOptions& options = {});
Complex eval_product(const PochSpec& spec, const Complex& z, const EvalOptions& options = {});

/// sum_{n in Z} s^n q^{n^2} with s = +1 or -1.
Complex eval_theta_sum(const QPoint& q, int s, const EvalOptions& options = {});
/// Theta(iz/2pi) = sum_{n in Z} e^{-n^2 z / 2}
Complex eval_theta(const Complex& z, const EvalOptions& options = {});

struct SumDiagnostics {
  Bits bits_used = 0;
  double lost_bits = 0;
  std::size_t terms = 0;
};

// Eulerian sums at an arbitrary point, with precision raised until the
// cancellation (log2 of largest term over result) is covered.
Complex eval_mock_f(const QPoint& q, const EvalOptions& options = {},
                    SumDiagnostics* diag = nullptr);
Complex eval_sigma(const QPoint& q, const EvalOptions& options = {},
                   SumDiagnostics* diag = nullptr);
Complex eval_phi(const QPoint& q, const EvalOptions& options = {},
                 SumDiagnostics* diag = nullptr);

/// f(-q) at q = e^{-z}, summed directly.
Complex eval_f_at_minus_q(const Complex& z, const EvalOptions& options = {},
                          SumDiagnostics* diag = nullptr);
/// sigma(-q) at q = e^{-z}.
Complex eval_sigma_at_minus_q(const Complex& z, const EvalOptions& options = {},
                              SumDiagnostics* diag = nullptr);

enum class Theta4Form { alternating, plain };

/// f(-q) = 2 phi(q) - theta4(0;-q) / (q;-q)_inf. theta4(0;-q) is summed as
/// sum (-1)^n (-q)^{n^2} or as sum q^{n^2}.
Complex eval_f_watson(const Complex& z, Theta4Form form, const EvalOptions& options = {});

/// (q;-q)_inf = (q;q^2)_inf (-q^2;q^2)_inf.
Complex eval_q_minus_q(const QPoint& q, const EvalOptions& options = {});

/// Numeric value of the family's generating function at x, |x| < 1, built
/// from products and Eulerian sums.
Complex eval_generating_function(const FamilyCode& family, const QPoint& x,
                                 const EvalOptions& options = {});

struct LemmaRow {
  Real r;
  Complex z;
  Complex value;
  Complex predicted;
  Complex ratio;
  Real deviation;
  Bits bits_used = 0;
  /// Second route and digits of agreement, when the lemma has one.
  std::optional<Complex> alternate;
  std::optional<double> agreeing_digits;
};

enum class DeviationKind {
  relative,  // |value / predicted - 1|
  absolute,  // |value - predicted|
};

struct LemmaReport {
  std::string lemma;
  Real alpha;
  Real delta;
  DeviationKind kind = DeviationKind::relative;
  std::vector<LemmaRow> rows;
  bool decreasing = false;
  Real max_deviation;
  std::optional<double> tolerance;
  std::optional<double> min_digits;
  std::optional<double> required_digits;
  bool trend_pass = false;
};

struct LemmaCheckOptions {
  EvalOptions eval;
  /// When set, every row must satisfy deviation <= tolerance.
  std::optional<double> tolerance;
  /// When false only the tolerance is enforced, not the decreasing trend.
  bool require_decreasing = true;
  /// Minimum digits of two-route agreement, for lemmas with a second route.
  double required_digits = 20;
};

/// Per-lemma rule: theta and theta4 converge to the working precision almost
/// at once, so they use a 1e-10 tolerance instead of a decreasing trend.
LemmaCheckOptions default_lemma_options(const std::string& name, const EvalOptions& eval = {});

/// Names accepted by check_lemma, in report order.
const std::vector<std::string>& lemma_names();

/// eta:       (q;q)_inf ~ sqrt(2 pi / z) e^{-pi^2 / 6z}
/// theta:     Theta(iz/2pi) ~ sqrt(2 pi / z)
/// inv-q2:    1/(q^2;q^2)_inf ~ sqrt(z / pi) e^{pi^2 / 12z}
/// theta4:    theta4(0;-q) ~ sqrt(pi / z), both summation forms compared
/// q-minus-q: (q;-q)_inf ~ e^{-pi^2 / 24z}
/// f:         f(-q) ~ -sqrt(pi / z) e^{pi^2 / 24z}, direct against Watson
/// sigma:     sigma(-e^{-z}) -> -2, absolute deviation
LemmaReport check_lemma(const std::string& name, const Ray& ray,
                        const LemmaCheckOptions& options = {});

struct GenfunCheck {
  FamilyCode family;
  /// One report for stride 1; even and odd halves for stride 2.
  std::vector<LemmaReport> parts;
  bool pass = false;
};

/// The generating function (or its stride-2 halves) against
/// lambda z^beta e^{gamma / z} along the ray.
GenfunCheck genfun_asymptotic_check(const FamilyCode& family, const Ray& ray,
                                    const LemmaCheckOptions& options = {});
GenfunCheck genfun_asymptotic_check(const FamilyCode& family, const AsymptoticParams& params,
                                    const Ray& ray, const LemmaCheckOptions& options = {});

}  // namespace paritysep

#endif  // PARITYSEP_LEMMAS_HPP
