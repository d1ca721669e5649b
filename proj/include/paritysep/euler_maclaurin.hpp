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

#ifndef PARITYSEP_EULER_MACLAURIN_HPP
#define PARITYSEP_EULER_MACLAURIN_HPP

#include <gmpxx.h>

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "paritysep/mp.hpp"

namespace paritysep {

class QuadratureFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct QuadratureOptions {
  double rel_tolerance = 1e-30;
  int max_levels = 14;
};

/// Integral over [0, inf) by exp-sinh quadrature, halving the step until two
/// levels agree to rel_tolerance.
Real integrate_half_line(const std::function<Real(const Real&)>& f, Bits bits,
                         const QuadratureOptions& options = {});

/// Integral over [lo, hi] by tanh-sinh quadrature.
Real integrate_interval(const std::function<Real(const Real&)>& f, const Real& lo,
                        const Real& hi, const QuadratureOptions& options = {});

/// A function g holomorphic near the positive axis, decaying at infinity.
class Profile1D {
 public:
  virtual ~Profile1D() = default;
  virtual Complex value(const Complex& w) const = 0;
  virtual Real value(const Real& x) const = 0;
  /// g^{(n)}(0)
  virtual Real derivative_at_zero(int n, Bits bits) const = 0;
  /// Integral over [0, inf) when known in closed form.
  virtual std::optional<Real> integral(Bits) const { return std::nullopt; }
};

/// g(x) = exp(-c x^2 + d x), c > 0.
class GaussianProfile final : public Profile1D {
 public:
  explicit GaussianProfile(mpq_class c, mpq_class d = 0);

  Complex value(const Complex& w) const override;
  Real value(const Real& x) const override;
  Real derivative_at_zero(int n, Bits bits) const override;
  std::optional<Real> integral(Bits bits) const override;

  mpq_class exact_derivative_at_zero(int n) const;
  const mpq_class& c() const { return c_; }
  const mpq_class& d() const { return d_; }

 private:
  mpq_class c_;
  mpq_class d_;
};

struct EulerMaclaurinOptions {
  /// Use the profile's closed-form integral when it has one.
  bool closed_form_integral = true;
  QuadratureOptions quadrature;
};

/// (1/z) int_0^inf g - sum_{n<N} B_{n+1}(a) g^{(n)}(0) z^n / (n+1)!
Complex euler_maclaurin_1d(const Profile1D& g, const mpq_class& a, const Complex& z, int N,
                           const EulerMaclaurinOptions& options = {});

/// sum_{m >= 0} g((m + a) z), summed until the terms drop below the working
/// precision.
Complex direct_sum_1d(const Profile1D& g, const mpq_class& a, const Complex& z,
                      std::size_t max_terms = 50'000'000);

/// f(x1, x2) = exp(-(a x1^2 + b x1 x2 + c x2^2)). The form must be positive on
/// the closed quadrant minus the origin (a > 0, c > 0, b > -2 sqrt(ac)); the
/// forms used for the mock theta sums are indefinite but qualify.
class QuadraticFormProfile {
 public:
  QuadraticFormProfile(mpq_class a, mpq_class b, mpq_class c);

  /// exp(-4x1^2 - 16x1x2 - 12x2^2)
  static QuadraticFormProfile phi_form() { return {4, 16, 12}; }
  /// exp(-24x1^2 - 48x1x2 - 8x2^2)
  static QuadraticFormProfile sigma_form() { return {24, 48, 8}; }

  Real form(const Real& x1, const Real& x2) const;
  Real value(const Real& x1, const Real& x2) const;

  /// f^{(n1,n2)}(0, 0)
  mpq_class derivative_at_zero(int n1, int n2) const;
  /// int_0^inf f^{(n1,0)}(0, x2) dx2
  Real line_integral_first(int n1, Bits bits) const;
  /// int_0^inf f^{(0,n2)}(x1, 0) dx1
  Real line_integral_second(int n2, Bits bits) const;
  /// Integral over the quadrant, closed form.
  Real double_integral(Bits bits) const;
  /// Same integral in polar form by quadrature; used to cross-check.
  Real double_integral_quadrature(Bits bits, const QuadratureOptions& options = {}) const;

  const mpq_class& a() const { return a_; }
  const mpq_class& b() const { return b_; }
  const mpq_class& c() const { return c_; }

 private:
  mpq_class a_, b_, c_;
};

/// The two-dimensional expansion with line sums running to N and the double
/// Bernoulli sum over n1 + n2 < N.
Complex euler_maclaurin_2d(const QuadraticFormProfile& f, const mpq_class& a1,
                           const mpq_class& a2, const Complex& z, int N);

Complex direct_sum_2d(const QuadraticFormProfile& f, const mpq_class& a1, const mpq_class& a2,
                      const Complex& z);

/// Least-squares slope of log(err) against log(x).
double loglog_slope(const std::vector<Real>& x, const std::vector<Real>& err);

struct OrderCheck {
  std::string profile;
  int dimension = 1;
  int N = 0;
  double alpha = 0;
  std::vector<Real> magnitudes;
  std::vector<Real> errors;
  double slope = 0;
  double expected = 0;
  double tolerance = 0.3;
  bool pass = false;
};

/// |direct - expansion| on z = r e^{i alpha} over the magnitudes, then the
/// fitted slope against `expected`.
OrderCheck em_order_check_1d(const Profile1D& g, const std::string& name, const mpq_class& a,
                             const Real& alpha, const std::vector<Real>& magnitudes, int N,
                             double expected, double tolerance = 0.3);

OrderCheck em_order_check_2d(const QuadraticFormProfile& f, const std::string& name,
                             const mpq_class& a1, const mpq_class& a2, const Real& alpha,
                             const std::vector<Real>& magnitudes, int N, double expected,
                             double tolerance = 0.3);

/// Smallest n >= N with B_{n+1}(a) g^{(n)}(0) != 0: the order the error
/// actually decays at.
int effective_order(const GaussianProfile& g, const mpq_class& a, int N);

/// Shift alpha and sign eps(alpha) in the pentagonal-tail decomposition.
struct SignedShift {
  mpq_class alpha;
  int sign;
};

/// {5,7,11,13,17,19,23,25}/24 with signs +,+,+,-,-,-,-,+.
std::vector<SignedShift> pentagonal_shift_set();

mpq_class signed_shift_total(const std::vector<SignedShift>& set);
/// -sum eps(alpha) B_1(alpha)
mpq_class signed_bernoulli_total(const std::vector<SignedShift>& set);

/// q^{-1/24} sum_alpha eps(alpha) sum_m exp(-24 (m + alpha)^2 z), q = e^{-z}.
Complex pentagonal_shift_aggregate(const Complex& z);

/// The same function from its series:
/// -sum_{n>=0} (1 - (-1)^n q^n) (-1)^{n(3n-1)/2} q^{n(3n-1)/2}.
Complex pentagonal_tail_value(const Complex& z);

}  // namespace paritysep

#endif  // PARITYSEP_EULER_MACLAURIN_HPP
