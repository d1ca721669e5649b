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

#include "paritysep/euler_maclaurin.hpp"

#include <cmath>
#include <cstdlib>

#include "paritysep/bernoulli.hpp"

namespace paritysep {
namespace {

constexpr double kMaxT = 8.0;

Real tolerance_of(const QuadratureOptions& options, Bits bits) {
  return Real(options.rel_tolerance, bits);
}

// Sum of w(t) f(x(t)) over t = k h for k on one side, stopping once the terms
// are negligible against `scale`.
template <typename Node>
Real side_sum(const Node& node, const Real& h, long start, long step, const Real& scale,
              Bits bits) {
  Real total(0L, bits);
  const Real eps = Real(1L, bits) / exp(Real(static_cast<long>(bits + 16), bits) * log(Real(2L, bits)));
  int small = 0;
  for (long k = start;; k += step) {
    const Real t = h * Real(k, bits);
    if (std::fabs(t.to_double()) > kMaxT) break;
    const Real term = node(t);
    total += term;
    if (abs(term) <= eps * max(abs(scale), abs(total))) {
      if (++small >= 3) break;
    } else {
      small = 0;
    }
  }
  return total;
}

template <typename Node>
Real double_exponential(const Node& node, Bits bits, const QuadratureOptions& options) {
  const Real tol = tolerance_of(options, bits);
  Real h(1L, bits);
  const Real center = node(Real(0L, bits));
  Real sum = center + side_sum(node, h, 1, 1, center, bits) + side_sum(node, h, -1, -1, center, bits);
  Real estimate = h * sum;
  for (int level = 1; level <= options.max_levels; ++level) {
    h = h / Real(2L, bits);
    // New nodes are the odd multiples of the halved step.
    const Real odd = side_sum(node, h, 1, 2, sum, bits) + side_sum(node, h, -1, -2, sum, bits);
    sum += odd;
    const Real next = h * sum;
    if (abs(next - estimate) <= tol * abs(next) && level >= 3) return next;
    estimate = next;
  }
  throw QuadratureFailure("quadrature did not converge within " +
                          std::to_string(options.max_levels) + " levels");
}

Real half_pi(Bits bits) { return Real::pi(bits) / Real(2L, bits); }

Real q_to_real(const mpq_class& x, Bits bits) { return Real(x, bits); }

Complex complex_of(const mpq_class& x, Bits bits) { return Complex(Real(x, bits)); }

// Taylor coefficient of x^n in exp(-c x^2 + d x).
mpq_class gaussian_taylor(const mpq_class& c, const mpq_class& d, int n) {
  mpq_class total = 0;
  for (int i = 0; 2 * i <= n; ++i) {
    const int l = n - 2 * i;
    mpq_class t = 1;
    for (int j = 0; j < i; ++j) t *= -c;
    for (int j = 0; j < l; ++j) t *= d;
    t /= factorial(i) * factorial(l);
    total += t;
  }
  return total;
}

Real ln2(Bits bits) { return log(Real(2L, bits)); }

}  // namespace

Real integrate_half_line(const std::function<Real(const Real&)>& f, Bits bits,
                         const QuadratureOptions& options) {
  const Real hp = half_pi(bits);
  auto node = [&](const Real& t) {
    const Real u = hp * sinh(t);
    const Real x = exp(u);
    const Real fx = f(x);
    if (fx.is_zero()) return Real(0L, bits);
    return fx * x * hp * cosh(t);
  };
  return double_exponential(node, bits, options);
}

Real integrate_interval(const std::function<Real(const Real&)>& f, const Real& lo,
                        const Real& hi, const QuadratureOptions& options) {
  const Bits bits = std::max(lo.precision(), hi.precision());
  const Real hp = half_pi(bits);
  const Real half = (hi - lo) / Real(2L, bits);
  const Real one(1L, bits), two(2L, bits);
  auto node = [&](const Real& t) {
    const Real u = hp * sinh(t);
    const Real e = exp(two * abs(u));
    // Distance to the nearer endpoint, computed without cancellation.
    const Real gap = half * two / (e + one);
    const Real x = u.sign() >= 0 ? hi - gap : lo + gap;
    const Real ch = cosh(u);
    const Real w = half * hp * cosh(t) / (ch * ch);
    if (w.is_zero()) return Real(0L, bits);
    return f(x) * w;
  };
  return double_exponential(node, bits, options);
}

GaussianProfile::GaussianProfile(mpq_class c, mpq_class d) : c_(std::move(c)), d_(std::move(d)) {
  if (sgn(c_) <= 0) throw std::invalid_argument("Gaussian profile needs c > 0");
}

Complex GaussianProfile::value(const Complex& w) const {
  const Bits bits = w.precision();
  return exp(w * (complex_of(d_, bits) - complex_of(c_, bits) * w));
}

Real GaussianProfile::value(const Real& x) const {
  const Bits bits = x.precision();
  return exp(x * (q_to_real(d_, bits) - q_to_real(c_, bits) * x));
}

mpq_class GaussianProfile::exact_derivative_at_zero(int n) const {
  return factorial(n) * gaussian_taylor(c_, d_, n);
}

Real GaussianProfile::derivative_at_zero(int n, Bits bits) const {
  return Real(exact_derivative_at_zero(n), bits);
}

std::optional<Real> GaussianProfile::integral(Bits bits) const {
  const Real c = q_to_real(c_, bits), d = q_to_real(d_, bits);
  const Real sc = sqrt(c);
  const Real two(2L, bits), four(4L, bits);
  return sqrt(Real::pi(bits) / c) / two * exp(d * d / (four * c)) * erfc(-d / (two * sc));
}

Complex euler_maclaurin_1d(const Profile1D& g, const mpq_class& a, const Complex& z, int N,
                           const EulerMaclaurinOptions& options) {
  if (N < 0) throw std::invalid_argument("N must be non-negative");
  const Bits bits = z.precision();
  std::optional<Real> integral;
  if (options.closed_form_integral) integral = g.integral(bits);
  if (!integral) {
    integral = integrate_half_line([&g](const Real& x) { return g.value(x); }, bits,
                                   options.quadrature);
  }
  Complex result = Complex(*integral) / z;
  Complex zn(Real(1L, bits), Real(0L, bits));
  for (int n = 0; n < N; ++n) {
    const Real coeff = Real(bernoulli_poly(n + 1, a) / factorial(n + 1), bits) *
                       g.derivative_at_zero(n, bits);
    result -= zn * coeff;
    zn *= z;
  }
  return result;
}

Complex direct_sum_1d(const Profile1D& g, const mpq_class& a, const Complex& z,
                      std::size_t max_terms) {
  const Bits bits = z.precision();
  const Real eps = exp(-Real(static_cast<long>(bits + 16), bits) * ln2(bits));
  Complex total(bits);
  int small = 0;
  for (std::size_t m = 0; m < max_terms; ++m) {
    const Complex w = z * Real(mpq_class(mpz_class(static_cast<unsigned long>(m))) + a, bits);
    const Complex term = g.value(w);
    total += term;
    if (abs(term) <= eps * abs(total)) {
      if (++small >= 8) return total;
    } else {
      small = 0;
    }
  }
  throw QuadratureFailure("direct sum did not settle within the term cap");
}

QuadraticFormProfile::QuadraticFormProfile(mpq_class a, mpq_class b, mpq_class c)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
  const bool copositive = sgn(a_) > 0 && sgn(c_) > 0 && (sgn(b_) >= 0 || b_ * b_ < 4 * a_ * c_);
  if (!copositive) {
    throw std::invalid_argument("quadratic form is not positive on the first quadrant");
  }
}

Real QuadraticFormProfile::form(const Real& x1, const Real& x2) const {
  const Bits bits = std::max(x1.precision(), x2.precision());
  return Real(a_, bits) * x1 * x1 + Real(b_, bits) * x1 * x2 + Real(c_, bits) * x2 * x2;
}

Real QuadraticFormProfile::value(const Real& x1, const Real& x2) const {
  return exp(-form(x1, x2));
}

mpq_class QuadraticFormProfile::derivative_at_zero(int n1, int n2) const {
  const int degree = n1 + n2;
  if (degree % 2 != 0) return 0;
  const int k = degree / 2;
  // Coefficient of x1^n1 x2^n2 in (-Q)^k / k!: sum over a^i b^j c^l with
  // 2i + j = n1 and j + 2l = n2.
  mpq_class total = 0;
  for (int j = n1 % 2; j <= std::min(n1, n2); j += 2) {
    if ((n2 - j) % 2 != 0) continue;
    const int i = (n1 - j) / 2;
    const int l = (n2 - j) / 2;
    mpq_class t = 1;
    for (int r = 0; r < i; ++r) t *= a_;
    for (int r = 0; r < j; ++r) t *= b_;
    for (int r = 0; r < l; ++r) t *= c_;
    t /= factorial(i) * factorial(j) * factorial(l);
    total += t;
  }
  if (k % 2 != 0) total = -total;
  return total * factorial(n1) * factorial(n2);
}

namespace {

// n! sum_{2i+l=n} (-p)^i/i! (-b)^l/l! int_0^inf x^l e^{-s x^2} dx
Real line_integral(const mpq_class& p, const mpq_class& b, const mpq_class& s, int n,
                   Bits bits) {
  Real total(0L, bits);
  const Real sr(s, bits);
  for (int i = 0; 2 * i <= n; ++i) {
    const int l = n - 2 * i;
    mpq_class coeff = 1;
    for (int r = 0; r < i; ++r) coeff *= -p;
    for (int r = 0; r < l; ++r) coeff *= -b;
    coeff /= factorial(i) * factorial(l);
    if (sgn(coeff) == 0) continue;
    const Real half_power = Real(static_cast<long>(l + 1), bits) / Real(2L, bits);
    const Real moment = gamma(half_power) / (Real(2L, bits) * pow(sr, half_power));
    total += Real(coeff, bits) * moment;
  }
  return total * Real(factorial(n), bits);
}

}  // namespace

Real QuadraticFormProfile::line_integral_first(int n1, Bits bits) const {
  return line_integral(a_, b_, c_, n1, bits);
}

Real QuadraticFormProfile::line_integral_second(int n2, Bits bits) const {
  return line_integral(c_, b_, a_, n2, bits);
}

Real QuadraticFormProfile::double_integral(Bits bits) const {
  // In polar form the integral is (1/2) int_0^inf dt / (a + b t + c t^2).
  const mpq_class disc = b_ * b_ - 4 * a_ * c_;
  const Real b(b_, bits);
  Real inner(bits);
  if (sgn(disc) < 0) {
    const Real s = sqrt(Real(mpq_class(-disc), bits));
    inner = Real(2L, bits) / s * (half_pi(bits) - atan(b / s));
  } else if (sgn(disc) > 0) {
    const Real s = sqrt(Real(disc, bits));
    inner = log((b + s) / (b - s)) / s;
  } else {
    inner = Real(2L, bits) / b;
  }
  return inner / Real(2L, bits);
}

Real QuadraticFormProfile::double_integral_quadrature(Bits bits,
                                                      const QuadratureOptions& options) const {
  const Real two(2L, bits);
  auto integrand = [&](const Real& theta) {
    return Real(1L, bits) / (two * form(cos(theta), sin(theta)));
  };
  return integrate_interval(integrand, Real(0L, bits), half_pi(bits), options);
}

Complex euler_maclaurin_2d(const QuadraticFormProfile& f, const mpq_class& a1,
                           const mpq_class& a2, const Complex& z, int N) {
  if (N < 0) throw std::invalid_argument("N must be non-negative");
  const Bits bits = z.precision();
  const Complex one(Real(1L, bits));
  Complex result = Complex(f.double_integral(bits)) / (z * z);

  Complex line(bits);
  Complex zn = one;
  for (int n = 0; n <= N; ++n) {
    const Real c1 = Real(bernoulli_poly(n + 1, a1) / factorial(n + 1), bits) *
                    f.line_integral_first(n, bits);
    const Real c2 = Real(bernoulli_poly(n + 1, a2) / factorial(n + 1), bits) *
                    f.line_integral_second(n, bits);
    line += zn * (c1 + c2);
    zn *= z;
  }
  result -= line / z;

  for (int n1 = 0; n1 < N; ++n1) {
    for (int n2 = 0; n1 + n2 < N; ++n2) {
      const mpq_class coeff = bernoulli_poly(n1 + 1, a1) * bernoulli_poly(n2 + 1, a2) *
                              f.derivative_at_zero(n1, n2) /
                              (factorial(n1 + 1) * factorial(n2 + 1));
      if (sgn(coeff) == 0) continue;
      result += pow(z, static_cast<long>(n1 + n2)) * Real(coeff, bits);
    }
  }
  return result;
}

Complex direct_sum_2d(const QuadraticFormProfile& f, const mpq_class& a1, const mpq_class& a2,
                      const Complex& z) {
  const Bits bits = z.precision();
  const Complex z2 = z * z;
  const Real re = z2.real();
  if (re.sign() <= 0) throw std::invalid_argument("two-dimensional sum needs |arg z| < pi/4");
  // Terms with Re(z^2) Q beyond the cutoff are below the working precision.
  const Real cutoff = Real(static_cast<long>(bits + 24), bits) * ln2(bits) / re;
  const mpq_class min_coeff = sgn(f.b()) >= 0 ? f.a() : f.a() - f.b() * f.b() / (4 * f.c());
  const Real min_coeff_r(min_coeff, bits);
  const Real b(f.b(), bits), c(f.c(), bits);

  Complex total(bits);
  for (long m1 = 0;; ++m1) {
    const Real x1(mpq_class(m1) + a1, bits);
    if (min_coeff_r * x1 * x1 > cutoff) break;
    const Real vertex = max(Real(0L, bits), -b * x1 / (Real(2L, bits) * c));
    for (long m2 = 0;; ++m2) {
      const Real x2(mpq_class(m2) + a2, bits);
      const Real q = f.form(x1, x2);
      if (x2 >= vertex && q > cutoff) break;
      total += exp(-(z2 * q));
    }
  }
  return total;
}

double loglog_slope(const std::vector<Real>& x, const std::vector<Real>& err) {
  if (x.size() != err.size() || x.size() < 2) {
    throw std::invalid_argument("slope fit needs at least two matched points");
  }
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lx = log(x[i]).to_double();
    const double ly = log(err[i]).to_double();
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

OrderCheck em_order_check_1d(const Profile1D& g, const std::string& name, const mpq_class& a,
                             const Real& alpha, const std::vector<Real>& magnitudes, int N,
                             double expected, double tolerance) {
  OrderCheck check;
  check.profile = name;
  check.dimension = 1;
  check.N = N;
  check.alpha = alpha.to_double();
  check.expected = expected;
  check.tolerance = tolerance;
  for (const Real& r : magnitudes) {
    const Complex z = Complex::polar(r, alpha);
    check.magnitudes.push_back(r);
    check.errors.push_back(abs(direct_sum_1d(g, a, z) - euler_maclaurin_1d(g, a, z, N)));
  }
  check.slope = loglog_slope(check.magnitudes, check.errors);
  check.pass = std::fabs(check.slope - expected) <= tolerance;
  return check;
}

OrderCheck em_order_check_2d(const QuadraticFormProfile& f, const std::string& name,
                             const mpq_class& a1, const mpq_class& a2, const Real& alpha,
                             const std::vector<Real>& magnitudes, int N, double expected,
                             double tolerance) {
  OrderCheck check;
  check.profile = name;
  check.dimension = 2;
  check.N = N;
  check.alpha = alpha.to_double();
  check.expected = expected;
  check.tolerance = tolerance;
  for (const Real& r : magnitudes) {
    const Complex z = Complex::polar(r, alpha);
    check.magnitudes.push_back(r);
    check.errors.push_back(abs(direct_sum_2d(f, a1, a2, z) - euler_maclaurin_2d(f, a1, a2, z, N)));
  }
  check.slope = loglog_slope(check.magnitudes, check.errors);
  check.pass = std::fabs(check.slope - expected) <= tolerance;
  return check;
}

int effective_order(const GaussianProfile& g, const mpq_class& a, int N) {
  for (int n = N;; ++n) {
    if (sgn(bernoulli_poly(n + 1, a)) != 0 && sgn(g.exact_derivative_at_zero(n)) != 0) return n;
  }
}

std::vector<SignedShift> pentagonal_shift_set() {
  const int numerators[] = {5, 7, 11, 13, 17, 19, 23, 25};
  const int signs[] = {1, 1, 1, -1, -1, -1, -1, 1};
  std::vector<SignedShift> set;
  for (int i = 0; i < 8; ++i) set.push_back({mpq_class(numerators[i], 24), signs[i]});
  return set;
}

mpq_class signed_shift_total(const std::vector<SignedShift>& set) {
  mpq_class total = 0;
  for (const auto& s : set) total += s.sign;
  return total;
}

mpq_class signed_bernoulli_total(const std::vector<SignedShift>& set) {
  mpq_class total = 0;
  for (const auto& s : set) total -= s.sign * bernoulli_poly(1, s.alpha);
  return total;
}

Complex pentagonal_shift_aggregate(const Complex& z) {
  const Bits bits = z.precision();
  const GaussianProfile g(24);
  const Complex w = sqrt(z);
  Complex total(bits);
  for (const auto& s : pentagonal_shift_set()) {
    const Complex part = direct_sum_1d(g, s.alpha, w);
    total += s.sign > 0 ? part : -part;
  }
  // q^{-1/24} = e^{z/24}
  return exp(z / Real(24L, bits)) * total;
}

Complex pentagonal_tail_value(const Complex& z) {
  const Bits bits = z.precision();
  const Complex q = exp(-z);
  const Real eps = exp(-Real(static_cast<long>(bits + 16), bits) * ln2(bits));
  const Complex one(Real(1L, bits));
  Complex total(bits);
  for (long n = 1;; ++n) {
    const long e = n * (3 * n - 1) / 2;
    const Complex qe = exp(-(z * Real(e, bits)));
    const Complex qn = pow(q, n);
    Complex term = (n % 2 == 0 ? one - qn : one + qn) * qe;
    if ((e % 2) != 0) term = -term;
    total -= term;
    if (abs(qe) <= eps * abs(total)) break;
  }
  return total;
}

}  // namespace paritysep
