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

#include <cmath>

#include "doctest.h"
#include "paritysep/bernoulli.hpp"
#include "paritysep/euler_maclaurin.hpp"

using namespace paritysep;

TEST_CASE("Bernoulli numbers and polynomials") {
  CHECK(bernoulli_number(0) == 1);
  CHECK(bernoulli_number(1) == mpq_class(-1, 2));
  CHECK(bernoulli_number(2) == mpq_class(1, 6));
  CHECK(bernoulli_number(3) == 0);
  CHECK(bernoulli_number(4) == mpq_class(-1, 30));
  CHECK(bernoulli_number(12) == mpq_class(-691, 2730));
  CHECK(bernoulli_poly(1, mpq_class(5, 24)) == mpq_class(-7, 24));
  CHECK(bernoulli_poly(2, 0) == mpq_class(1, 6));
  for (int n = 1; n <= 12; ++n) {
    // B_n'(x) = n B_{n-1}(x)
    const auto c = bernoulli_polynomial(n);
    const auto d = bernoulli_polynomial(n - 1);
    for (int k = 1; k <= n; ++k) CHECK(c[k] * k == n * d[k - 1]);
    // B_n(1 - x) = (-1)^n B_n(x)
    const mpq_class x(3, 7);
    CHECK(bernoulli_poly(n, 1 - x) == (n % 2 ? -1 : 1) * bernoulli_poly(n, x));
  }
  CHECK(factorial(5) == 120);
}

TEST_CASE("shift set for the pentagonal tail") {
  const auto set = pentagonal_shift_set();
  REQUIRE(set.size() == 8);
  CHECK(signed_shift_total(set) == 0);
  CHECK(signed_bernoulli_total(set) == 1);
  // With 19/23 in place of 19/24 the Bernoulli total is no longer 1.
  auto typo = set;
  for (auto& s : typo) {
    if (s.alpha == mpq_class(19, 24)) s.alpha = mpq_class(19, 23);
  }
  CHECK(signed_bernoulli_total(typo) != 1);
}

TEST_CASE("aggregate matches its series and tends to 1") {
  const Bits bits = 128;
  Real previous(10L, bits);
  for (double r : {0.1, 0.05, 0.025}) {
    const Complex z(Real(r, bits));
    const Complex agg = pentagonal_shift_aggregate(z);
    CHECK(agreeing_digits(pentagonal_tail_value(z), agg) > 30);
    const Real dev = abs(agg - Complex(Real(1L, bits)));
    CHECK(dev < previous);
    previous = dev;
  }
}

TEST_CASE("Gaussian profile exact data") {
  const GaussianProfile g(1, 2);
  CHECK(g.exact_derivative_at_zero(0) == 1);
  CHECK(g.exact_derivative_at_zero(1) == 2);
  CHECK(g.exact_derivative_at_zero(2) == 2);  // d^2 - 2c
  const GaussianProfile centred(24);
  CHECK(centred.exact_derivative_at_zero(1) == 0);
  CHECK(centred.exact_derivative_at_zero(2) == -48);
  CHECK_THROWS_AS(GaussianProfile(0), std::invalid_argument);
  const Bits bits = 128;
  const Real closed = *g.integral(bits);
  const Real quad = integrate_half_line([&](const Real& x) { return g.value(x); }, bits);
  CHECK(agreeing_digits(Complex(closed), Complex(quad)) > 30);
}

TEST_CASE("midpoint correction for a = 0, N = 1") {
  const Bits bits = 128;
  const GaussianProfile g(3);
  const Complex z(Real(0.3, bits));
  const Complex em = euler_maclaurin_1d(g, 0, z, 1);
  const Complex leading = Complex(*g.integral(bits)) / z;
  // -B_1(0) g(0) = 1/2
  CHECK(agreeing_digits(em - leading, Complex(Real(0.5, bits))) > 30);
}

TEST_CASE("quadrature failure is reported") {
  QuadratureOptions opts;
  opts.max_levels = 2;
  opts.rel_tolerance = 1e-60;
  CHECK_THROWS_AS(integrate_half_line([](const Real& x) { return Real(1L, x.precision()) /
                                                                 (Real(1L, x.precision()) + x); },
                                      128, opts),
                  QuadratureFailure);
  EulerMaclaurinOptions em;
  em.closed_form_integral = false;
  const Complex z(Real(0.2, 128));
  const GaussianProfile g(2, 1);
  CHECK(agreeing_digits(euler_maclaurin_1d(g, mpq_class(1, 3), z, 2, em),
                        euler_maclaurin_1d(g, mpq_class(1, 3), z, 2)) > 25);
}

TEST_CASE("one-dimensional error order") {
  const Bits bits = 128;
  const GaussianProfile g(1, 2);
  const std::vector<Real> mags{Real(0.02, bits), Real(0.01, bits), Real(0.005, bits)};
  for (double alpha : {0.0, std::acos(-1.0) / 6}) {
    for (int N = 1; N <= 3; ++N) {
      CAPTURE(alpha);
      CAPTURE(N);
      const OrderCheck c = em_order_check_1d(g, "g", mpq_class(5, 24), Real(alpha, bits), mags, N, N);
      CHECK(c.pass);
    }
  }
}

TEST_CASE("centred Gaussian skips orders") {
  const GaussianProfile g(24);
  const mpq_class a(5, 24);
  CHECK(effective_order(g, a, 1) == 2);
  CHECK(effective_order(g, a, 2) == 2);
  CHECK(effective_order(g, a, 3) == 4);
  const Bits bits = 128;
  const std::vector<Real> mags{Real(0.1, bits), Real(0.05, bits), Real(0.025, bits)};
  const OrderCheck c = em_order_check_1d(g, "centred", a, Real(0L, bits), mags, 3, 3);
  CHECK_FALSE(c.pass);
  CHECK(std::fabs(c.slope - 4) < 0.3);
}

TEST_CASE("quadratic form profiles") {
  CHECK_THROWS_AS(QuadraticFormProfile(-1, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(QuadraticFormProfile(1, -3, 1), std::invalid_argument);
  CHECK_NOTHROW(QuadraticFormProfile(1, -1, 1));
  const Bits bits = 128;
  for (const auto& f : {QuadraticFormProfile::phi_form(), QuadraticFormProfile::sigma_form(),
                        QuadraticFormProfile(2, -1, 3), QuadraticFormProfile(1, 2, 1)}) {
    CHECK(agreeing_digits(Complex(f.double_integral(bits)),
                          Complex(f.double_integral_quadrature(bits))) > 30);
  }
  const QuadraticFormProfile f = QuadraticFormProfile::phi_form();
  CHECK(f.derivative_at_zero(0, 0) == 1);
  CHECK(f.derivative_at_zero(1, 0) == 0);
  CHECK(f.derivative_at_zero(2, 0) == -8);
  CHECK(f.derivative_at_zero(1, 1) == -16);
  CHECK(f.derivative_at_zero(0, 2) == -24);
}

TEST_CASE("separable two-dimensional sums factor") {
  const Bits bits = 128;
  const QuadraticFormProfile f(1, 0, 2);
  const GaussianProfile g1(1), g2(2);
  const Complex z = Complex::polar(Real(0.2, bits), Real(0.4, bits));
  const mpq_class a1(1, 3), a2(1, 5);
  const Complex direct = direct_sum_2d(f, a1, a2, z);
  CHECK(agreeing_digits(direct, direct_sum_1d(g1, a1, z) * direct_sum_1d(g2, a2, z)) > 30);
  // For a product profile the 2-D expansion is the product of the 1-D
  // expansions carried to N + 1 terms, minus the cross terms with
  // n1 + n2 >= N.
  const int N = 2;
  const Complex product =
      euler_maclaurin_1d(g1, a1, z, N + 1) * euler_maclaurin_1d(g2, a2, z, N + 1);
  Complex cross(bits);
  for (int n1 = 0; n1 <= N; ++n1) {
    for (int n2 = 0; n2 <= N; ++n2) {
      if (n1 + n2 < N) continue;
      const mpq_class c = bernoulli_poly(n1 + 1, a1) * g1.exact_derivative_at_zero(n1) /
                          factorial(n1 + 1) * bernoulli_poly(n2 + 1, a2) *
                          g2.exact_derivative_at_zero(n2) / factorial(n2 + 1);
      cross += pow(z, static_cast<long>(n1 + n2)) * Real(c, bits);
    }
  }
  CHECK(agreeing_digits(product - cross, euler_maclaurin_2d(f, a1, a2, z, N)) > 30);
}

TEST_CASE("two-dimensional error order") {
  const Bits bits = 128;
  const auto f = QuadraticFormProfile::sigma_form();
  const std::vector<Real> mags{Real(0.05, bits), Real(0.025, bits), Real(0.0125, bits)};
  for (int N = 1; N <= 2; ++N) {
    CAPTURE(N);
    const OrderCheck c =
        em_order_check_2d(f, "sigma form", mpq_class(1, 24), 0, Real(0L, bits), mags, N, N);
    CHECK(c.pass);
  }
  CHECK_THROWS_AS(direct_sum_2d(f, 0, 0, Complex::polar(Real(0.1, bits), Real(0.9, bits))),
                  std::invalid_argument);
}

TEST_CASE("slope fit") {
  const Bits bits = 64;
  std::vector<Real> x, y;
  for (double v : {0.1, 0.05, 0.025}) {
    x.emplace_back(v, bits);
    y.emplace_back(3 * v * v, bits);
  }
  CHECK(loglog_slope(x, y) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK_THROWS_AS(loglog_slope({x[0]}, {y[0]}), std::invalid_argument);
}
