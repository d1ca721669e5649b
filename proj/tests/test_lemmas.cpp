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
#include <cstdlib>

#include "doctest.h"
#include "paritysep/lemmas.hpp"

using namespace paritysep;

namespace {

const double kPi = std::acos(-1.0);

}  // namespace

TEST_CASE("rays enforce the cone") {
  CHECK_THROWS_AS(Ray::at_angle(1.6, {0.1}), RegionViolation);
  CHECK_THROWS_AS(Ray::at_angle(0.0, {0.1, 0.2}), std::invalid_argument);
  CHECK_THROWS_AS(Ray::at_angle(0.0, {0.1, -0.2}), std::invalid_argument);
  const Ray ray = Ray::at_angle(kPi / 3, {0.2, 0.1});
  CHECK(std::fabs(ray.delta().to_double() - std::sqrt(3.0)) < 1e-12);
  for (const auto& z : ray.points()) CHECK_NOTHROW(require_in_cone(z, ray.delta()));
  const Complex outside(Real(0.1, 128), Real(0.2, 128));
  CHECK_THROWS_AS(require_in_cone(outside, Real(1L, 128)), RegionViolation);
  CHECK_THROWS_AS(require_in_cone(Complex(Real(-0.1, 128)), Real(1L, 128)), RegionViolation);
}

TEST_CASE("q points") {
  const QPoint q{-1, Complex(Real(0.3, 128))};
  const Complex v = q.value(128);
  CHECK(std::fabs(v.real().to_double() + std::exp(-0.3)) < 1e-15);
  const Complex cube = q.power(3).value(128);
  CHECK(agreeing_digits(v * v * v, cube) > 35);
  CHECK(q.power(2).sign == 1);
}

TEST_CASE("eta transformation") {
  const Bits bits = 128;
  for (double alpha : {0.0, kPi / 4}) {
    const Complex z = Complex::polar(Real(0.05, bits), Real(alpha, bits));
    const Complex value = eval_product(PochSpec::infinite(1, 1), z);
    const Real pi = Real::pi(bits);
    const Complex inv = Complex(Real(1L, bits)) / z;
    // Exact: sqrt(2 pi / z) e^{z/24 - pi^2 / 6z} times a factor 1 + O(e^{-4 pi^2 Re(1/z)}).
    const Complex exact =
        sqrt(inv * (pi * Real(2L, bits))) * exp(z / Real(24L, bits) - inv * (pi * pi / Real(6L, bits)));
    CHECK(agreeing_digits(exact, value) > 30);
  }
}

TEST_CASE("theta values") {
  const Bits bits = 128;
  const Complex one(Real(1L, bits));
  const Complex t = eval_theta(one);
  // 1 + 2 sum e^{-n^2/2}
  double direct = 1;
  for (int n = 1; n < 20; ++n) direct += 2 * std::exp(-n * n / 2.0);
  CHECK(std::fabs(t.real().to_double() - direct) < 1e-14);
  CHECK(t.imag().is_zero());
  const LemmaReport r = check_lemma("theta", Ray::real_axis({0.1}), default_lemma_options("theta"));
  CHECK(r.trend_pass);
  CHECK(r.max_deviation < Real("1e-50", bits));
}

TEST_CASE("theta4 in both forms") {
  const LemmaReport r =
      check_lemma("theta4", Ray::at_angle(kPi / 6, {0.2, 0.1}), default_lemma_options("theta4"));
  CHECK(r.trend_pass);
  REQUIRE(r.min_digits);
  CHECK(*r.min_digits > 30);
}

TEST_CASE("Watson route for f(-q)") {
  const Bits bits = 128;
  for (double r : {0.3, 0.2, 0.1}) {
    const Complex z(Real(r, bits));
    const Complex direct = eval_f_at_minus_q(z);
    CHECK(agreeing_digits(direct, eval_f_watson(z, Theta4Form::plain)) >= 20);
    CHECK(agreeing_digits(direct, eval_f_watson(z, Theta4Form::alternating)) >= 20);
  }
}

TEST_CASE("Eulerian sums raise precision and stop at the cap") {
  // f(-q) has positive terms; sigma(-q) cancels heavily near q = -1.
  SumDiagnostics f_diag;
  eval_f_at_minus_q(Complex(Real(0.01, 128)), {}, &f_diag);
  CHECK(f_diag.lost_bits < 1);
  SumDiagnostics diag;
  const Complex z(Real(0.001, 128));
  EvalOptions opts;
  const Complex v = eval_sigma_at_minus_q(z, opts, &diag);
  CHECK(diag.lost_bits > 200);
  CHECK(diag.bits_used >= opts.bits + diag.lost_bits);
  CHECK(std::fabs(v.real().to_double() + 2) < 0.01);
  EvalOptions tight;
  tight.max_bits = 300;
  CHECK_THROWS_AS(eval_sigma_at_minus_q(z, tight), PrecisionUnderflow);
}

TEST_CASE("Eulerian sums agree with truncated series at small q") {
  const Bits bits = 128;
  const Complex z(Real(3.0, bits));
  const Real x = exp(-Real(3.0, bits));
  auto horner = [&](const SeriesQ& s) {
    Real acc(0L, bits);
    for (std::size_t n = s.order(); n-- > 0;) acc = acc * x + Real(s[n], bits);
    return acc;
  };
  CHECK(agreeing_digits(Complex(horner(mock_f(60))), eval_mock_f(QPoint::from_z(z))) > 30);
  CHECK(agreeing_digits(Complex(horner(sigma_series(60))), eval_sigma(QPoint::from_z(z))) > 30);
  CHECK(agreeing_digits(Complex(horner(phi_series(60))), eval_phi(QPoint::from_z(z))) > 30);
}

TEST_CASE("generating functions agree with their series") {
  const Bits bits = 128;
  const Complex z = Complex::polar(Real(2.5, bits), Real(0.7, bits));
  for (const auto& f : FamilyCode::all()) {
    CAPTURE(f.label());
    const SeriesQ s = build_primary(f, 80);
    for (int sign : {1, -1}) {
      const QPoint x{sign, z};
      const Complex xv = x.value(bits);
      Complex acc(bits);
      for (std::size_t n = s.order(); n-- > 0;) acc = acc * xv + Complex(Real(s[n], bits));
      CHECK(agreeing_digits(acc, eval_generating_function(f, x)) > 30);
    }
  }
}

TEST_CASE("lemma trends") {
  LemmaCheckOptions eta = default_lemma_options("eta");
  eta.tolerance = 0.01;
  for (double alpha : {0.0, kPi / 6, kPi / 3}) {
    CHECK(check_lemma("eta", Ray::at_angle(alpha, {0.05}), eta).trend_pass);
  }
  for (const char* name : {"inv-q2", "q-minus-q", "f"}) {
    CAPTURE(name);
    CHECK(check_lemma(name, Ray::at_angle(kPi / 6, {0.2, 0.1, 0.05}), default_lemma_options(name))
              .trend_pass);
  }
  const LemmaReport sigma = check_lemma("sigma", Ray::real_axis({0.1, 0.05, 0.025}));
  CHECK(sigma.kind == DeviationKind::absolute);
  CHECK(sigma.trend_pass);
  CHECK_THROWS_AS(check_lemma("nope", Ray::real_axis({0.1})), std::invalid_argument);
}

TEST_CASE("generating function asymptotics and a wrong gamma") {
  const Ray ray = Ray::at_angle(kPi / 6, {0.2, 0.1, 0.05});
  const GenfunCheck eu_ou = genfun_asymptotic_check(FamilyCode::parse("eu^ou"), Ray::real_axis({0.2, 0.1, 0.05}));
  CHECK(eu_ou.pass);
  CHECK(eu_ou.parts.size() == 1);
  const GenfunCheck od_ed = genfun_asymptotic_check(FamilyCode::parse("od^ed"), ray);
  CHECK(od_ed.pass);
  const GenfunCheck ed_od = genfun_asymptotic_check(FamilyCode::parse("ed^od"), ray);
  CHECK(ed_od.parts.size() == 2);
  CHECK(ed_od.pass);

  const FamilyCode f = FamilyCode::parse("eu^ou");
  AsymptoticParams wrong = main_term_params(f);
  wrong.gamma = wrong.gamma * Real(1.1, kDefaultBits);
  const GenfunCheck mutant = genfun_asymptotic_check(f, wrong, Ray::real_axis({0.2, 0.1, 0.05}));
  CHECK_FALSE(mutant.pass);
  CHECK(mutant.parts[0].rows.back().deviation > mutant.parts[0].rows.front().deviation);
}

TEST_CASE("precision from the environment") {
  setenv("PARITYSEP_PRECISION", "256", 1);
  CHECK(default_precision() == 256);
  setenv("PARITYSEP_PRECISION", "junk", 1);
  CHECK(default_precision() == kDefaultBits);
  unsetenv("PARITYSEP_PRECISION");
  CHECK(default_precision() == kDefaultBits);
}
