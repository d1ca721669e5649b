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

#include "paritysep/mp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace paritysep {

Real::Real(Bits bits) {
  mpfr_init2(value_, bits);
  mpfr_set_zero(value_, 1);
}

Real::Real(double value, Bits bits) {
  mpfr_init2(value_, bits);
  mpfr_set_d(value_, value, MPFR_RNDN);
}

Real::Real(long value, Bits bits) {
  mpfr_init2(value_, bits);
  mpfr_set_si(value_, value, MPFR_RNDN);
}

Real::Real(const mpz_class& value, Bits bits) {
  mpfr_init2(value_, bits);
  mpfr_set_z(value_, value.get_mpz_t(), MPFR_RNDN);
}

Real::Real(const mpq_class& value, Bits bits) {
  mpfr_init2(value_, bits);
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

Real::Real(const std::string& decimal, Bits bits) {
  mpfr_init2(value_, bits);
  if (mpfr_set_str(value_, decimal.c_str(), 10, MPFR_RNDN) != 0) {
    mpfr_clear(value_);
    throw std::invalid_argument("not a decimal number: " + decimal);
  }
}

Real::Real(const Real& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

Real Real::pi(Bits bits) {
  Real r(bits);
  mpfr_const_pi(r.value_, MPFR_RNDN);
  return r;
}

Real Real::with_precision(Bits bits) const {
  Real r(bits);
  mpfr_set(r.value_, value_, MPFR_RNDN);
  return r;
}

std::string Real::to_scientific(int digits) const {
  if (mpfr_nan_p(value_)) return "nan";
  if (mpfr_inf_p(value_)) return sign() > 0 ? "inf" : "-inf";
  std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Re", std::max(digits - 1, 0), value_);
  return buf.data();
}

std::string Real::to_fixed(int decimals) const {
  const int size = mpfr_snprintf(nullptr, 0, "%.*Rf", decimals, value_);
  std::vector<char> buf(static_cast<std::size_t>(size) + 1);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rf", decimals, value_);
  return buf.data();
}

long Real::exponent2() const {
  if (mpfr_zero_p(value_)) return std::numeric_limits<long>::min() / 2;
  return mpfr_get_exp(value_);
}

namespace {

void widen(mpfr_ptr target, Bits bits) {
  if (mpfr_get_prec(target) < bits) mpfr_prec_round(target, bits, MPFR_RNDN);
}

template <class F>
Real unary(const Real& x, F f) {
  Real r(x.precision());
  f(r.get(), x.get(), MPFR_RNDN);
  return r;
}

}  // namespace

Real& Real::operator+=(const Real& o) {
  widen(value_, o.precision());
  mpfr_add(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(const Real& o) {
  widen(value_, o.precision());
  mpfr_sub(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(const Real& o) {
  widen(value_, o.precision());
  mpfr_mul(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(const Real& o) {
  widen(value_, o.precision());
  mpfr_div(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}

Real operator-(const Real& a) { return unary(a, mpfr_neg); }

Real abs(const Real& x) { return unary(x, mpfr_abs); }
Real sqrt(const Real& x) { return unary(x, mpfr_sqrt); }
Real exp(const Real& x) { return unary(x, mpfr_exp); }
Real log(const Real& x) { return unary(x, mpfr_log); }
Real sin(const Real& x) { return unary(x, mpfr_sin); }
Real cos(const Real& x) { return unary(x, mpfr_cos); }
Real tan(const Real& x) { return unary(x, mpfr_tan); }
Real sinh(const Real& x) { return unary(x, mpfr_sinh); }
Real cosh(const Real& x) { return unary(x, mpfr_cosh); }
Real atan(const Real& x) { return unary(x, mpfr_atan); }
Real erfc(const Real& x) { return unary(x, mpfr_erfc); }
Real gamma(const Real& x) { return unary(x, mpfr_gamma); }

Real pow(const Real& x, const Real& y) {
  Real r(std::max(x.precision(), y.precision()));
  mpfr_pow(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}

Real atan2(const Real& y, const Real& x) {
  Real r(std::max(x.precision(), y.precision()));
  mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
  return r;
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }

Complex::Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {
  const Bits bits = std::max(re_.precision(), im_.precision());
  if (re_.precision() < bits) re_ = re_.with_precision(bits);
  if (im_.precision() < bits) im_ = im_.with_precision(bits);
}

Complex::Complex(Real re) : re_(std::move(re)), im_(re_.precision()) {}

Complex Complex::polar(const Real& r, const Real& alpha) {
  return Complex(r * cos(alpha), r * sin(alpha));
}

Complex Complex::with_precision(Bits bits) const {
  return Complex(re_.with_precision(bits), im_.with_precision(bits));
}

Complex& Complex::operator+=(const Complex& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Complex& Complex::operator-=(const Complex& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Complex& Complex::operator*=(const Complex& o) {
  Real re = re_ * o.re_ - im_ * o.im_;
  Real im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Complex& Complex::operator/=(const Complex& o) {
  const Real denom = o.re_ * o.re_ + o.im_ * o.im_;
  Real re = (re_ * o.re_ + im_ * o.im_) / denom;
  Real im = (im_ * o.re_ - re_ * o.im_) / denom;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Complex& Complex::operator*=(const Real& o) {
  re_ *= o;
  im_ *= o;
  return *this;
}

Complex& Complex::operator/=(const Real& o) {
  re_ /= o;
  im_ /= o;
  return *this;
}

Real abs(const Complex& z) {
  Real r(z.precision());
  mpfr_hypot(r.get(), z.real().get(), z.imag().get(), MPFR_RNDN);
  return r;
}

Real arg(const Complex& z) { return atan2(z.imag(), z.real()); }

Complex conj(const Complex& z) { return Complex(z.real(), -z.imag()); }

Complex exp(const Complex& z) {
  return Complex::polar(exp(z.real()), z.imag());
}

Complex log(const Complex& z) { return Complex(log(abs(z)), arg(z)); }

Complex sqrt(const Complex& z) {
  const Real half(0.5, z.precision());
  return Complex::polar(sqrt(abs(z)), arg(z) * half);
}

Complex pow(const Complex& z, const Complex& w) { return exp(w * log(z)); }

Complex pow(const Complex& z, const Real& w) {
  return Complex::polar(pow(abs(z), w), arg(z) * w);
}

Complex pow(const Complex& z, long n) {
  Complex base = n < 0 ? Complex(Real(1L, z.precision())) / z : z;
  unsigned long e = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
  Complex result(Real(1L, z.precision()));
  while (e) {
    if (e & 1UL) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

double agreeing_digits(const Complex& exact, const Complex& approx) {
  const Real err = abs(exact - approx);
  const Real ref = abs(exact);
  if (err.is_zero()) return std::numeric_limits<double>::infinity();
  if (ref.is_zero()) return 0.0;
  Real ratio = err / ref;
  mpfr_log10(ratio.get(), ratio.get(), MPFR_RNDN);
  return -ratio.to_double();
}

}  // namespace paritysep
