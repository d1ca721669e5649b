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

#ifndef PARITYSEP_MP_HPP
#define PARITYSEP_MP_HPP

#include <gmpxx.h>
#include <mpfr.h>

#include <string>

namespace paritysep {

/// Mantissa precision in bits.
using Bits = mpfr_prec_t;

inline constexpr Bits kDefaultBits = 128;

/// MPFR real with an explicit precision. The result of a binary operation
/// carries the larger precision of its operands.
class Real {
 public:
  explicit Real(Bits bits = kDefaultBits);
  Real(double value, Bits bits);
  Real(long value, Bits bits);
  Real(const mpz_class& value, Bits bits);
  Real(const mpq_class& value, Bits bits);
  /// Parses a decimal string.
  Real(const std::string& decimal, Bits bits);
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  static Real pi(Bits bits);

  Bits precision() const { return mpfr_get_prec(value_); }
  /// Copy rounded to a new precision.
  Real with_precision(Bits bits) const;

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  /// Scientific notation with `digits` significant digits, e.g. "1.2345e+03".
  std::string to_scientific(int digits) const;
  /// Fixed notation with `decimals` digits after the point.
  std::string to_fixed(int decimals) const;

  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }
  /// floor(log2|x|) + 1, or a large negative number for zero.
  long exponent2() const;

  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);

  friend Real operator+(Real a, const Real& b) { return a += b; }
  friend Real operator-(Real a, const Real& b) { return a -= b; }
  friend Real operator*(Real a, const Real& b) { return a *= b; }
  friend Real operator/(Real a, const Real& b) { return a /= b; }
  friend Real operator-(const Real& a);

  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.value_, b.value_); }
  friend bool operator>(const Real& a, const Real& b) { return b < a; }
  friend bool operator<=(const Real& a, const Real& b) { return !(b < a); }
  friend bool operator>=(const Real& a, const Real& b) { return !(a < b); }
  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.value_, b.value_); }

 private:
  mpfr_t value_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real pow(const Real& x, const Real& y);
Real sin(const Real& x);
Real cos(const Real& x);
Real tan(const Real& x);
Real sinh(const Real& x);
Real cosh(const Real& x);
Real atan(const Real& x);
Real atan2(const Real& y, const Real& x);
Real erfc(const Real& x);
Real gamma(const Real& x);
Real max(const Real& a, const Real& b);

/// Complex number over two Reals of equal precision.
class Complex {
 public:
  explicit Complex(Bits bits = kDefaultBits) : re_(bits), im_(bits) {}
  Complex(Real re, Real im);
  explicit Complex(Real re);

  /// r * e^{i alpha}
  static Complex polar(const Real& r, const Real& alpha);

  const Real& real() const { return re_; }
  const Real& imag() const { return im_; }
  Bits precision() const { return re_.precision(); }
  Complex with_precision(Bits bits) const;

  Complex& operator+=(const Complex& o);
  Complex& operator-=(const Complex& o);
  Complex& operator*=(const Complex& o);
  Complex& operator/=(const Complex& o);
  Complex& operator*=(const Real& o);
  Complex& operator/=(const Real& o);

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
  friend Complex operator*(Complex a, const Real& b) { return a *= b; }
  friend Complex operator*(const Real& b, Complex a) { return a *= b; }
  friend Complex operator/(Complex a, const Real& b) { return a /= b; }
  friend Complex operator-(const Complex& a) { return Complex(-a.re_, -a.im_); }

 private:
  Real re_;
  Real im_;
};

Real abs(const Complex& z);
Real arg(const Complex& z);
Complex conj(const Complex& z);
Complex exp(const Complex& z);
/// Principal branch.
Complex log(const Complex& z);
/// Principal branch.
Complex sqrt(const Complex& z);
/// Principal branch z^w = exp(w log z).
Complex pow(const Complex& z, const Complex& w);
Complex pow(const Complex& z, const Real& w);
/// z^n for integer n by repeated squaring.
Complex pow(const Complex& z, long n);

/// Number of correct leading decimal digits of `approx` relative to `exact`.
double agreeing_digits(const Complex& exact, const Complex& approx);

}  // namespace paritysep

#endif  // PARITYSEP_MP_HPP
