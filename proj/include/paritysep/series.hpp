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

#ifndef PARITYSEP_SERIES_HPP
#define PARITYSEP_SERIES_HPP

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace paritysep {

using BigInt = mpz_class;

class NonUnitConstantTerm : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NegativeExponent : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class OrderExceeded : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Raised when two representations of the same series disagree. Always a bug.
class IdentityMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Truncated power series in q with exact integer coefficients.
///
/// A series of order N knows the coefficients of q^0 .. q^{N-1}; everything
/// from q^N on is unknown, not zero. Binary operations therefore work on the
/// overlap min(N1, N2).
class SeriesQ {
 public:
  SeriesQ() = default;
  explicit SeriesQ(std::size_t order) : coeffs_(order) {}
  explicit SeriesQ(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {}

  static SeriesQ one(std::size_t order);
  static SeriesQ monomial(std::size_t exponent, std::size_t order,
                          const BigInt& coeff = 1);
  static SeriesQ from_ints(std::span<const long> coeffs);

  std::size_t order() const { return coeffs_.size(); }
  std::span<const BigInt> coeffs() const { return coeffs_; }

  /// Coefficient of q^n; throws OrderExceeded for n >= order().
  const BigInt& at(std::size_t n) const;
  const BigInt& operator[](std::size_t n) const { return coeffs_[n]; }

  SeriesQ truncated(std::size_t order) const;

  /// True iff both series agree on min(order(), other.order()).
  bool agrees_with(const SeriesQ& other) const;
  /// First index where the two disagree on the overlap, if any.
  std::optional<std::size_t> first_mismatch(const SeriesQ& other) const;

  bool operator==(const SeriesQ& other) const = default;

  SeriesQ& operator+=(const SeriesQ& other);
  SeriesQ& operator-=(const SeriesQ& other);
  SeriesQ& operator*=(const BigInt& scalar);

 private:
  std::vector<BigInt> coeffs_;
};

SeriesQ operator+(const SeriesQ& a, const SeriesQ& b);
SeriesQ operator-(const SeriesQ& a, const SeriesQ& b);
SeriesQ operator-(const SeriesQ& a);
SeriesQ operator*(const SeriesQ& a, const SeriesQ& b);
SeriesQ operator*(const BigInt& scalar, const SeriesQ& a);

/// Multiplicative inverse; the constant term must be +1 or -1.
SeriesQ inverse(const SeriesQ& a);

/// A(q) -> A(-q).
SeriesQ negate_q(const SeriesQ& a);

/// result[n] = a[stride * n + offset].
SeriesQ subsequence(const SeriesQ& a, std::size_t stride, std::size_t offset);

/// Inverse of subsequence for a stride-2 split: even/odd coefficients merged.
SeriesQ interleave(const SeriesQ& even, const SeriesQ& odd);

/// q^k * A(q), keeping the order of A.
SeriesQ shift(const SeriesQ& a, std::size_t k);

/// A(q^k) truncated to `order`.
SeriesQ substitute_power(const SeriesQ& a, std::size_t k, std::size_t order);

/// A / (1 - sign * q^e) for e >= 1, in O(order).
SeriesQ divide_by_binomial(const SeriesQ& a, int sign, std::size_t e);

/// Exact division of every coefficient by d; throws IdentityMismatch when a
/// coefficient is not divisible.
SeriesQ exact_divide(const SeriesQ& a, const BigInt& d);

bool is_weakly_increasing(const SeriesQ& a);

/// Product of factors (1 - sign * q^{base + j*step}), j = 0, 1, ... , count-1
/// (or unbounded when count is empty).
struct PochSpec {
  int sign = 1;
  std::size_t base = 1;
  std::size_t step = 1;
  std::optional<std::size_t> count;

  /// (q^base; q^step)_inf
  static PochSpec infinite(std::size_t base, std::size_t step) {
    return {1, base, step, std::nullopt};
  }
  /// (-q^base; q^step)_inf
  static PochSpec infinite_plus(std::size_t base, std::size_t step) {
    return {-1, base, step, std::nullopt};
  }
};

SeriesQ pochhammer(const PochSpec& spec, std::size_t order);

/// 1 / pochhammer(spec), built one geometric factor at a time.
SeriesQ inverse_pochhammer(const PochSpec& spec, std::size_t order);

enum class ThetaRange { one_sided, two_sided };

/// Sum of q^{a n^2 + b n} over n >= 0 or over all integers n.
SeriesQ theta_gap(long a, long b, ThetaRange range, std::size_t order);

/// Sum over n in Z of (-1)^n q^{n(3n+1)/2}.
SeriesQ pentagonal_signed(std::size_t order);

// Eulerian forms.
SeriesQ mock_f(std::size_t order);        // sum q^{n^2} / (-q;q)_n^2
SeriesQ sigma_series(std::size_t order);  // sum q^{n(n+1)/2} / (-q;q)_n
SeriesQ phi_series(std::size_t order);    // sum q^{n^2} / (-q^2;q^2)_n

/// Twice the Appell-type sum  sum_{n in Z} (-1)^n q^{e(n)} / (1 + q^n) with
/// e(n) = (k n^2 + l n) / 2. The n = 0 term contributes 1/2, so the doubled
/// sum has integer coefficients.
SeriesQ appell_sum_doubled(long k, long l, std::size_t order);

/// f(q) = (2/(q;q)_inf) sum (-1)^n q^{n(3n+1)/2}/(1+q^n).
SeriesQ mock_f_appell(std::size_t order);
/// f(q) = 2 - (2/(q;q)_inf) sum (-1)^n q^{3n(n+1)/2}/(1+q^n).
SeriesQ mock_f_appell_shifted(std::size_t order);

// Hecke-type double sums.
SeriesQ hecke_sigma(std::size_t order);
SeriesQ hecke_phi0(std::size_t order);
SeriesQ hecke_phi1(std::size_t order);

}  // namespace paritysep

#endif  // PARITYSEP_SERIES_HPP
