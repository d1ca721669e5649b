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

#include "paritysep/series.hpp"

#include <algorithm>
#include <cstdlib>

namespace paritysep {

namespace {

std::vector<std::size_t> nonzero_indices(const SeriesQ& a) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < a.order(); ++i) {
    if (sgn(a[i]) != 0) idx.push_back(i);
  }
  return idx;
}

std::vector<BigInt> to_vector(const SeriesQ& a) {
  return {a.coeffs().begin(), a.coeffs().end()};
}

int minus_one_pow(long n) { return (n % 2 == 0) ? 1 : -1; }

void add_term(std::vector<BigInt>& c, long exponent, long coeff) {
  if (exponent < 0) {
    throw NegativeExponent("summand exponent " + std::to_string(exponent) +
                           " is negative");
  }
  if (static_cast<std::size_t>(exponent) < c.size()) c[exponent] += coeff;
}

}  // namespace

SeriesQ SeriesQ::one(std::size_t order) { return monomial(0, order); }

SeriesQ SeriesQ::monomial(std::size_t exponent, std::size_t order,
                          const BigInt& coeff) {
  SeriesQ s(order);
  if (exponent < order) s.coeffs_[exponent] = coeff;
  return s;
}

SeriesQ SeriesQ::from_ints(std::span<const long> coeffs) {
  std::vector<BigInt> c;
  c.reserve(coeffs.size());
  for (long v : coeffs) c.emplace_back(v);
  return SeriesQ(std::move(c));
}

const BigInt& SeriesQ::at(std::size_t n) const {
  if (n >= coeffs_.size()) {
    throw OrderExceeded("coefficient q^" + std::to_string(n) +
                        " requested from a series of order " +
                        std::to_string(coeffs_.size()));
  }
  return coeffs_[n];
}

SeriesQ SeriesQ::truncated(std::size_t order) const {
  order = std::min(order, coeffs_.size());
  return SeriesQ(std::vector<BigInt>(coeffs_.begin(), coeffs_.begin() + order));
}

std::optional<std::size_t> SeriesQ::first_mismatch(const SeriesQ& other) const {
  const std::size_t n = std::min(order(), other.order());
  for (std::size_t i = 0; i < n; ++i) {
    if (coeffs_[i] != other.coeffs_[i]) return i;
  }
  return std::nullopt;
}

bool SeriesQ::agrees_with(const SeriesQ& other) const {
  return !first_mismatch(other).has_value();
}

SeriesQ& SeriesQ::operator+=(const SeriesQ& other) {
  coeffs_.resize(std::min(order(), other.order()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

SeriesQ& SeriesQ::operator-=(const SeriesQ& other) {
  coeffs_.resize(std::min(order(), other.order()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

SeriesQ& SeriesQ::operator*=(const BigInt& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

SeriesQ operator+(const SeriesQ& a, const SeriesQ& b) {
  SeriesQ r = a;
  r += b;
  return r;
}

SeriesQ operator-(const SeriesQ& a, const SeriesQ& b) {
  SeriesQ r = a;
  r -= b;
  return r;
}

SeriesQ operator-(const SeriesQ& a) {
  SeriesQ r = a;
  r *= BigInt(-1);
  return r;
}

SeriesQ operator*(const BigInt& scalar, const SeriesQ& a) {
  SeriesQ r = a;
  r *= scalar;
  return r;
}

SeriesQ operator*(const SeriesQ& a, const SeriesQ& b) {
  const std::size_t n = std::min(a.order(), b.order());
  auto ia = nonzero_indices(a.truncated(n));
  auto ib = nonzero_indices(b.truncated(n));
  const bool swap = ib.size() < ia.size();
  const SeriesQ& outer = swap ? b : a;
  const SeriesQ& inner = swap ? a : b;
  const auto& outer_idx = swap ? ib : ia;
  std::vector<BigInt> c(n);
  for (std::size_t i : outer_idx) {
    const BigInt& x = outer[i];
    for (std::size_t j = 0; i + j < n; ++j) {
      if (sgn(inner[j]) != 0) c[i + j] += x * inner[j];
    }
  }
  return SeriesQ(std::move(c));
}

SeriesQ inverse(const SeriesQ& a) {
  const std::size_t n = a.order();
  if (n == 0) return a;
  if (a[0] != 1 && a[0] != -1) {
    throw NonUnitConstantTerm("constant term " + a[0].get_str() +
                              " is not a unit");
  }
  const bool negative = a[0] < 0;
  std::vector<std::size_t> idx;
  for (std::size_t i = 1; i < n; ++i) {
    if (sgn(a[i]) != 0) idx.push_back(i);
  }
  std::vector<BigInt> b(n);
  b[0] = a[0];
  BigInt acc;
  for (std::size_t k = 1; k < n; ++k) {
    acc = 0;
    for (std::size_t i : idx) {
      if (i > k) break;
      acc += a[i] * b[k - i];
    }
    b[k] = negative ? acc : BigInt(-acc);
  }
  return SeriesQ(std::move(b));
}

SeriesQ negate_q(const SeriesQ& a) {
  auto c = to_vector(a);
  for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
  return SeriesQ(std::move(c));
}

SeriesQ subsequence(const SeriesQ& a, std::size_t stride, std::size_t offset) {
  if (stride == 0 || offset >= stride) {
    throw std::invalid_argument("subsequence needs 0 <= offset < stride");
  }
  const std::size_t n =
      a.order() > offset ? (a.order() - offset + stride - 1) / stride : 0;
  std::vector<BigInt> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = a[stride * i + offset];
  return SeriesQ(std::move(c));
}

SeriesQ interleave(const SeriesQ& even, const SeriesQ& odd) {
  const std::size_t n = std::min(2 * even.order(), 2 * odd.order() + 1);
  std::vector<BigInt> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = (i % 2 == 0) ? even[i / 2] : odd[i / 2];
  return SeriesQ(std::move(c));
}

SeriesQ shift(const SeriesQ& a, std::size_t k) {
  std::vector<BigInt> c(a.order());
  for (std::size_t i = k; i < c.size(); ++i) c[i] = a[i - k];
  return SeriesQ(std::move(c));
}

SeriesQ substitute_power(const SeriesQ& a, std::size_t k, std::size_t order) {
  if (k == 0) throw std::invalid_argument("substitute_power needs k >= 1");
  if (order > k * a.order()) {
    throw OrderExceeded("A(q^k) needs a longer source series");
  }
  std::vector<BigInt> c(order);
  for (std::size_t i = 0; i * k < order; ++i) c[i * k] = a[i];
  return SeriesQ(std::move(c));
}

SeriesQ divide_by_binomial(const SeriesQ& a, int sign, std::size_t e) {
  if (e == 0) throw NonUnitConstantTerm("factor 1 - sign*q^0 is not a unit");
  auto c = to_vector(a);
  for (std::size_t m = e; m < c.size(); ++m) {
    if (sign > 0) {
      c[m] += c[m - e];
    } else {
      c[m] -= c[m - e];
    }
  }
  return SeriesQ(std::move(c));
}

SeriesQ exact_divide(const SeriesQ& a, const BigInt& d) {
  auto c = to_vector(a);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!mpz_divisible_p(c[i].get_mpz_t(), d.get_mpz_t())) {
      throw IdentityMismatch("coefficient " + std::to_string(i) + " = " +
                             c[i].get_str() + " is not divisible by " +
                             d.get_str());
    }
    mpz_divexact(c[i].get_mpz_t(), c[i].get_mpz_t(), d.get_mpz_t());
  }
  return SeriesQ(std::move(c));
}

bool is_weakly_increasing(const SeriesQ& a) {
  for (std::size_t i = 1; i < a.order(); ++i) {
    if (a[i] < a[i - 1]) return false;
  }
  return true;
}

SeriesQ pochhammer(const PochSpec& spec, std::size_t order) {
  if (spec.base == 0 || spec.step == 0) {
    throw std::invalid_argument("pochhammer needs base >= 1 and step >= 1");
  }
  auto c = to_vector(SeriesQ::one(order));
  for (std::size_t j = 0; !spec.count || j < *spec.count; ++j) {
    const std::size_t e = spec.base + j * spec.step;
    if (e >= order) break;
    // multiply by (1 - sign q^e), high indices first
    for (std::size_t m = order; m-- > e;) {
      if (spec.sign > 0) {
        c[m] -= c[m - e];
      } else {
        c[m] += c[m - e];
      }
    }
  }
  return SeriesQ(std::move(c));
}

SeriesQ inverse_pochhammer(const PochSpec& spec, std::size_t order) {
  if (spec.base == 0 || spec.step == 0) {
    throw std::invalid_argument("pochhammer needs base >= 1 and step >= 1");
  }
  SeriesQ r = SeriesQ::one(order);
  for (std::size_t j = 0; !spec.count || j < *spec.count; ++j) {
    const std::size_t e = spec.base + j * spec.step;
    if (e >= order) break;
    r = divide_by_binomial(r, spec.sign, e);
  }
  return r;
}

SeriesQ theta_gap(long a, long b, ThetaRange range, std::size_t order) {
  if (a <= 0) throw std::invalid_argument("theta_gap needs a >= 1");
  std::vector<BigInt> c(order);
  const long limit = static_cast<long>(order);
  // exponent is increasing in |n| once |n| > |b| / a
  const long vertex = std::labs(b) / a + 1;
  auto sweep = [&](long direction) {
    for (long m = (direction > 0 ? 0 : 1);; ++m) {
      const long n = direction * m;
      const long e = a * n * n + b * n;
      if (m > vertex && e >= limit) break;
      add_term(c, e, 1);
    }
  };
  sweep(+1);
  if (range == ThetaRange::two_sided) sweep(-1);
  return SeriesQ(std::move(c));
}

SeriesQ pentagonal_signed(std::size_t order) {
  std::vector<BigInt> c(order);
  const long limit = static_cast<long>(order);
  for (long m = 0;; ++m) {
    const long lo = m * (3 * m - 1) / 2;  // n = -m
    const long hi = m * (3 * m + 1) / 2;  // n = m
    if (lo >= limit) break;
    add_term(c, hi, minus_one_pow(m));
    if (m > 0) add_term(c, lo, minus_one_pow(m));
  }
  return SeriesQ(std::move(c));
}

SeriesQ mock_f(std::size_t order) {
  SeriesQ sum(order);
  SeriesQ term = SeriesQ::one(order);
  for (std::size_t n = 0; n * n < order; ++n) {
    if (n > 0) {
      term = shift(term, 2 * n - 1);
      term = divide_by_binomial(term, -1, n);
      term = divide_by_binomial(term, -1, n);
    }
    sum += term;
  }
  return sum;
}

SeriesQ sigma_series(std::size_t order) {
  SeriesQ sum(order);
  SeriesQ term = SeriesQ::one(order);
  for (std::size_t n = 0; n * (n + 1) / 2 < order; ++n) {
    if (n > 0) term = divide_by_binomial(shift(term, n), -1, n);
    sum += term;
  }
  return sum;
}

SeriesQ phi_series(std::size_t order) {
  SeriesQ sum(order);
  SeriesQ term = SeriesQ::one(order);
  for (std::size_t n = 0; n * n < order; ++n) {
    if (n > 0) term = divide_by_binomial(shift(term, 2 * n - 1), -1, 2 * n);
    sum += term;
  }
  return sum;
}

SeriesQ appell_sum_doubled(long k, long l, std::size_t order) {
  std::vector<BigInt> c(order);
  const long limit = static_cast<long>(order);
  if (limit == 0) return SeriesQ(std::move(c));
  c[0] += 1;  // n = 0: 2 * (1/2)
  for (long m = 1;; ++m) {
    bool any = false;
    for (long n : {m, -m}) {
      const long twice = k * n * n + l * n;
      if (twice % 2 != 0) {
        throw std::invalid_argument("appell exponent (k n^2 + l n)/2 is not integral");
      }
      // for n < 0: 1/(1+q^n) = q^m/(1+q^m)
      const long e = twice / 2 + (n < 0 ? m : 0);
      if (e < 0) {
        throw NegativeExponent("appell summand exponent " + std::to_string(e) +
                               " is negative");
      }
      const int s = 2 * minus_one_pow(n);
      int alt = 1;
      for (long t = e; t < limit; t += m, alt = -alt) {
        c[t] += s * alt;
        any = true;
      }
    }
    if (!any && m * m > limit) break;
  }
  return SeriesQ(std::move(c));
}

SeriesQ mock_f_appell(std::size_t order) {
  return appell_sum_doubled(3, 1, order) *
         inverse_pochhammer(PochSpec::infinite(1, 1), order);
}

SeriesQ mock_f_appell_shifted(std::size_t order) {
  return BigInt(2) * SeriesQ::one(order) -
         appell_sum_doubled(3, 3, order) *
             inverse_pochhammer(PochSpec::infinite(1, 1), order);
}

namespace {

// sum_{n >= 0, -n <= j <= n} sign(n, j) q^{e(n, j)} (1 - q^{d(n)})
template <class Sign, class Exponent, class Offset, class MinExponent>
SeriesQ hecke_double_sum(std::size_t order, Sign sign, Exponent exponent,
                         Offset offset, MinExponent min_exponent) {
  std::vector<BigInt> c(order);
  const long limit = static_cast<long>(order);
  for (long n = 0; min_exponent(n) < limit; ++n) {
    for (long j = -n; j <= n; ++j) {
      const long e = exponent(n, j);
      const int s = sign(n, j);
      add_term(c, e, s);
      add_term(c, e + offset(n), -s);
    }
  }
  return SeriesQ(std::move(c));
}

}  // namespace

SeriesQ hecke_sigma(std::size_t order) {
  return hecke_double_sum(
      order, [](long n, long j) { return minus_one_pow(n + j); },
      [](long n, long j) { return n * (3 * n + 1) / 2 - j * j; },
      [](long n) { return 2 * n + 1; },
      [](long n) { return n * (n + 1) / 2; });
}

SeriesQ hecke_phi0(std::size_t order) {
  return hecke_double_sum(
             order, [](long, long j) { return minus_one_pow(j); },
             [](long n, long j) { return 4 * n * n + n - j * j; },
             [](long n) { return 6 * n + 3; },
             [](long n) { return 3 * n * n + n; }) *
         inverse_pochhammer(PochSpec::infinite(2, 2), order);
}

SeriesQ hecke_phi1(std::size_t order) {
  return hecke_double_sum(
             order, [](long, long j) { return minus_one_pow(j); },
             [](long n, long j) { return 4 * n * n + 3 * n - j * j; },
             [](long n) { return 2 * n + 1; },
             [](long n) { return 3 * n * n + 3 * n; }) *
         inverse_pochhammer(PochSpec::infinite(2, 2), order);
}

}  // namespace paritysep
