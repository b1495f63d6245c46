// Copyright 2026 The acspin Authors
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

#include "acspin/wigner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

#include "acspin/error.hpp"

namespace acspin {

namespace {

using BigInt = boost::multiprecision::mpz_int;
using BigRational = boost::multiprecision::mpq_rational;

// Small factorials are cached; larger ones come straight from GMP.
BigInt factorial(int n) {
  constexpr int kCached = 2048;
  static std::mutex mutex;
  static std::vector<BigInt> table{BigInt(1)};
  require(n >= 0, ErrorCode::invalid_argument, "factorial of a negative number");
  if (n >= kCached) {
    BigInt out;
    mpz_fac_ui(out.backend().data(), static_cast<unsigned long>(n));
    return out;
  }
  std::lock_guard<std::mutex> lock(mutex);
  while (static_cast<int>(table.size()) <= n) {
    const BigInt next = table.back() * static_cast<long>(table.size());
    table.push_back(next);
  }
  return table[n];
}

// sign(s) * sqrt(prefactor * s^2), with prefactor >= 0.
double signed_sqrt(const BigRational& prefactor, const BigRational& s) {
  if (s == 0) return 0.0;
  const BigRational squared = prefactor * s * s;
  const double mag = std::sqrt(squared.convert_to<double>());
  return s < 0 ? -mag : mag;
}

bool triangle(int a, int b, int c) {  // arguments are doubled
  return c >= std::abs(a - b) && c <= a + b && (a + b + c) % 2 == 0;
}

void check_projection(HalfInt j, HalfInt m) {
  require(j.twice >= 0 && std::abs(m.twice) <= j.twice && (j.twice - m.twice) % 2 == 0,
          ErrorCode::invalid_argument, "malformed angular momentum pair (j, m)");
}

// Triangle coefficient squared: (a+b-c)!(a-b+c)!(-a+b+c)!/(a+b+c+1)!
BigRational delta_squared(int a, int b, int c) {
  return BigRational(factorial((a + b - c) / 2) * factorial((a - b + c) / 2) * factorial((-a + b + c) / 2),
                     factorial((a + b + c) / 2 + 1));
}

}  // namespace

HalfInt HalfInt::from_value(double v) {
  const double t = 2.0 * v;
  const double r = std::round(t);
  require(std::isfinite(v) && std::abs(t - r) < 1e-9, ErrorCode::invalid_argument,
          "value is not a half-integer");
  return HalfInt{static_cast<int>(r)};
}

double clebsch_gordan(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt J, HalfInt M) {
  check_projection(j1, m1);
  check_projection(j2, m2);
  check_projection(J, M);
  if (m1.twice + m2.twice != M.twice) return 0.0;
  if (!triangle(j1.twice, j2.twice, J.twice)) return 0.0;

  // Everything below in units of 1 (all combinations are integers).
  const int a = (j1.twice + j2.twice - J.twice) / 2;
  const int b = (j1.twice - m1.twice) / 2;
  const int c = (j2.twice + m2.twice) / 2;
  const int d = (J.twice - j2.twice + m1.twice) / 2;
  const int e = (J.twice - j1.twice - m2.twice) / 2;
  const int kmin = std::max({0, -d, -e});
  const int kmax = std::min({a, b, c});
  if (kmin > kmax) return 0.0;

  BigRational sum = 0;
  for (int k = kmin; k <= kmax; ++k) {
    const BigInt den = factorial(k) * factorial(a - k) * factorial(b - k) * factorial(c - k) *
                       factorial(d + k) * factorial(e + k);
    BigRational term(BigInt(1), den);
    if (k % 2) term = -term;
    sum += term;
  }

  const BigInt num = BigInt(J.twice + 1) * factorial((J.twice + j1.twice - j2.twice) / 2) *
                     factorial((J.twice - j1.twice + j2.twice) / 2) * factorial(a) *
                     factorial((J.twice + M.twice) / 2) * factorial((J.twice - M.twice) / 2) *
                     factorial((j1.twice - m1.twice) / 2) * factorial((j1.twice + m1.twice) / 2) *
                     factorial((j2.twice - m2.twice) / 2) * factorial((j2.twice + m2.twice) / 2);
  const BigRational prefactor(num, factorial((j1.twice + j2.twice + J.twice) / 2 + 1));
  return signed_sqrt(prefactor, sum);
}

double clebsch_gordan(double j1, double m1, double j2, double m2, double J, double M) {
  return clebsch_gordan(HalfInt::from_value(j1), HalfInt::from_value(m1), HalfInt::from_value(j2),
                        HalfInt::from_value(m2), HalfInt::from_value(J), HalfInt::from_value(M));
}

double wigner_6j(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt j4, HalfInt j5, HalfInt j6) {
  for (HalfInt x : {j1, j2, j3, j4, j5, j6})
    require(x.twice >= 0, ErrorCode::invalid_argument, "6j: negative angular momentum");
  const int a = j1.twice, b = j2.twice, c = j3.twice, d = j4.twice, e = j5.twice, f = j6.twice;
  if (!triangle(a, b, c) || !triangle(a, e, f) || !triangle(d, b, f) || !triangle(d, e, c)) return 0.0;

  const int t1 = (a + b + c) / 2, t2 = (a + e + f) / 2, t3 = (d + b + f) / 2, t4 = (d + e + c) / 2;
  const int p1 = (a + b + d + e) / 2, p2 = (a + c + d + f) / 2, p3 = (b + c + e + f) / 2;
  const int kmin = std::max({t1, t2, t3, t4});
  const int kmax = std::min({p1, p2, p3});
  if (kmin > kmax) return 0.0;

  BigRational sum = 0;
  for (int k = kmin; k <= kmax; ++k) {
    const BigInt den = factorial(k - t1) * factorial(k - t2) * factorial(k - t3) * factorial(k - t4) *
                       factorial(p1 - k) * factorial(p2 - k) * factorial(p3 - k);
    BigRational term(factorial(k + 1), den);
    if (k % 2) term = -term;
    sum += term;
  }
  const BigRational prefactor =
      delta_squared(a, b, c) * delta_squared(a, e, f) * delta_squared(d, b, f) * delta_squared(d, e, c);
  return signed_sqrt(prefactor, sum);
}

double wigner_6j(double j1, double j2, double j3, double j4, double j5, double j6) {
  return wigner_6j(HalfInt::from_value(j1), HalfInt::from_value(j2), HalfInt::from_value(j3),
                   HalfInt::from_value(j4), HalfInt::from_value(j5), HalfInt::from_value(j6));
}

double sqrt_factorial_ratio(std::span<const int> num, std::span<const int> den) {
  BigInt n = 1, dd = 1;
  for (int x : num) n *= factorial(x);
  for (int x : den) dd *= factorial(x);
  const BigRational r(n, dd);
  return std::sqrt(r.convert_to<double>());
}

}  // namespace acspin
