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

#pragma once

#include <span>

namespace acspin {

/// A half-integer stored as twice its value.
struct HalfInt {
  int twice = 0;

  static HalfInt from_twice(int t) { return HalfInt{t}; }
  /// Rejects values that are not within 1e-9 of a multiple of 1/2.
  static HalfInt from_value(double v);
  double value() const { return 0.5 * twice; }
};

// Coupling coefficients, Condon-Shortley phase convention. All sums are
// carried out in exact rational arithmetic; only the final square root is
// taken in double precision.

/// <j1 m1, j2 m2 | J M>. Zero when M != m1 + m2 or the triangle rule fails.
double clebsch_gordan(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt J, HalfInt M);
double clebsch_gordan(double j1, double m1, double j2, double m2, double J, double M);

/// {j1 j2 j3; j4 j5 j6} by the Racah sum. Zero if any triad fails the
/// triangle rule.
double wigner_6j(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt j4, HalfInt j5, HalfInt j6);
double wigner_6j(double j1, double j2, double j3, double j4, double j5, double j6);

/// sqrt( prod_i num_i! / prod_k den_k! ), exact up to the final rounding.
double sqrt_factorial_ratio(std::span<const int> num, std::span<const int> den);

}  // namespace acspin
