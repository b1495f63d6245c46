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

#include <functional>

#include "acspin/linalg.hpp"

namespace acspin {

struct NelderMeadOptions {
  double initial_step = 0.3;
  /// Stop when every vertex lies within x_tol of the best one (max-norm) ...
  double x_tol = 1e-12;
  /// ... or when the objective spread, measured after spread_scale, is below f_tol.
  double f_tol = 1e-14;
  std::function<double(double)> spread_scale;
  /// Stop once the best value drops to f_target or below.
  double f_target = -1.0;
  long max_evaluations = 20000;
  /// Dimension-dependent coefficients (Gao and Han 2012); plain 1/2/0.5/0.5 otherwise.
  bool adaptive = true;
};

struct NelderMeadResult {
  RVector x;
  double f = 0.0;
  long evaluations = 0;
  bool converged = false;
};

/// Derivative-free minimization of f starting from a simplex built around x0
/// with edges of length initial_step along the coordinate axes.
NelderMeadResult nelder_mead(const std::function<double(const RVector&)>& f, const RVector& x0,
                             const NelderMeadOptions& opts = {});

}  // namespace acspin
