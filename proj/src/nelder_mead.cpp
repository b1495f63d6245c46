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

#include "acspin/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "acspin/error.hpp"

namespace acspin {

NelderMeadResult nelder_mead(const std::function<double(const RVector&)>& f, const RVector& x0,
                             const NelderMeadOptions& opts) {
  const Eigen::Index n = x0.size();
  require(n >= 1, ErrorCode::invalid_argument, "nelder_mead: empty parameter vector");
  require(opts.max_evaluations >= n + 1, ErrorCode::invalid_argument, "nelder_mead: budget below simplex size");

  const double dn = static_cast<double>(n);
  const double rho = 1.0;
  const double chi = opts.adaptive ? 1.0 + 2.0 / dn : 2.0;
  const double psi = opts.adaptive ? 0.75 - 0.5 / dn : 0.5;
  const double sigma = opts.adaptive ? 1.0 - 1.0 / dn : 0.5;

  NelderMeadResult res;
  auto eval = [&](const RVector& x) {
    ++res.evaluations;
    const double v = f(x);
    return std::isfinite(v) ? v : std::numeric_limits<double>::infinity();
  };
  auto scaled = [&](double v) { return opts.spread_scale ? opts.spread_scale(v) : v; };

  std::vector<RVector> xs(n + 1, x0);
  std::vector<double> fs(n + 1);
  fs[0] = eval(x0);
  for (Eigen::Index i = 0; i < n; ++i) {
    xs[i + 1](i) += opts.initial_step;
    fs[i + 1] = eval(xs[i + 1]);
  }

  std::vector<std::size_t> order(n + 1);
  while (true) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return fs[a] < fs[b]; });
    {
      std::vector<RVector> x2(n + 1);
      std::vector<double> f2(n + 1);
      for (std::size_t k = 0; k <= static_cast<std::size_t>(n); ++k) {
        x2[k] = xs[order[k]];
        f2[k] = fs[order[k]];
      }
      xs.swap(x2);
      fs.swap(f2);
    }

    double xspread = 0.0;
    for (Eigen::Index k = 1; k <= n; ++k) xspread = std::max(xspread, (xs[k] - xs[0]).cwiseAbs().maxCoeff());
    const double fspread = scaled(fs[n]) - scaled(fs[0]);
    if (xspread <= opts.x_tol || fspread <= opts.f_tol || fs[0] <= opts.f_target) {
      res.converged = true;
      break;
    }
    if (res.evaluations >= opts.max_evaluations) break;

    RVector centroid = RVector::Zero(n);
    for (Eigen::Index k = 0; k < n; ++k) centroid += xs[k];
    centroid /= dn;

    const RVector xr = centroid + rho * (centroid - xs[n]);
    const double fr = eval(xr);
    if (fr < fs[0]) {
      const RVector xe = centroid + rho * chi * (centroid - xs[n]);
      const double fe = eval(xe);
      if (fe < fr) {
        xs[n] = xe;
        fs[n] = fe;
      } else {
        xs[n] = xr;
        fs[n] = fr;
      }
      continue;
    }
    if (fr < fs[n - 1]) {
      xs[n] = xr;
      fs[n] = fr;
      continue;
    }
    bool shrink = false;
    if (fr < fs[n]) {
      const RVector xc = centroid + psi * rho * (centroid - xs[n]);
      const double fc = eval(xc);
      if (fc <= fr) {
        xs[n] = xc;
        fs[n] = fc;
      } else {
        shrink = true;
      }
    } else {
      const RVector xcc = centroid - psi * (centroid - xs[n]);
      const double fcc = eval(xcc);
      if (fcc < fs[n]) {
        xs[n] = xcc;
        fs[n] = fcc;
      } else {
        shrink = true;
      }
    }
    if (shrink) {
      for (Eigen::Index k = 1; k <= n; ++k) {
        xs[k] = xs[0] + sigma * (xs[k] - xs[0]);
        fs[k] = eval(xs[k]);
      }
    }
  }
  res.x = xs[0];
  res.f = fs[0];
  return res;
}

}  // namespace acspin
