// Copyright 2026 The qnhe authors
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
#include "qnhe/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qnhe {

namespace {

struct SimplexPoint {
  std::vector<double> x;
  double fx;
};

}  // namespace

NelderMeadResult nelder_mead(
    const std::function<double(std::span<const double>)> &fn,
    std::vector<double> x0, const NelderMeadOptions &options) {
  if (x0.empty()) throw std::invalid_argument("nelder_mead: empty start point");
  const std::size_t dim = x0.size();
  constexpr double kAlpha = 1.0;  // reflection
  constexpr double kGamma = 2.0;  // expansion
  constexpr double kRho = 0.5;    // contraction
  constexpr double kSigma = 0.5;  // shrink

  NelderMeadResult result;
  result.x = x0;
  result.fx = fn(x0);
  result.evals = 1;
  result.best_trace.emplace_back(result.evals, result.fx);

  auto eval = [&](const std::vector<double> &x) {
    const double fx = fn(x);
    ++result.evals;
    if (fx < result.fx) {
      result.fx = fx;
      result.x = x;
      result.best_trace.emplace_back(result.evals, fx);
    }
    return fx;
  };

  double step = options.init_step;
  for (int round = 0; round <= options.restarts; ++round) {
    if (result.evals >= options.max_evals) break;

    std::vector<SimplexPoint> simplex;
    simplex.reserve(dim + 1);
    simplex.push_back({result.x, result.fx});
    for (std::size_t i = 0; i < dim && result.evals < options.max_evals; ++i) {
      std::vector<double> x = result.x;
      x[i] += step;
      simplex.push_back({x, eval(x)});
    }
    if (simplex.size() < dim + 1) break;

    while (result.evals < options.max_evals) {
      std::sort(simplex.begin(), simplex.end(),
                [](const SimplexPoint &a, const SimplexPoint &b) {
                  return a.fx < b.fx;
                });
      if (simplex.back().fx - simplex.front().fx < options.f_tol) break;

      std::vector<double> centroid(dim, 0.0);
      for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) centroid[j] += simplex[i].x[j];
      }
      for (double &c : centroid) c /= static_cast<double>(dim);

      const SimplexPoint &worst = simplex.back();
      std::vector<double> reflected(dim);
      for (std::size_t j = 0; j < dim; ++j) {
        reflected[j] = centroid[j] + kAlpha * (centroid[j] - worst.x[j]);
      }
      const double f_reflected = eval(reflected);

      if (f_reflected < simplex.front().fx) {
        std::vector<double> expanded(dim);
        for (std::size_t j = 0; j < dim; ++j) {
          expanded[j] = centroid[j] + kGamma * (reflected[j] - centroid[j]);
        }
        const double f_expanded = eval(expanded);
        simplex.back() = f_expanded < f_reflected
                             ? SimplexPoint{expanded, f_expanded}
                             : SimplexPoint{reflected, f_reflected};
        continue;
      }
      if (f_reflected < simplex[dim - 1].fx) {
        simplex.back() = {reflected, f_reflected};
        continue;
      }
      std::vector<double> contracted(dim);
      for (std::size_t j = 0; j < dim; ++j) {
        contracted[j] = centroid[j] + kRho * (worst.x[j] - centroid[j]);
      }
      const double f_contracted = eval(contracted);
      if (f_contracted < worst.fx) {
        simplex.back() = {contracted, f_contracted};
        continue;
      }
      // Shrink toward the best vertex.
      for (std::size_t i = 1; i <= dim && result.evals < options.max_evals;
           ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
          simplex[i].x[j] = simplex[0].x[j] +
                            kSigma * (simplex[i].x[j] - simplex[0].x[j]);
        }
        simplex[i].fx = eval(simplex[i].x);
      }
    }
    step *= 0.25;  // tighter simplex around the incumbent on restart
  }
  return result;
}

}  // namespace qnhe
