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
#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace qnhe {

struct NelderMeadOptions {
  std::size_t max_evals = 20000;
  double f_tol = 1e-10;      // simplex spread convergence threshold
  double init_step = 0.25;   // initial simplex edge
  int restarts = 2;          // re-seeded simplexes around the incumbent
};

struct NelderMeadResult {
  std::vector<double> x;
  double fx = 0.0;
  std::size_t evals = 0;
  /// Best-so-far improvements as (evaluation index, value).
  std::vector<std::pair<std::size_t, double>> best_trace;
};

/// Derivative-free simplex minimizer (deterministic). Exhausting the
/// budget returns the best point found rather than failing.
NelderMeadResult nelder_mead(
    const std::function<double(std::span<const double>)> &fn,
    std::vector<double> x0, const NelderMeadOptions &options = {});

}  // namespace qnhe
