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
#include "qnhe/ansatz.hpp"

#include <stdexcept>

namespace qnhe {

Circuit build_ansatz(const AnsatzSpec &spec, std::span<const double> params) {
  if (spec.n < 2 || spec.layers < 1) {
    throw std::invalid_argument("build_ansatz: need n >= 2 and layers >= 1");
  }
  if (params.size() != spec.param_count()) {
    throw std::invalid_argument("build_ansatz: parameter count mismatch");
  }
  Circuit c(spec.n);
  std::size_t k = 0;
  for (int layer = 0; layer < spec.layers; ++layer) {
    for (int q = 0; q < spec.n; ++q) c.append(Gate::rx(q, params[k++]));
    for (int pair = 0; pair < spec.entangler_pairs(); ++pair) {
      c.append(Gate::rzz(pair, (pair + 1) % spec.n, params[k++]));
    }
  }
  return c;
}

std::vector<double> initial_params(const AnsatzSpec &spec, RngStream &rng) {
  std::vector<double> params(spec.param_count());
  for (double &p : params) p = 0.2 * rng.next_double() - 0.1;
  return params;
}

}  // namespace qnhe
