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

#include <span>
#include <vector>

#include "qnhe/pauli.hpp"
#include "qnhe/rng.hpp"
#include "qnhe/simulator.hpp"

namespace qnhe {

/// Hardware-efficient trial circuit: per layer, an RX wall followed by a
/// nearest-neighbor RZZ chain (ring when periodic).
struct AnsatzSpec {
  int n = 0;
  int layers = 1;
  Boundary boundary = Boundary::Open;

  int entangler_pairs() const {
    return boundary == Boundary::Periodic ? n : n - 1;
  }
  std::size_t param_count() const {
    return static_cast<std::size_t>(layers) *
           static_cast<std::size_t>(n + entangler_pairs());
  }
};

/// Requires params.size() == spec.param_count().
Circuit build_ansatz(const AnsatzSpec &spec, std::span<const double> params);

/// Uniform random angles in [-0.1, 0.1]; small init keeps the start near
/// |0...0> on flat landscapes.
std::vector<double> initial_params(const AnsatzSpec &spec, RngStream &rng);

}  // namespace qnhe
