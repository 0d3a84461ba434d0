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

#include "qnhe/pauli.hpp"
#include "qnhe/statevector.hpp"

namespace qnhe {

struct GroundTruth {
  double e_gs = 0.0;
  StateVector ground_state;
  /// E_1 - E_0; ~0 flags a degenerate ground space, in which case the
  /// returned eigenvector is whichever one the deterministic solver picked.
  double degeneracy_gap = 0.0;
  /// ||H v - E v|| of the returned pair.
  double residual = 0.0;
};

struct GroundStateOptions {
  int max_iterations = 400;
  double residual_tol = 1e-9;
  std::uint64_t seed = 0x9d5f;
  bool force_dense = false;
  bool force_lanczos = false;
};

/// Lowest eigenpair of the Pauli-sum Hamiltonian. Dense diagonalization up
/// to n = 10; matrix-free Lanczos (full reorthogonalization) beyond, up to
/// n = 14. Throws on non-convergence, reporting the residual.
GroundTruth ground_state(const Hamiltonian &hamiltonian,
                         const GroundStateOptions &options = {});

}  // namespace qnhe
