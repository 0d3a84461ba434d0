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

#include <cstdint>
#include <string>

#include "qnhe/pauli.hpp"
#include "qnhe/simulator.hpp"

namespace qnhe {

enum class MeasurementVariant { Real, Imag };

/// Readout transformation for one Pauli term. The suffix is appended to
/// the ansatz circuit; pure-Z/I terms are "direct" (no suffix, no star)
/// and read out from the bare ansatz samples.
///
/// Construction (certified against the exact-expectation oracle, which is
/// the arbiter for all basis/sign conventions here):
///   1. for every non-star qubit j in the X/Y support, controlled-X or
///      controlled-Y with control = star, target = j; this folds the pair
///      partner of each outcome onto the star qubit while leaving the pair
///      label (all non-star bits) intact,
///   2. for the imaginary variant only, RZ(+pi/2) on the star,
///   3. H on the star when its letter is X, RX(+pi/2) when Y.
/// Plain-Z letters are read out directly; their sign enters through
/// term_sign, not through the circuit.
struct MeasurementPlan {
  PauliString pauli{1};
  MeasurementVariant variant = MeasurementVariant::Real;
  int star = -1;  // -1: direct readout (diagonal term)
  Circuit suffix;

  bool direct() const { return star < 0; }
  /// SampleSet tag for the circuit this plan measures.
  std::string tag() const;
};

MeasurementPlan plan_measurement(const PauliString &p,
                                 MeasurementVariant variant);

/// Flips the bits of s on the X/Y support of P (an involution).
std::uint64_t pair_map(const PauliString &p, std::uint64_t s);

/// Sets the star-qubit bit of s to zero.
std::uint64_t star_collapse(std::uint64_t s, int star, int n);

/// (-1)^{s_star}.
int star_sign(std::uint64_t s, int star, int n);

/// (-1)^{parity of s on the plain-Z support of P}.
int z_parity_sign(const PauliString &p, std::uint64_t s);

/// Measured eigenvalue sign of P for outcome s under `plan`:
/// star_sign * z_parity_sign for starred plans, z_parity_sign for direct.
int term_sign(const MeasurementPlan &plan, std::uint64_t s);

}  // namespace qnhe
