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
#include "qnhe/measurement.hpp"

#include <bit>
#include <numbers>
#include <stdexcept>

namespace qnhe {

std::string MeasurementPlan::tag() const {
  if (direct()) return kAnsatzTag;
  const char *prefix =
      variant == MeasurementVariant::Real ? "pauli-real:" : "pauli-imag:";
  return prefix + pauli.letters();
}

MeasurementPlan plan_measurement(const PauliString &p,
                                 MeasurementVariant variant) {
  MeasurementPlan plan;
  plan.pauli = p;
  plan.variant = variant;
  plan.suffix = Circuit(p.num_qubits());
  if (p.is_diagonal()) return plan;  // direct readout

  const int n = p.num_qubits();
  plan.star = p.lowest_xy_qubit();
  for (int q = plan.star + 1; q < n; ++q) {
    const char letter = p.letter(q);
    if (letter == 'X') {
      plan.suffix.append(Gate::cx(plan.star, q));
    } else if (letter == 'Y') {
      plan.suffix.append(Gate::cy(plan.star, q));
    }
  }
  if (variant == MeasurementVariant::Imag) {
    plan.suffix.append(Gate::rz(plan.star, std::numbers::pi / 2.0));
  }
  if (p.letter(plan.star) == 'X') {
    plan.suffix.append(Gate::h(plan.star));
  } else {
    plan.suffix.append(Gate::rx(plan.star, std::numbers::pi / 2.0));
  }
  return plan;
}

std::uint64_t pair_map(const PauliString &p, std::uint64_t s) {
  return s ^ p.x_mask();
}

std::uint64_t star_collapse(std::uint64_t s, int star, int n) {
  if (star < 0 || star >= n) {
    throw std::invalid_argument("star_collapse: star out of range");
  }
  return s & ~qubit_bit(n, star);
}

int star_sign(std::uint64_t s, int star, int n) {
  if (star < 0 || star >= n) {
    throw std::invalid_argument("star_sign: star out of range");
  }
  return (s & qubit_bit(n, star)) ? -1 : 1;
}

int z_parity_sign(const PauliString &p, std::uint64_t s) {
  return (std::popcount(s & p.z_only_mask()) & 1) ? -1 : 1;
}

int term_sign(const MeasurementPlan &plan, std::uint64_t s) {
  const int z = z_parity_sign(plan.pauli, s);
  if (plan.direct()) return z;
  return z * star_sign(s, plan.star, plan.pauli.num_qubits());
}

}  // namespace qnhe
