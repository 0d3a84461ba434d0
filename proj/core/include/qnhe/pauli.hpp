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
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qnhe/statevector.hpp"

namespace qnhe {

/// Tensor product of single-qubit Paulis over n qubits, stored as X/Z bit
/// masks in index space (a Y letter sets both masks).
class PauliString {
 public:
  /// Identity on n qubits.
  explicit PauliString(int n);
  /// Parse e.g. "XIZY"; qubit 0 is the leftmost character.
  static PauliString from_letters(std::string_view letters);

  int num_qubits() const { return n_; }
  char letter(int qubit) const;
  std::string letters() const;

  std::uint64_t x_mask() const { return x_mask_; }  // X or Y letters
  std::uint64_t z_mask() const { return z_mask_; }  // Z or Y letters
  std::uint64_t z_only_mask() const { return z_mask_ & ~x_mask_; }

  bool is_identity() const { return x_mask_ == 0 && z_mask_ == 0; }
  /// True when the string has no X/Y letters (diagonal in the Z basis).
  bool is_diagonal() const { return x_mask_ == 0; }
  /// Lowest-index qubit carrying an X or Y letter, -1 if diagonal.
  int lowest_xy_qubit() const;
  int weight_y() const;

  friend bool operator==(const PauliString &, const PauliString &) = default;

 private:
  PauliString(int n, std::uint64_t x, std::uint64_t z)
      : n_(n), x_mask_(x), z_mask_(z) {}

  int n_;
  std::uint64_t x_mask_;
  std::uint64_t z_mask_;
};

struct PauliStringHash {
  std::size_t operator()(const PauliString &p) const noexcept;
};

/// Weighted sum of Pauli strings with real coefficients. Construction
/// merges duplicate strings and drops |c| < 1e-15.
struct Hamiltonian {
  int n = 0;
  std::vector<std::pair<double, PauliString>> terms;

  static Hamiltonian from_terms(
      int n, const std::vector<std::pair<double, PauliString>> &raw);

  /// Sum of |c_P|; used by training divergence guards.
  double coeff_l1() const;
};

enum class Boundary { Open, Periodic };

/// H = -sum_i Z_i Z_{i+1} - h sum_i X_i. Requires n >= 2.
Hamiltonian build_tfim(int n, double h, Boundary boundary);

/// P|v>. X flips the bit, Z multiplies by (-1)^bit, Y flips and multiplies
/// by +/-i.
StateVector apply_pauli(const PauliString &p, const StateVector &v);

/// <v|P|v> as a complex number (imaginary part is a numerical residue).
std::complex<double> pauli_expectation(const PauliString &p,
                                       const StateVector &v);

/// sum_P c_P <v|P|v>. Requires v normalized within 1e-10.
double exact_expectation(const Hamiltonian &h, const StateVector &v);

/// H|v> as a dense vector (matrix-free Pauli-sum action).
StateVector apply_hamiltonian(const Hamiltonian &h, const StateVector &v);

}  // namespace qnhe
