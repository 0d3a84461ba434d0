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

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qnhe {

/// Hard cap on dense simulation size (2^24 amplitudes).
inline constexpr int kMaxQubits = 24;

/// Bit-order convention, fixed globally: qubit 0 is the most significant
/// bit of the amplitude index, so the bit string "q0 q1 ... q{n-1}" read
/// left to right is the index read in binary.
inline std::uint64_t qubit_bit(int n, int qubit) {
  return std::uint64_t{1} << (n - 1 - qubit);
}

inline int bit_of(std::uint64_t index, int n, int qubit) {
  return static_cast<int>((index >> (n - 1 - qubit)) & 1u);
}

std::string index_to_bits(std::uint64_t index, int n);
std::uint64_t bits_to_index(std::string_view bits);

/// Dense n-qubit state: 2^n complex amplitudes, unit norm.
struct StateVector {
  int n = 0;
  std::vector<std::complex<double>> amps;

  static StateVector zero_state(int n);

  std::uint64_t dim() const { return amps.size(); }
  double norm() const;
  /// Throws std::invalid_argument when the norm deviates from 1 by more
  /// than `tol`.
  void require_normalized(double tol = 1e-10) const;
};

std::complex<double> inner_product(const StateVector &a, const StateVector &b);

}  // namespace qnhe
