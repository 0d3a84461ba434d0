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
#include "qnhe/statevector.hpp"

#include <cmath>
#include <stdexcept>

namespace qnhe {

std::string index_to_bits(std::uint64_t index, int n) {
  std::string out(static_cast<std::size_t>(n), '0');
  for (int q = 0; q < n; ++q) {
    if (bit_of(index, n, q)) out[static_cast<std::size_t>(q)] = '1';
  }
  return out;
}

std::uint64_t bits_to_index(std::string_view bits) {
  std::uint64_t index = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("bits_to_index: bit string must be 0/1");
    }
    index = (index << 1) | static_cast<std::uint64_t>(c == '1');
  }
  return index;
}

StateVector StateVector::zero_state(int n) {
  if (n < 1 || n > kMaxQubits) {
    throw std::invalid_argument("StateVector: qubit count out of range");
  }
  StateVector v;
  v.n = n;
  v.amps.assign(std::uint64_t{1} << n, {0.0, 0.0});
  v.amps[0] = {1.0, 0.0};
  return v;
}

double StateVector::norm() const {
  double total = 0.0;
  for (const auto &a : amps) total += std::norm(a);
  return std::sqrt(total);
}

void StateVector::require_normalized(double tol) const {
  if (std::abs(norm() - 1.0) > tol) {
    throw std::invalid_argument("state vector is not normalized");
  }
}

std::complex<double> inner_product(const StateVector &a, const StateVector &b) {
  if (a.n != b.n) throw std::invalid_argument("inner_product: size mismatch");
  std::complex<double> acc{0.0, 0.0};
  for (std::uint64_t s = 0; s < a.dim(); ++s) {
    acc += std::conj(a.amps[s]) * b.amps[s];
  }
  return acc;
}

}  // namespace qnhe
