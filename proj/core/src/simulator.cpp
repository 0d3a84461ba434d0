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
#include "qnhe/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace qnhe {

namespace {

using cplx = std::complex<double>;

// Applies a generic 2x2 matrix to the target qubit.
void apply_1q(StateVector &v, int q, cplx m00, cplx m01, cplx m10, cplx m11) {
  const std::uint64_t bit = qubit_bit(v.n, q);
  const std::uint64_t dim = v.dim();
  for (std::uint64_t s = 0; s < dim; ++s) {
    if (s & bit) continue;
    const cplx a0 = v.amps[s];
    const cplx a1 = v.amps[s | bit];
    v.amps[s] = m00 * a0 + m01 * a1;
    v.amps[s | bit] = m10 * a0 + m11 * a1;
  }
}

// Diagonal phase on the target qubit: diag(d0, d1).
void apply_1q_diag(StateVector &v, int q, cplx d0, cplx d1) {
  const std::uint64_t bit = qubit_bit(v.n, q);
  for (std::uint64_t s = 0; s < v.dim(); ++s) {
    v.amps[s] *= (s & bit) ? d1 : d0;
  }
}

void apply_controlled(StateVector &v, int control, int target, bool is_y) {
  const std::uint64_t cbit = qubit_bit(v.n, control);
  const std::uint64_t tbit = qubit_bit(v.n, target);
  const std::uint64_t dim = v.dim();
  for (std::uint64_t s = 0; s < dim; ++s) {
    if (!(s & cbit) || (s & tbit)) continue;
    // s has control=1, target=0; partner has target=1.
    const std::uint64_t t = s | tbit;
    const cplx a0 = v.amps[s];
    const cplx a1 = v.amps[t];
    if (is_y) {
      // Y = [[0, -i], [i, 0]]
      v.amps[s] = cplx{0.0, -1.0} * a1;
      v.amps[t] = cplx{0.0, 1.0} * a0;
    } else {
      v.amps[s] = a1;
      v.amps[t] = a0;
    }
  }
}

}  // namespace

Circuit::Circuit(int n) : n(n) {
  if (n < 1 || n > kMaxQubits) {
    throw std::invalid_argument("Circuit: qubit count out of range");
  }
}

void Circuit::append(const Gate &g) {
  if (g.q0 < 0 || g.q0 >= n) {
    throw std::invalid_argument("Circuit: gate target out of range");
  }
  if (g.two_qubit()) {
    if (g.q1 < 0 || g.q1 >= n || g.q1 == g.q0) {
      throw std::invalid_argument("Circuit: invalid second qubit");
    }
  }
  if (!std::isfinite(g.angle)) {
    throw std::invalid_argument("Circuit: gate angle must be finite");
  }
  gates.push_back(g);
}

void Circuit::append(const Circuit &suffix) {
  if (suffix.n != n) throw std::invalid_argument("Circuit: size mismatch");
  for (const auto &g : suffix.gates) append(g);
}

void apply_gate(StateVector &v, const Gate &g) {
  constexpr double kInvSqrt2 = 0.70710678118654752440084436210485;
  switch (g.kind) {
    case Gate::Kind::H:
      apply_1q(v, g.q0, kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2);
      break;
    case Gate::Kind::X:
      apply_1q(v, g.q0, 0.0, 1.0, 1.0, 0.0);
      break;
    case Gate::Kind::RX: {
      const double c = std::cos(g.angle / 2.0);
      const double s = std::sin(g.angle / 2.0);
      apply_1q(v, g.q0, c, cplx{0.0, -s}, cplx{0.0, -s}, c);
      break;
    }
    case Gate::Kind::RZ: {
      const cplx d0 = std::polar(1.0, -g.angle / 2.0);
      const cplx d1 = std::polar(1.0, g.angle / 2.0);
      apply_1q_diag(v, g.q0, d0, d1);
      break;
    }
    case Gate::Kind::SDG:
      apply_1q_diag(v, g.q0, 1.0, cplx{0.0, -1.0});
      break;
    case Gate::Kind::RZZ: {
      // exp(-i angle/2 Z Z): phase by the parity of the two bits.
      const cplx even = std::polar(1.0, -g.angle / 2.0);
      const cplx odd = std::polar(1.0, g.angle / 2.0);
      const std::uint64_t b0 = qubit_bit(v.n, g.q0);
      const std::uint64_t b1 = qubit_bit(v.n, g.q1);
      for (std::uint64_t s = 0; s < v.dim(); ++s) {
        const bool parity = ((s & b0) != 0) != ((s & b1) != 0);
        v.amps[s] *= parity ? odd : even;
      }
      break;
    }
    case Gate::Kind::CX:
      apply_controlled(v, g.q0, g.q1, false);
      break;
    case Gate::Kind::CY:
      apply_controlled(v, g.q0, g.q1, true);
      break;
  }
}

void apply_circuit(StateVector &v, const Circuit &c) {
  if (c.n != v.n) throw std::invalid_argument("apply_circuit: size mismatch");
  for (const auto &g : c.gates) apply_gate(v, g);
}

StateVector run_circuit(const Circuit &c) {
  StateVector v = StateVector::zero_state(c.n);
  apply_circuit(v, c);
  return v;
}

std::vector<double> probabilities(const StateVector &v) {
  v.require_normalized();
  std::vector<double> q(v.dim());
  for (std::uint64_t s = 0; s < v.dim(); ++s) q[s] = std::norm(v.amps[s]);
  return q;
}

SampleSet sample(const StateVector &v, std::uint64_t shots, RngStream &rng,
                 std::string tag) {
  if (shots == 0) throw std::invalid_argument("sample: shots must be >= 1");
  const std::vector<double> probs = probabilities(v);
  // Inverse-CDF on the cumulative table; 2^n stays desk-sized here.
  std::vector<double> cdf(probs.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    acc += probs[i];
    cdf[i] = acc;
  }
  cdf.back() = 1.0;
  SampleSet out;
  out.n = v.n;
  out.shots = shots;
  out.tag = std::move(tag);
  for (std::uint64_t i = 0; i < shots; ++i) {
    const double u = rng.next_double();
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    const auto idx = static_cast<std::uint64_t>(it - cdf.begin());
    out.counts[idx] += 1.0;
  }
  return out;
}

SampleSet exact_distribution(const StateVector &v, std::string tag) {
  const std::vector<double> probs = probabilities(v);
  SampleSet out;
  out.n = v.n;
  out.shots = 0;
  out.tag = std::move(tag);
  out.exact = true;
  for (std::uint64_t s = 0; s < probs.size(); ++s) {
    if (probs[s] > 0.0) out.counts[s] = probs[s];
  }
  return out;
}

}  // namespace qnhe
