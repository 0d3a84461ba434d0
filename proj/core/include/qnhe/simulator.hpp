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
#include <unordered_map>
#include <vector>

#include "qnhe/rng.hpp"
#include "qnhe/statevector.hpp"

namespace qnhe {

struct Gate {
  enum class Kind { H, RX, RZ, RZZ, CX, CY, SDG, X };

  Kind kind;
  int q0 = 0;
  int q1 = -1;        // second qubit for RZZ/CX/CY (control for CX/CY is q0)
  double angle = 0.0;  // RX/RZ/RZZ only

  static Gate h(int q) { return {Kind::H, q}; }
  static Gate rx(int q, double angle) { return {Kind::RX, q, -1, angle}; }
  static Gate rz(int q, double angle) { return {Kind::RZ, q, -1, angle}; }
  static Gate rzz(int a, int b, double angle) { return {Kind::RZZ, a, b, angle}; }
  static Gate cx(int control, int target) { return {Kind::CX, control, target}; }
  static Gate cy(int control, int target) { return {Kind::CY, control, target}; }
  static Gate sdg(int q) { return {Kind::SDG, q}; }
  static Gate x(int q) { return {Kind::X, q}; }

  bool two_qubit() const {
    return kind == Kind::RZZ || kind == Kind::CX || kind == Kind::CY;
  }
};

struct Circuit {
  int n = 0;
  std::vector<Gate> gates;

  Circuit() = default;
  explicit Circuit(int n);

  /// Validates target indices on insertion.
  void append(const Gate &g);
  void append(const Circuit &suffix);
};

void apply_gate(StateVector &v, const Gate &g);
void apply_circuit(StateVector &v, const Circuit &c);

/// (product of gates)|0...0>.
StateVector run_circuit(const Circuit &c);

/// Born distribution q(s) = |amps[s]|^2, indexed by bit string as integer.
std::vector<double> probabilities(const StateVector &v);

/// Shot-labelled multiset of bit strings from one measurement circuit.
/// In shot mode `counts` holds integral occurrence counts summing to
/// `shots`; in exact mode it holds Born probabilities summing to one
/// (probabilities stand in for counts so every estimator admits an
/// infinite-shot evaluation through the same code path).
struct SampleSet {
  int n = 0;
  std::uint64_t shots = 0;
  std::string tag;
  std::unordered_map<std::uint64_t, double> counts;
  bool exact = false;

  /// Total weight normalizer: `shots` in shot mode, 1 in exact mode.
  double weight_norm() const { return exact ? 1.0 : static_cast<double>(shots); }
};

/// i.i.d. computational-basis samples; deterministic given the stream.
SampleSet sample(const StateVector &v, std::uint64_t shots, RngStream &rng,
                 std::string tag);

/// Exact-probability stand-in for sample() (infinite-shot limit).
SampleSet exact_distribution(const StateVector &v, std::string tag);

inline constexpr const char *kAnsatzTag = "ansatz-identity";

}  // namespace qnhe
