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

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qnhe/measurement.hpp"
#include "qnhe/neural.hpp"
#include "qnhe/pauli.hpp"
#include "qnhe/simulator.hpp"

namespace qnhe {

/// Nonnegative reweighting f(s) (diagonal amplitude filter).
using WeightFn = std::function<double(std::uint64_t)>;
/// Real phase g(s) defining the diagonal unitary diag(e^{i g(s)}).
using PhaseFn = std::function<double(std::uint64_t)>;

/// Thrown when the empirical normalization sum is zero or non-finite; in
/// training this signals catastrophic support mismatch, not a bug.
class degenerate_denominator_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shot data for one Pauli term. Diagonal terms are read out from the
/// shared ansatz samples and carry no sample sets of their own.
struct TermMeasurement {
  double coeff = 0.0;
  PauliString pauli{1};
  MeasurementPlan real_plan;
  std::optional<MeasurementPlan> imag_plan;
  SampleSet real;
  std::optional<SampleSet> imag;
};

/// One round of measurement data: the ansatz (identity-basis) samples plus
/// per-term measurement-circuit samples. Born probabilities may stand in
/// for counts (exact mode) so the same estimators admit an infinite-shot
/// evaluation.
struct MeasurementDataset {
  int n = 0;
  Hamiltonian hamiltonian;
  SampleSet ansatz;
  std::vector<TermMeasurement> terms;  // parallel to hamiltonian.terms
  bool exact = false;

  const SampleSet &samples_for(const TermMeasurement &term) const {
    return term.real_plan.direct() ? ansatz : term.real;
  }
};

/// Measurement suffixes applied to a prepared state |psi>, probabilities
/// taken exactly (no sampling).
MeasurementDataset build_exact_dataset(const StateVector &psi,
                                       const Hamiltonian &hamiltonian,
                                       bool with_imag);

/// Shot sampling; every circuit draws from its own stream derived from
/// (rng, circuit tag), so the dataset is independent of evaluation order.
MeasurementDataset build_sampled_dataset(const StateVector &psi,
                                         const Hamiltonian &hamiltonian,
                                         std::uint64_t shots_ansatz,
                                         std::uint64_t shots_term,
                                         const RngStream &rng, bool with_imag);

struct EnergyEstimate {
  double value = 0.0;
  /// Per-term numerators N_f(P) (DNP) or shot averages (VQE/U-VQNHE).
  std::vector<std::pair<PauliString, double>> per_term;
  /// Z_f; present only for the DNP ratio estimator.
  std::optional<double> denominator;
  /// Shots per circuit tag (0 in exact mode).
  std::vector<std::pair<std::string, std::uint64_t>> shots_used;
};

/// Plain VQE shot average; coincides with the f == 1 DNP numerator with
/// unit denominator.
EnergyEstimate vqe_energy(const MeasurementDataset &data);

/// <psi|D_f H D_f|psi> / <psi|D_f^2|psi> by dense algebra.
double dnp_exact_energy(const StateVector &psi, const WeightFn &f,
                        const Hamiltonian &hamiltonian);

/// Finite-shot DNP ratio estimator:
///   N_f(P) = (1/M_P) sum_i sigma_P(s_i) f(s'_i) f(pair(s'_i))
///   Z_f    = (1/M_I) sum_i f(s_i)^2
EnergyEstimate dnp_empirical_energy(const MeasurementDataset &data,
                                    const WeightFn &f);

/// Gradient of dnp_empirical_energy with respect to the network
/// parameters (quotient rule through every f(s) occurrence).
std::vector<double> dnp_loss_gradient(const MeasurementDataset &data,
                                      const NeuralNet &net);

/// <psi|U_g^dag H U_g|psi> with U_g = diag(e^{i g(s)}).
double uvqnhe_exact_energy(const StateVector &psi, const PhaseFn &g,
                           const Hamiltonian &hamiltonian);

/// Normalization-free U-VQNHE estimator; affine in the shot frequencies.
/// Non-diagonal terms combine the real- and imaginary-variant circuits:
///   sum_s sigma_P(s) Re(e^{-ig(s')} e^{ig(pair(s'))}) p_m(s; P)
/// + sum_s sigma_P(s) Im(e^{-ig(s')} e^{ig(pair(s'))}) p_m'(s; P)
EnergyEstimate uvqnhe_empirical_energy(const MeasurementDataset &data,
                                       const PhaseFn &g);

/// Gradient of uvqnhe_empirical_energy with respect to the phase-network
/// parameters.
std::vector<double> uvqnhe_loss_gradient(const MeasurementDataset &data,
                                         const NeuralNet &net);

/// Delta-method shot-noise scale of the energy estimator at the given
/// phase table (1-sigma); zero in exact mode.
double uvqnhe_energy_stderr(const MeasurementDataset &data, const PhaseFn &g);

/// Wraps a network as a memoized weight table over bit strings.
WeightFn tabulated(const NeuralNet &net);

}  // namespace qnhe
