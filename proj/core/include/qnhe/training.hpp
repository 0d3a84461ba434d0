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

#include <optional>
#include <span>
#include <vector>

#include "qnhe/ansatz.hpp"
#include "qnhe/diagnostics.hpp"
#include "qnhe/estimators.hpp"
#include "qnhe/neural.hpp"
#include "qnhe/optimize.hpp"

namespace qnhe {

struct VqeOptions {
  std::size_t budget = 20000;  // objective evaluations
  double tolerance = 1e-9;
  /// Default is the exact-probability objective (reproducible baseline);
  /// shot mode resamples every evaluation.
  bool shot_mode = false;
};

struct NnOptions {
  OutputMode mode = OutputMode::AmpBounded;
  double range_r = 3.0;
  int epochs = 200;
  double learning_rate = 1e-2;
  int hidden = 64;
  Activation activation = Activation::Tanh;
  /// Redraw the shot dataset every epoch instead of reusing the one drawn
  /// after VQE training (the fixed-dataset regime is the default).
  bool refresh_samples = false;
  /// Record the dense re-evaluation of each epoch's post-processed energy.
  bool record_exact = true;
};

struct ShotPlan {
  bool exact = false;  // probabilities in place of counts everywhere
  std::uint64_t ansatz = 500;
  std::uint64_t term = 500;
};

/// Declarative description of one TFIM experiment.
struct TrainingConfig {
  int n = 7;
  double field = 1.0;
  Boundary boundary = Boundary::Open;
  int layers = 2;
  VqeOptions vqe;
  NnOptions nn;
  ShotPlan shots;
  std::uint64_t seed = 0;
};

Hamiltonian config_hamiltonian(const TrainingConfig &config);
AnsatzSpec config_ansatz(const TrainingConfig &config);

/// The measurement dataset a training run sees at the given epoch
/// (epoch > 0 only differs under the per-epoch refresh policy). Exposed so
/// tools can re-materialize the exact samples a run consumed.
MeasurementDataset training_dataset(const TrainingConfig &config,
                                    std::span<const double> theta,
                                    bool with_imag, int epoch = 0);

enum class Termination { Completed, DenominatorCollapse, NonFinite, DivergenceGuard };

struct EpochRecord {
  int epoch = 0;
  double energy = 0.0;  // empirical estimate at the epoch's start parameters
  std::optional<double> denominator;  // DNP only
  std::optional<double> exact_energy;
  bool inclusion = false;  // support_report of the epoch's dataset
  double wall_ms = 0.0;
};

struct TrainingTrace {
  std::vector<EpochRecord> records;
  Termination termination = Termination::Completed;
  std::vector<double> nn_params;
  double final_energy = 0.0;
  std::optional<double> final_exact_energy;
  std::optional<double> final_denominator;
  /// Support bookkeeping of the last dataset used.
  SupportReport support;
};

struct VqeResult {
  std::vector<double> theta;
  double energy = 0.0;
  /// Best-so-far improvements as (objective evaluation index, energy).
  std::vector<std::pair<std::size_t, double>> trace;
};

/// Derivative-free minimization of the VQE energy from a seeded small
/// random start. Exhausting the budget returns the best point found.
VqeResult run_vqe(const TrainingConfig &config);

/// Adam on the empirical DNP ratio objective over a frozen circuit; halts
/// on denominator collapse, non-finite loss, or the divergence guard
/// |energy| > 1e3 * sum|c_P|.
TrainingTrace train_dnp(const TrainingConfig &config,
                        std::span<const double> theta);

/// Adam on the normalization-free U-VQNHE objective over a frozen circuit.
TrainingTrace train_uvqnhe(const TrainingConfig &config,
                           std::span<const double> theta);

}  // namespace qnhe
