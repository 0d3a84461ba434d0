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
#include "qnhe/training.hpp"

#include <chrono>
#include <cmath>
#include <memory>
#include <string>

namespace qnhe {

namespace {

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

bool finite(std::span<const double> values) {
  for (double v : values) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

MeasurementDataset draw_dataset(const StateVector &psi, const Hamiltonian &h,
                                const TrainingConfig &config, bool with_imag,
                                int epoch) {
  if (config.shots.exact) return build_exact_dataset(psi, h, with_imag);
  RngStream rng = RngStream(config.seed)
                      .derive("nn-dataset")
                      .derive(static_cast<std::uint64_t>(epoch));
  return build_sampled_dataset(psi, h, config.shots.ansatz, config.shots.term,
                               rng, with_imag);
}

}  // namespace

Hamiltonian config_hamiltonian(const TrainingConfig &config) {
  return build_tfim(config.n, config.field, config.boundary);
}

AnsatzSpec config_ansatz(const TrainingConfig &config) {
  return AnsatzSpec{config.n, config.layers, config.boundary};
}

MeasurementDataset training_dataset(const TrainingConfig &config,
                                    std::span<const double> theta,
                                    bool with_imag, int epoch) {
  const StateVector psi =
      run_circuit(build_ansatz(config_ansatz(config), theta));
  return draw_dataset(psi, config_hamiltonian(config), config, with_imag,
                      epoch);
}

VqeResult run_vqe(const TrainingConfig &config) {
  const Hamiltonian h = config_hamiltonian(config);
  const AnsatzSpec spec = config_ansatz(config);
  RngStream init_rng = RngStream(config.seed).derive("vqe-init");
  std::vector<double> theta0 = initial_params(spec, init_rng);

  std::function<double(std::span<const double>)> objective;
  if (config.vqe.shot_mode) {
    auto counter = std::make_shared<std::uint64_t>(0);
    objective = [=, &config](std::span<const double> theta) {
      const StateVector psi = run_circuit(build_ansatz(spec, theta));
      RngStream rng =
          RngStream(config.seed).derive("vqe-shots").derive((*counter)++);
      const MeasurementDataset data = build_sampled_dataset(
          psi, h, config.shots.ansatz, config.shots.term, rng, false);
      return vqe_energy(data).value;
    };
  } else {
    objective = [spec, h](std::span<const double> theta) {
      return exact_expectation(h, run_circuit(build_ansatz(spec, theta)));
    };
  }

  NelderMeadOptions options;
  options.max_evals = config.vqe.budget;
  options.f_tol = config.vqe.tolerance;
  const NelderMeadResult nm = nelder_mead(objective, std::move(theta0), options);

  VqeResult result;
  result.theta = nm.x;
  result.energy = nm.fx;
  result.trace = nm.best_trace;
  return result;
}

namespace {

enum class Flavor { Dnp, Uvqnhe };

TrainingTrace train_post_processing(const TrainingConfig &config,
                                    std::span<const double> theta,
                                    Flavor flavor) {
  const Hamiltonian h = config_hamiltonian(config);
  const AnsatzSpec spec = config_ansatz(config);
  const StateVector psi = run_circuit(build_ansatz(spec, theta));
  const bool uvqnhe = flavor == Flavor::Uvqnhe;
  const double guard = 1e3 * h.coeff_l1();

  RngStream nn_rng = RngStream(config.seed).derive("nn-init");
  NeuralNet net = NeuralNet::init(
      config.n, config.nn.hidden,
      uvqnhe ? OutputMode::Phase : config.nn.mode, config.nn.range_r,
      config.nn.activation, nn_rng);
  AdamState adam(net.param_count(), config.nn.learning_rate);

  MeasurementDataset data = draw_dataset(psi, h, config, uvqnhe, 0);
  SupportReport support = support_report(data);

  TrainingTrace trace;
  trace.termination = Termination::Completed;
  double last_energy = 0.0;
  std::optional<double> last_denominator;
  std::optional<double> last_exact;

  auto evaluate = [&](const NeuralNet &current)
      -> std::optional<EnergyEstimate> {
    const WeightFn f = tabulated(current);
    if (uvqnhe) return uvqnhe_empirical_energy(data, f);
    return dnp_empirical_energy(data, f);
  };
  auto evaluate_exact = [&](const NeuralNet &current) {
    const WeightFn f = tabulated(current);
    return uvqnhe ? uvqnhe_exact_energy(psi, f, h)
                  : dnp_exact_energy(psi, f, h);
  };

  for (int epoch = 0; epoch < config.nn.epochs; ++epoch) {
    const auto start = std::chrono::steady_clock::now();
    if (epoch > 0 && config.nn.refresh_samples && !config.shots.exact) {
      data = draw_dataset(psi, h, config, uvqnhe, epoch);
      support = support_report(data);
    }

    EpochRecord record;
    record.epoch = epoch;
    record.inclusion = support.inclusion_holds;
    try {
      const auto estimate = evaluate(net);
      record.energy = estimate->value;
      record.denominator = estimate->denominator;
    } catch (const degenerate_denominator_error &) {
      trace.termination = Termination::DenominatorCollapse;
      break;
    }
    if (!std::isfinite(record.energy)) {
      trace.termination = Termination::NonFinite;
      break;
    }
    if (config.nn.record_exact) record.exact_energy = evaluate_exact(net);
    record.wall_ms = elapsed_ms(start);
    last_energy = record.energy;
    last_denominator = record.denominator;
    last_exact = record.exact_energy;
    trace.records.push_back(record);

    if (std::abs(record.energy) > guard) {
      trace.termination = Termination::DivergenceGuard;
      break;
    }

    const std::vector<double> grad =
        uvqnhe ? uvqnhe_loss_gradient(data, net) : dnp_loss_gradient(data, net);
    if (!finite(grad)) {
      trace.termination = Termination::NonFinite;
      break;
    }
    std::vector<double> params = net.params();
    adam_step(params, grad, adam);
    net.set_params(params);
  }

  if (trace.termination == Termination::Completed) {
    try {
      const auto estimate = evaluate(net);
      last_energy = estimate->value;
      last_denominator = estimate->denominator;
      if (config.nn.record_exact) last_exact = evaluate_exact(net);
    } catch (const degenerate_denominator_error &) {
      trace.termination = Termination::DenominatorCollapse;
    }
  }
  trace.nn_params = net.params();
  trace.final_energy = last_energy;
  trace.final_denominator = last_denominator;
  trace.final_exact_energy = last_exact;
  trace.support = std::move(support);
  return trace;
}

}  // namespace

TrainingTrace train_dnp(const TrainingConfig &config,
                        std::span<const double> theta) {
  return train_post_processing(config, theta, Flavor::Dnp);
}

TrainingTrace train_uvqnhe(const TrainingConfig &config,
                           std::span<const double> theta) {
  return train_post_processing(config, theta, Flavor::Uvqnhe);
}

}  // namespace qnhe
