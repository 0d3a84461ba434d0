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
#include "qnhe/estimators.hpp"

#include <cmath>
#include <memory>
#include <unordered_map>

namespace qnhe {

namespace {

MeasurementDataset make_dataset_shell(const StateVector &psi,
                                      const Hamiltonian &hamiltonian,
                                      bool with_imag) {
  if (psi.n != hamiltonian.n) {
    throw std::invalid_argument("dataset: state/Hamiltonian size mismatch");
  }
  MeasurementDataset data;
  data.n = psi.n;
  data.hamiltonian = hamiltonian;
  data.terms.reserve(hamiltonian.terms.size());
  for (const auto &[coeff, pauli] : hamiltonian.terms) {
    TermMeasurement term;
    term.coeff = coeff;
    term.pauli = pauli;
    term.real_plan = plan_measurement(pauli, MeasurementVariant::Real);
    if (with_imag && !term.real_plan.direct()) {
      term.imag_plan = plan_measurement(pauli, MeasurementVariant::Imag);
    }
    data.terms.push_back(std::move(term));
  }
  return data;
}

StateVector with_suffix(const StateVector &psi, const Circuit &suffix) {
  StateVector v = psi;
  apply_circuit(v, suffix);
  return v;
}

// Weight of outcome s normalized by the set's total (counts/M or exact
// probability).
double weight_of(const SampleSet &set, double raw) {
  return raw / set.weight_norm();
}

void require_samples(const TermMeasurement &term, const SampleSet &set) {
  if (set.counts.empty()) {
    throw std::invalid_argument("estimator: missing samples for term " +
                                term.pauli.letters());
  }
}

// sigma-weighted pair sum for a starred DNP term.
double dnp_starred_numerator(const TermMeasurement &term, const WeightFn &f) {
  const MeasurementPlan &plan = term.real_plan;
  const int n = term.pauli.num_qubits();
  double acc = 0.0;
  for (const auto &[s, raw] : term.real.counts) {
    const std::uint64_t collapsed = star_collapse(s, plan.star, n);
    const std::uint64_t partner = pair_map(term.pauli, collapsed);
    acc += weight_of(term.real, raw) * term_sign(plan, s) * f(collapsed) *
           f(partner);
  }
  return acc;
}

}  // namespace

MeasurementDataset build_exact_dataset(const StateVector &psi,
                                       const Hamiltonian &hamiltonian,
                                       bool with_imag) {
  MeasurementDataset data = make_dataset_shell(psi, hamiltonian, with_imag);
  data.exact = true;
  data.ansatz = exact_distribution(psi, kAnsatzTag);
  for (auto &term : data.terms) {
    if (term.real_plan.direct()) continue;
    term.real = exact_distribution(with_suffix(psi, term.real_plan.suffix),
                                   term.real_plan.tag());
    if (term.imag_plan) {
      term.imag = exact_distribution(with_suffix(psi, term.imag_plan->suffix),
                                     term.imag_plan->tag());
    }
  }
  return data;
}

MeasurementDataset build_sampled_dataset(const StateVector &psi,
                                         const Hamiltonian &hamiltonian,
                                         std::uint64_t shots_ansatz,
                                         std::uint64_t shots_term,
                                         const RngStream &rng, bool with_imag) {
  if (shots_ansatz == 0 || shots_term == 0) {
    throw std::invalid_argument("dataset: shot counts must be >= 1");
  }
  MeasurementDataset data = make_dataset_shell(psi, hamiltonian, with_imag);
  RngStream ansatz_rng = rng.derive(kAnsatzTag);
  data.ansatz = sample(psi, shots_ansatz, ansatz_rng, kAnsatzTag);
  for (auto &term : data.terms) {
    if (term.real_plan.direct()) continue;
    const std::string real_tag = term.real_plan.tag();
    RngStream term_rng = rng.derive(real_tag);
    term.real = sample(with_suffix(psi, term.real_plan.suffix), shots_term,
                       term_rng, real_tag);
    if (term.imag_plan) {
      const std::string imag_tag = term.imag_plan->tag();
      RngStream imag_rng = rng.derive(imag_tag);
      term.imag = sample(with_suffix(psi, term.imag_plan->suffix), shots_term,
                         imag_rng, imag_tag);
    }
  }
  return data;
}

EnergyEstimate vqe_energy(const MeasurementDataset &data) {
  EnergyEstimate out;
  out.shots_used.emplace_back(data.ansatz.tag, data.ansatz.shots);
  for (const auto &term : data.terms) {
    double average = 0.0;
    if (term.pauli.is_identity()) {
      average = 1.0;
    } else if (term.real_plan.direct()) {
      require_samples(term, data.ansatz);
      for (const auto &[s, raw] : data.ansatz.counts) {
        average += weight_of(data.ansatz, raw) * term_sign(term.real_plan, s);
      }
    } else {
      require_samples(term, term.real);
      for (const auto &[s, raw] : term.real.counts) {
        average += weight_of(term.real, raw) * term_sign(term.real_plan, s);
      }
      out.shots_used.emplace_back(term.real.tag, term.real.shots);
    }
    out.per_term.emplace_back(term.pauli, average);
    out.value += term.coeff * average;
  }
  return out;
}

double dnp_exact_energy(const StateVector &psi, const WeightFn &f,
                        const Hamiltonian &hamiltonian) {
  if (psi.n != hamiltonian.n) {
    throw std::invalid_argument("dnp_exact_energy: size mismatch");
  }
  StateVector filtered = psi;
  for (std::uint64_t s = 0; s < filtered.dim(); ++s) {
    filtered.amps[s] *= f(s);
  }
  double denom = 0.0;
  for (const auto &a : filtered.amps) denom += std::norm(a);
  if (!(denom > 0.0) || !std::isfinite(denom)) {
    throw degenerate_denominator_error("dnp_exact_energy: D_f|psi> vanishes");
  }
  const StateVector h_filtered = apply_hamiltonian(hamiltonian, filtered);
  return inner_product(filtered, h_filtered).real() / denom;
}

EnergyEstimate dnp_empirical_energy(const MeasurementDataset &data,
                                    const WeightFn &f) {
  if (data.ansatz.counts.empty()) {
    throw std::invalid_argument("dnp_empirical_energy: missing ansatz samples");
  }
  double z_f = 0.0;
  for (const auto &[s, raw] : data.ansatz.counts) {
    const double fs = f(s);
    z_f += weight_of(data.ansatz, raw) * fs * fs;
  }
  if (!(z_f > 0.0) || !std::isfinite(z_f)) {
    throw degenerate_denominator_error(
        "dnp_empirical_energy: normalization sum is degenerate");
  }

  EnergyEstimate out;
  out.denominator = z_f;
  out.shots_used.emplace_back(data.ansatz.tag, data.ansatz.shots);
  for (const auto &term : data.terms) {
    double numerator = 0.0;
    if (term.pauli.is_identity()) {
      numerator = z_f;
    } else if (term.real_plan.direct()) {
      for (const auto &[s, raw] : data.ansatz.counts) {
        const double fs = f(s);
        numerator +=
            weight_of(data.ansatz, raw) * term_sign(term.real_plan, s) * fs * fs;
      }
    } else {
      require_samples(term, term.real);
      numerator = dnp_starred_numerator(term, f);
      out.shots_used.emplace_back(term.real.tag, term.real.shots);
    }
    out.per_term.emplace_back(term.pauli, numerator);
    out.value += term.coeff * numerator / z_f;
  }
  return out;
}

std::vector<double> dnp_loss_gradient(const MeasurementDataset &data,
                                      const NeuralNet &net) {
  const WeightFn f = tabulated(net);

  double z_f = 0.0;
  std::unordered_map<std::uint64_t, double> d_denom;  // dZ/df(s)
  for (const auto &[s, raw] : data.ansatz.counts) {
    const double w = weight_of(data.ansatz, raw);
    const double fs = f(s);
    z_f += w * fs * fs;
    d_denom[s] += 2.0 * w * fs;
  }
  if (!(z_f > 0.0) || !std::isfinite(z_f)) {
    throw degenerate_denominator_error(
        "dnp_loss_gradient: normalization sum is degenerate");
  }

  double numerator_total = 0.0;  // sum over non-identity terms
  std::unordered_map<std::uint64_t, double> d_num;  // d(sum c_P N_P)/df(s)
  for (const auto &term : data.terms) {
    if (term.pauli.is_identity()) continue;  // contributes the constant c_I
    if (term.real_plan.direct()) {
      for (const auto &[s, raw] : data.ansatz.counts) {
        const double w = weight_of(data.ansatz, raw) *
                         term_sign(term.real_plan, s) * term.coeff;
        const double fs = f(s);
        numerator_total += w * fs * fs;
        d_num[s] += 2.0 * w * fs;
      }
    } else {
      require_samples(term, term.real);
      const int n = term.pauli.num_qubits();
      for (const auto &[s, raw] : term.real.counts) {
        const std::uint64_t collapsed = star_collapse(s, term.real_plan.star, n);
        const std::uint64_t partner = pair_map(term.pauli, collapsed);
        const double w = weight_of(term.real, raw) *
                         term_sign(term.real_plan, s) * term.coeff;
        numerator_total += w * f(collapsed) * f(partner);
        d_num[collapsed] += w * f(partner);
        d_num[partner] += w * f(collapsed);
      }
    }
  }

  const double ratio = numerator_total / z_f;
  std::vector<double> grad(net.param_count(), 0.0);
  // Quotient rule: dE/df(s) = (dN(s) - ratio * dZ(s)) / Z.
  for (const auto &[s, dn] : d_num) {
    double upstream = dn / z_f;
    const auto it = d_denom.find(s);
    if (it != d_denom.end()) upstream -= ratio * it->second / z_f;
    net.accumulate_backward(s, upstream, grad);
  }
  for (const auto &[s, dz] : d_denom) {
    if (d_num.contains(s)) continue;  // already handled above
    net.accumulate_backward(s, -ratio * dz / z_f, grad);
  }
  return grad;
}

double uvqnhe_exact_energy(const StateVector &psi, const PhaseFn &g,
                           const Hamiltonian &hamiltonian) {
  if (psi.n != hamiltonian.n) {
    throw std::invalid_argument("uvqnhe_exact_energy: size mismatch");
  }
  StateVector rotated = psi;
  for (std::uint64_t s = 0; s < rotated.dim(); ++s) {
    rotated.amps[s] *= std::polar(1.0, g(s));
  }
  const StateVector h_rotated = apply_hamiltonian(hamiltonian, rotated);
  return inner_product(rotated, h_rotated).real();
}

EnergyEstimate uvqnhe_empirical_energy(const MeasurementDataset &data,
                                       const PhaseFn &g) {
  EnergyEstimate out;
  out.shots_used.emplace_back(data.ansatz.tag, data.ansatz.shots);
  for (const auto &term : data.terms) {
    double value = 0.0;
    if (term.pauli.is_identity()) {
      value = 1.0;
    } else if (term.real_plan.direct()) {
      require_samples(term, data.ansatz);
      // Diagonal observables are blind to phases.
      for (const auto &[s, raw] : data.ansatz.counts) {
        value += weight_of(data.ansatz, raw) * term_sign(term.real_plan, s);
      }
    } else {
      require_samples(term, term.real);
      if (!term.imag || !term.imag_plan) {
        throw std::invalid_argument(
            "uvqnhe_empirical_energy: missing imaginary-variant samples for " +
            term.pauli.letters());
      }
      const int n = term.pauli.num_qubits();
      for (const auto &[s, raw] : term.real.counts) {
        const std::uint64_t collapsed = star_collapse(s, term.real_plan.star, n);
        const std::uint64_t partner = pair_map(term.pauli, collapsed);
        value += weight_of(term.real, raw) * term_sign(term.real_plan, s) *
                 std::cos(g(partner) - g(collapsed));
      }
      for (const auto &[s, raw] : term.imag->counts) {
        const std::uint64_t collapsed =
            star_collapse(s, term.imag_plan->star, n);
        const std::uint64_t partner = pair_map(term.pauli, collapsed);
        value += weight_of(*term.imag, raw) * term_sign(*term.imag_plan, s) *
                 std::sin(g(partner) - g(collapsed));
      }
      out.shots_used.emplace_back(term.real.tag, term.real.shots);
      out.shots_used.emplace_back(term.imag->tag, term.imag->shots);
    }
    out.per_term.emplace_back(term.pauli, value);
    out.value += term.coeff * value;
  }
  return out;
}

std::vector<double> uvqnhe_loss_gradient(const MeasurementDataset &data,
                                         const NeuralNet &net) {
  const PhaseFn g = tabulated(net);
  std::unordered_map<std::uint64_t, double> upstream;  // dE/dg(s)
  for (const auto &term : data.terms) {
    if (term.real_plan.direct()) continue;  // phase-insensitive
    require_samples(term, term.real);
    if (!term.imag || !term.imag_plan) {
      throw std::invalid_argument(
          "uvqnhe_loss_gradient: missing imaginary-variant samples for " +
          term.pauli.letters());
    }
    const int n = term.pauli.num_qubits();
    for (const auto &[s, raw] : term.real.counts) {
      const std::uint64_t collapsed = star_collapse(s, term.real_plan.star, n);
      const std::uint64_t partner = pair_map(term.pauli, collapsed);
      const double w = weight_of(term.real, raw) *
                       term_sign(term.real_plan, s) * term.coeff;
      const double delta = g(partner) - g(collapsed);
      upstream[partner] += -w * std::sin(delta);
      upstream[collapsed] += w * std::sin(delta);
    }
    for (const auto &[s, raw] : term.imag->counts) {
      const std::uint64_t collapsed = star_collapse(s, term.imag_plan->star, n);
      const std::uint64_t partner = pair_map(term.pauli, collapsed);
      const double w = weight_of(*term.imag, raw) *
                       term_sign(*term.imag_plan, s) * term.coeff;
      const double delta = g(partner) - g(collapsed);
      upstream[partner] += w * std::cos(delta);
      upstream[collapsed] += -w * std::cos(delta);
    }
  }
  std::vector<double> grad(net.param_count(), 0.0);
  for (const auto &[s, u] : upstream) net.accumulate_backward(s, u, grad);
  return grad;
}

double uvqnhe_energy_stderr(const MeasurementDataset &data, const PhaseFn &g) {
  if (data.exact) return 0.0;
  double variance = 0.0;
  auto accumulate = [&](const SampleSet &set, auto per_shot, double coeff) {
    double mean = 0.0;
    double second = 0.0;
    for (const auto &[s, raw] : set.counts) {
      const double w = weight_of(set, raw);
      const double v = per_shot(s);
      mean += w * v;
      second += w * v * v;
    }
    const double var = std::max(0.0, second - mean * mean);
    variance += coeff * coeff * var / static_cast<double>(set.shots);
  };
  for (const auto &term : data.terms) {
    if (term.pauli.is_identity()) continue;
    const int n = term.pauli.num_qubits();
    if (term.real_plan.direct()) {
      accumulate(
          data.ansatz,
          [&](std::uint64_t s) {
            return static_cast<double>(term_sign(term.real_plan, s));
          },
          term.coeff);
      continue;
    }
    accumulate(
        term.real,
        [&](std::uint64_t s) {
          const std::uint64_t collapsed =
              star_collapse(s, term.real_plan.star, n);
          const std::uint64_t partner = pair_map(term.pauli, collapsed);
          return term_sign(term.real_plan, s) *
                 std::cos(g(partner) - g(collapsed));
        },
        term.coeff);
    if (term.imag && term.imag_plan) {
      accumulate(
          *term.imag,
          [&](std::uint64_t s) {
            const std::uint64_t collapsed =
                star_collapse(s, term.imag_plan->star, n);
            const std::uint64_t partner = pair_map(term.pauli, collapsed);
            return term_sign(*term.imag_plan, s) *
                   std::sin(g(partner) - g(collapsed));
          },
          term.coeff);
    }
  }
  return std::sqrt(variance);
}

WeightFn tabulated(const NeuralNet &net) {
  auto cache = std::make_shared<std::unordered_map<std::uint64_t, double>>();
  return [cache, net](std::uint64_t s) {
    auto it = cache->find(s);
    if (it != cache->end()) return it->second;
    const double value = net.forward(s);
    cache->emplace(s, value);
    return value;
  };
}

}  // namespace qnhe
