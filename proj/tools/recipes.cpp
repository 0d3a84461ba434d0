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
#include "recipes.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <sstream>

#include "config.hpp"
#include "json.hpp"
#include "qnhe/diagnostics.hpp"
#include "qnhe/serialize.hpp"
#include "qnhe/version.hpp"

namespace qnhe::tools {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kGroundTruthMaxQubits = 14;

std::uint64_t child_seed(std::uint64_t master, const std::string &tag) {
  return RngStream(master).derive(tag).next_u64();
}

double median(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const std::size_t m = values.size();
  return m % 2 ? values[m / 2] : 0.5 * (values[m / 2 - 1] + values[m / 2]);
}

NeuralNet trace_net(const TrainingConfig &config, Flavor flavor,
                    const TrainingTrace &trace) {
  const OutputMode mode =
      flavor == Flavor::Uvqnhe ? OutputMode::Phase : config.nn.mode;
  return NeuralNet::from_params(config.n, config.nn.hidden, mode,
                                config.nn.range_r, config.nn.activation,
                                trace.nn_params);
}

json summary_json(const SingleRun &run) {
  json doc;
  doc["version"] = kVersion;
  doc["config"] = json::parse(config_to_json(run.config));
  doc["flavor"] = run.flavor == Flavor::VqeOnly  ? "vqe"
                  : run.flavor == Flavor::Dnp    ? "vqnhe"
                                                 : "uvqnhe";
  doc["vqe_energy"] = run.vqe.energy;
  doc["vqe_evals"] =
      run.vqe.trace.empty() ? 0 : run.vqe.trace.back().first;
  doc["e_gs"] = run.ground ? json(run.ground->e_gs) : json(nullptr);
  doc["degeneracy_gap"] =
      run.ground ? json(run.ground->degeneracy_gap) : json(nullptr);
  if (run.flavor != Flavor::VqeOnly) {
    doc["final_energy"] = run.trace.final_energy;
    doc["final_exact_energy"] = run.trace.final_exact_energy
                                    ? json(*run.trace.final_exact_energy)
                                    : json(nullptr);
    doc["termination"] = to_string(run.trace.termination);
    doc["epochs_recorded"] = run.trace.records.size();
    doc["inclusion_holds"] = run.trace.support.inclusion_holds;
    doc["missing_count"] = run.trace.support.missing.size();
  }
  return doc;
}

void write_vqe_trace_csv(const std::string &path, const VqeResult &vqe) {
  std::ostringstream out;
  out << "eval,energy\n";
  for (const auto &[eval, energy] : vqe.trace) {
    out << eval << ',' << format_double(energy) << '\n';
  }
  write_file(path, out.str());
}

void dump_samples(const std::string &dir, const MeasurementDataset &data) {
  fs::create_directories(dir);
  auto dump = [&](const SampleSet &set, const std::string &name) {
    write_file(dir + "/" + name + ".json", sampleset_to_json(set));
  };
  dump(data.ansatz, "ansatz-identity");
  int index = 0;
  for (const auto &term : data.terms) {
    if (term.real_plan.direct()) continue;
    dump(term.real, "term" + std::to_string(index) + "-real");
    if (term.imag) dump(*term.imag, "term" + std::to_string(index) + "-imag");
    ++index;
  }
}

}  // namespace

SingleRun run_pipeline(const TrainingConfig &config, Flavor flavor) {
  SingleRun run;
  run.config = config;
  run.flavor = flavor;
  run.vqe = run_vqe(config);
  if (config.n <= kGroundTruthMaxQubits) {
    run.ground = ground_state(config_hamiltonian(config));
  }
  if (flavor == Flavor::Dnp) {
    run.trace = train_dnp(config, run.vqe.theta);
  } else if (flavor == Flavor::Uvqnhe) {
    run.trace = train_uvqnhe(config, run.vqe.theta);
  }
  return run;
}

void write_run_outputs(const std::string &dir, const SingleRun &run) {
  fs::create_directories(dir);
  write_file(dir + "/summary.json", summary_json(run).dump(2));
  write_file(dir + "/theta.json", json{{"theta", run.vqe.theta}}.dump());
  write_vqe_trace_csv(dir + "/vqe_trace.csv", run.vqe);
  if (run.flavor == Flavor::VqeOnly) return;

  write_file(dir + "/trace.csv", trace_to_csv(run.trace));
  write_file(dir + "/trace.json", trace_to_json(run.trace));
  const NeuralNet net = trace_net(run.config, run.flavor, run.trace);
  write_file(dir + "/nn_checkpoint.json", neuralnet_to_json(net));

  // Per-bit-string network outputs with support labels (divergence-
  // inspection data).
  const auto &support = run.trace.support;
  auto contains = [](const std::vector<std::uint64_t> &sorted_set,
                     std::uint64_t s) {
    return std::binary_search(sorted_set.begin(), sorted_set.end(), s);
  };
  std::ostringstream nn_csv;
  nn_csv << "index,bitstring,output,in_ansatz_support,in_numerator_support,"
            "missing\n";
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << run.config.n); ++s) {
    nn_csv << s << ',' << index_to_bits(s, run.config.n) << ','
           << format_double(net.forward(s)) << ','
           << contains(support.ansatz_support, s) << ','
           << contains(support.numerator_support, s) << ','
           << contains(support.missing, s) << '\n';
  }
  write_file(dir + "/nn_outputs.csv", nn_csv.str());

  if (!run.config.shots.exact) {
    dump_samples(dir + "/samples",
                 training_dataset(run.config, run.vqe.theta,
                                  run.flavor == Flavor::Uvqnhe));
  }
}

std::vector<std::string> recipe_names() {
  return {"fig1_divergence", "fig3_constrained_sweep", "fig4a_size_sweep",
          "fig4b_uvqnhe_vs_vqnhe"};
}

namespace {

TrainingConfig base_config(int n, std::uint64_t seed) {
  TrainingConfig config;
  config.n = n;
  config.field = 1.0;
  config.boundary = Boundary::Open;
  config.layers = 2;
  config.seed = seed;
  config.vqe.budget = 20000;
  config.nn.hidden = 64;
  config.nn.epochs = 200;
  config.nn.learning_rate = 0.01;
  return config;
}

void run_fig1(std::uint64_t master_seed, const fs::path &out) {
  json rows = json::array();
  int diverged = 0;
  for (int seed_index = 0; seed_index < 10; ++seed_index) {
    const std::string tag = "fig1/seed" + std::to_string(seed_index);
    TrainingConfig config = base_config(7, child_seed(master_seed, tag));
    config.nn.mode = OutputMode::AmpPositive;  // unconstrained weights
    config.shots.ansatz = 500;
    config.shots.term = 500;
    json row{{"seed_index", seed_index}, {"seed", config.seed}};
    try {
      const SingleRun run = run_pipeline(config, Flavor::Dnp);
      write_run_outputs((out / ("seed_" + std::to_string(seed_index))).string(),
                        run);
      const double e_gs = run.ground->e_gs;
      double min_energy = run.trace.final_energy;
      for (const auto &r : run.trace.records) {
        min_energy = std::min(min_energy, r.energy);
      }
      row["e_gs"] = e_gs;
      row["vqe_energy"] = run.vqe.energy;
      row["final_energy"] = run.trace.final_energy;
      row["min_energy"] = min_energy;
      row["below_ground"] = run.trace.final_energy < e_gs;
      row["missing_count"] = run.trace.support.missing.size();
      row["termination"] = to_string(run.trace.termination);
      if (run.trace.final_energy < e_gs) ++diverged;
    } catch (const std::exception &e) {
      row["error"] = e.what();
    }
    rows.push_back(row);
  }
  write_file((out / "recipe_summary.json").string(),
             json{{"version", kVersion},
                  {"recipe", "fig1_divergence"},
                  {"rows", rows},
                  {"seeds_below_ground", diverged}}
                 .dump(2));
}

void run_fig3(std::uint64_t master_seed, const fs::path &out) {
  const std::vector<double> r_values = {1.5, 2.5, 3.5, 4.5, 5.5};
  const double eps = 0.05;
  json rows = json::array();
  json medians = json::array();
  for (double r : r_values) {
    // Shot budgets quote the truncated formula value (135,056 at r = 3.5).
    const std::uint64_t shots = shot_lower_bound_truncated(r, eps);
    std::vector<double> finals;
    for (int seed_index = 0; seed_index < 5; ++seed_index) {
      const std::string tag = "fig3/seed" + std::to_string(seed_index);
      TrainingConfig config = base_config(10, child_seed(master_seed, tag));
      config.nn.mode = OutputMode::AmpBounded;
      config.nn.range_r = r;
      config.shots.ansatz = shots;
      config.shots.term = shots;
      json row{{"r", r}, {"shots", shots}, {"seed_index", seed_index}};
      try {
        const SingleRun run = run_pipeline(config, Flavor::Dnp);
        std::ostringstream dir;
        dir << "r_" << r << "/seed_" << seed_index;
        write_run_outputs((out / dir.str()).string(), run);
        row["e_gs"] = run.ground->e_gs;
        row["vqe_energy"] = run.vqe.energy;
        row["final_energy"] = run.trace.final_energy;
        row["termination"] = to_string(run.trace.termination);
        finals.push_back(run.trace.final_energy);
      } catch (const std::exception &e) {
        row["error"] = e.what();
      }
      rows.push_back(row);
    }
    if (!finals.empty()) {
      medians.push_back(json{{"r", r},
                             {"shots", shots},
                             {"median_final_energy", median(finals)}});
    }
  }
  write_file((out / "recipe_summary.json").string(),
             json{{"version", kVersion},
                  {"recipe", "fig3_constrained_sweep"},
                  {"epsilon", eps},
                  {"rows", rows},
                  {"medians", medians}}
                 .dump(2));
}

void run_fig4a(std::uint64_t master_seed, const fs::path &out) {
  json rows = json::array();
  json medians = json::array();
  for (int n : {8, 10, 12}) {
    std::vector<double> deviations;
    for (int seed_index = 0; seed_index < 5; ++seed_index) {
      const std::string tag =
          "fig4a/n" + std::to_string(n) + "/seed" + std::to_string(seed_index);
      TrainingConfig config = base_config(n, child_seed(master_seed, tag));
      config.nn.mode = OutputMode::AmpBounded;
      config.nn.range_r = 3.0;
      config.shots.ansatz = 10000;
      config.shots.term = 10000;
      json row{{"n", n}, {"seed_index", seed_index}};
      try {
        const SingleRun run = run_pipeline(config, Flavor::Dnp);
        std::ostringstream dir;
        dir << "n_" << n << "/seed_" << seed_index;
        write_run_outputs((out / dir.str()).string(), run);
        const double deviation = run.trace.final_energy - run.ground->e_gs;
        row["e_gs"] = run.ground->e_gs;
        row["vqe_energy"] = run.vqe.energy;
        row["vqe_deviation"] = run.vqe.energy - run.ground->e_gs;
        row["final_energy"] = run.trace.final_energy;
        row["deviation"] = deviation;
        deviations.push_back(deviation);
      } catch (const std::exception &e) {
        row["error"] = e.what();
      }
      rows.push_back(row);
    }
    if (!deviations.empty()) {
      medians.push_back(json{{"n", n}, {"median_deviation", median(deviations)}});
    }
  }
  write_file((out / "recipe_summary.json").string(),
             json{{"version", kVersion},
                  {"recipe", "fig4a_size_sweep"},
                  {"rows", rows},
                  {"medians", medians}}
                 .dump(2));
}

void run_fig4b(std::uint64_t master_seed, const fs::path &out) {
  json rows = json::array();
  for (int seed_index = 0; seed_index < 5; ++seed_index) {
    const std::string tag = "fig4b/seed" + std::to_string(seed_index);
    TrainingConfig config = base_config(12, child_seed(master_seed, tag));
    config.nn.mode = OutputMode::AmpBounded;
    config.nn.range_r = 3.0;
    config.shots.ansatz = 10000;
    config.shots.term = 10000;
    json row{{"seed_index", seed_index}, {"seed", config.seed}};
    try {
      const SingleRun vqnhe = run_pipeline(config, Flavor::Dnp);
      const fs::path seed_dir = out / ("seed_" + std::to_string(seed_index));
      write_run_outputs((seed_dir / "vqnhe").string(), vqnhe);

      SingleRun uvqnhe;
      uvqnhe.config = config;
      uvqnhe.flavor = Flavor::Uvqnhe;
      uvqnhe.vqe = vqnhe.vqe;  // shared frozen circuit
      uvqnhe.ground = vqnhe.ground;
      uvqnhe.trace = train_uvqnhe(config, vqnhe.vqe.theta);
      write_run_outputs((seed_dir / "uvqnhe").string(), uvqnhe);

      const double e_gs = vqnhe.ground->e_gs;
      row["e_gs"] = e_gs;
      row["vqe_energy"] = vqnhe.vqe.energy;
      row["vqnhe_final_energy"] = vqnhe.trace.final_energy;
      row["vqnhe_final_exact"] = vqnhe.trace.final_exact_energy
                                     ? json(*vqnhe.trace.final_exact_energy)
                                     : json(nullptr);
      row["vqnhe_below_ground"] = vqnhe.trace.final_energy < e_gs;
      row["uvqnhe_final_energy"] = uvqnhe.trace.final_energy;
      row["uvqnhe_final_exact"] = uvqnhe.trace.final_exact_energy
                                      ? json(*uvqnhe.trace.final_exact_energy)
                                      : json(nullptr);
      const MeasurementDataset dataset =
          training_dataset(config, vqnhe.vqe.theta, true);
      row["sigma_shot"] = uvqnhe_energy_stderr(
          dataset, [](std::uint64_t) { return 0.0; });
    } catch (const std::exception &e) {
      row["error"] = e.what();
    }
    rows.push_back(row);
  }
  write_file((out / "recipe_summary.json").string(),
             json{{"version", kVersion},
                  {"recipe", "fig4b_uvqnhe_vs_vqnhe"},
                  {"rows", rows}}
                 .dump(2));
}

}  // namespace

void run_recipe(const std::string &name, std::uint64_t master_seed,
                const std::string &out_dir) {
  const fs::path out = fs::path(out_dir) / name;
  fs::create_directories(out);
  if (name == "fig1_divergence") {
    run_fig1(master_seed, out);
  } else if (name == "fig3_constrained_sweep") {
    run_fig3(master_seed, out);
  } else if (name == "fig4a_size_sweep") {
    run_fig4a(master_seed, out);
  } else if (name == "fig4b_uvqnhe_vs_vqnhe") {
    run_fig4b(master_seed, out);
  } else {
    throw std::invalid_argument("unknown recipe: " + name);
  }
}

void diagnose(const std::vector<std::string> &sample_files,
              const std::string &checkpoint_file, const std::string &out_dir) {
  if (sample_files.empty()) {
    throw std::invalid_argument("diagnose: no sample files given");
  }
  std::optional<SampleSet> ansatz;
  std::vector<SampleSet> term_sets;
  for (const auto &path : sample_files) {
    SampleSet set;
    try {
      set = sampleset_from_json(read_file(path));
    } catch (const std::exception &e) {
      throw std::invalid_argument("diagnose: " + path + ": " + e.what());
    }
    if (set.tag == kAnsatzTag) {
      ansatz = std::move(set);
    } else if (set.tag.starts_with("pauli-real:")) {
      term_sets.push_back(std::move(set));
    }
    // Imaginary-variant sets carry no support information; skipped.
  }
  if (!ansatz) {
    throw std::invalid_argument(
        "diagnose: no sample set tagged ansatz-identity");
  }

  MeasurementDataset data;
  data.n = ansatz->n;
  data.ansatz = std::move(*ansatz);
  std::vector<std::pair<double, PauliString>> terms;
  for (auto &set : term_sets) {
    const std::string letters = set.tag.substr(std::string("pauli-real:").size());
    TermMeasurement term;
    term.coeff = 1.0;
    term.pauli = PauliString::from_letters(letters);
    if (term.pauli.num_qubits() != data.n) {
      throw std::invalid_argument("diagnose: sample-set size mismatch for " +
                                  letters);
    }
    term.real_plan = plan_measurement(term.pauli, MeasurementVariant::Real);
    term.real = std::move(set);
    terms.emplace_back(1.0, term.pauli);
    data.terms.push_back(std::move(term));
  }
  data.hamiltonian = Hamiltonian::from_terms(data.n, terms);

  fs::create_directories(out_dir);
  const SupportReport support = support_report(data);
  write_file(out_dir + "/support_report.json", support_report_to_json(support));

  json coupon;
  const std::uint64_t n_m = support.numerator_support.size();
  if (n_m >= 1) {
    coupon["n"] = data.n;
    coupon["numerator_support_size"] = n_m;
    coupon["expected_shots"] = coupon_expected_shots(data.n, n_m);
    coupon["delta"] = 0.1;
    coupon["highprob_shots"] = coupon_highprob_shots(data.n, n_m, 0.1);
  }
  write_file(out_dir + "/coupon_bounds.json", coupon.dump(2));

  // Divergence panel between the checkpoint's reweighting of the ansatz
  // distribution and the ansatz distribution itself (f == 1 without a
  // checkpoint).
  WeightFn f = [](std::uint64_t) { return 1.0; };
  std::optional<NeuralNet> net;
  double cap = 0.0;
  if (!checkpoint_file.empty()) {
    net = neuralnet_from_json(read_file(checkpoint_file));
    if (net->n_in() != data.n) {
      throw std::invalid_argument("diagnose: checkpoint width mismatch");
    }
    f = tabulated(*net);
    if (net->mode() == OutputMode::AmpBounded) {
      cap = net->range_r() * net->range_r();
    }
  }
  const std::uint64_t dim = std::uint64_t{1} << data.n;
  std::vector<double> q(dim, 0.0);
  for (const auto &[s, raw] : data.ansatz.counts) {
    q[s] = raw / data.ansatz.weight_norm();
  }
  std::vector<double> p(dim, 0.0);
  double z = 0.0;
  for (std::uint64_t s = 0; s < dim; ++s) z += f(s) * q[s];
  for (std::uint64_t s = 0; s < dim; ++s) p[s] = f(s) * q[s] / z;

  const DivergenceReport divergence = divergence_report(p, q);
  json div_doc = json::parse(divergence_report_to_json(divergence));
  if (cap > 0.0) div_doc["gamma_cap_r_squared"] = cap;
  write_file(out_dir + "/divergence_report.json", div_doc.dump(2));
}

}  // namespace qnhe::tools
