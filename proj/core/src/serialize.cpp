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
#include "qnhe/serialize.hpp"

#include <charconv>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace qnhe {

using nlohmann::json;

namespace {

json parse(std::string_view text) {
  return json::parse(text.begin(), text.end());
}

}  // namespace

std::string format_double(double value) {
  char buffer[32];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  if (ec != std::errc{}) throw std::runtime_error("format_double failed");
  return std::string(buffer, ptr);
}

std::string hamiltonian_to_json(const Hamiltonian &h) {
  json terms = json::array();
  for (const auto &[coeff, pauli] : h.terms) {
    terms.push_back(json::array({coeff, pauli.letters()}));
  }
  return json{{"n", h.n}, {"terms", terms}}.dump();
}

Hamiltonian hamiltonian_from_json(std::string_view text) {
  const json doc = parse(text);
  const int n = doc.at("n").get<int>();
  std::vector<std::pair<double, PauliString>> terms;
  for (const auto &entry : doc.at("terms")) {
    terms.emplace_back(entry.at(0).get<double>(),
                       PauliString::from_letters(
                           entry.at(1).get<std::string>()));
  }
  return Hamiltonian::from_terms(n, terms);
}

std::string sampleset_to_json(const SampleSet &set) {
  // Keys sorted for stable output.
  std::map<std::string, double> counts;
  for (const auto &[s, c] : set.counts) counts[index_to_bits(s, set.n)] = c;
  json doc{{"tag", set.tag}, {"shots", set.shots}};
  json jcounts = json::object();
  for (const auto &[bits, c] : counts) {
    if (set.exact) {
      jcounts[bits] = c;
    } else {
      jcounts[bits] = static_cast<std::uint64_t>(c);
    }
  }
  doc["counts"] = jcounts;
  if (set.exact) doc["exact"] = true;
  return doc.dump();
}

SampleSet sampleset_from_json(std::string_view text) {
  const json doc = parse(text);
  SampleSet set;
  set.tag = doc.at("tag").get<std::string>();
  set.shots = doc.at("shots").get<std::uint64_t>();
  set.exact = doc.value("exact", false);
  const auto &counts = doc.at("counts");
  if (counts.empty()) {
    throw std::invalid_argument("SampleSet: counts must be nonempty");
  }
  for (const auto &[bits, value] : counts.items()) {
    if (set.n == 0) {
      set.n = static_cast<int>(bits.size());
    } else if (set.n != static_cast<int>(bits.size())) {
      throw std::invalid_argument("SampleSet: inconsistent bit-string length");
    }
    set.counts[bits_to_index(bits)] = value.get<double>();
  }
  return set;
}

std::string neuralnet_to_json(const NeuralNet &net) {
  return json{{"mode", to_string(net.mode())},
              {"r", net.range_r()},
              {"n_in", net.n_in()},
              {"hidden", net.hidden()},
              {"activation", to_string(net.activation())},
              {"params", net.params()}}
      .dump();
}

NeuralNet neuralnet_from_json(std::string_view text) {
  const json doc = parse(text);
  return NeuralNet::from_params(
      doc.at("n_in").get<int>(), doc.at("hidden").get<int>(),
      output_mode_from_string(doc.at("mode").get<std::string>()),
      doc.at("r").get<double>(),
      activation_from_string(doc.at("activation").get<std::string>()),
      doc.at("params").get<std::vector<double>>());
}

std::string estimate_to_json(const EnergyEstimate &estimate) {
  json per_term = json::array();
  for (const auto &[pauli, value] : estimate.per_term) {
    per_term.push_back(json::array({pauli.letters(), value}));
  }
  json shots = json::array();
  for (const auto &[tag, count] : estimate.shots_used) {
    shots.push_back(json::array({tag, count}));
  }
  json doc{{"value", estimate.value},
           {"per_term", per_term},
           {"shots", shots}};
  doc["denominator"] =
      estimate.denominator ? json(*estimate.denominator) : json(nullptr);
  return doc.dump();
}

namespace {

json bits_array(const std::vector<std::uint64_t> &strings, int n) {
  json out = json::array();
  for (std::uint64_t s : strings) out.push_back(index_to_bits(s, n));
  return out;
}

}  // namespace

std::string support_report_to_json(const SupportReport &report) {
  return json{{"n", report.n},
              {"ansatz_support", bits_array(report.ansatz_support, report.n)},
              {"numerator_support",
               bits_array(report.numerator_support, report.n)},
              {"missing", bits_array(report.missing, report.n)},
              {"inclusion_holds", report.inclusion_holds}}
      .dump();
}

std::string divergence_report_to_json(const DivergenceReport &report) {
  auto finite_or_null = [](double v) {
    return std::isfinite(v) ? json(v) : json("infinity");
  };
  return json{{"bhattacharyya", report.bhattacharyya},
              {"renyi_half", report.renyi_half},
              {"renyi_inf_pq", finite_or_null(report.renyi_inf_pq)},
              {"renyi_inf_qp", finite_or_null(report.renyi_inf_qp)},
              {"gamma", report.gamma},
              {"gamma_lower_bound", report.gamma_lower_bound}}
      .dump();
}

std::string groundtruth_to_json(const GroundTruth &gt, int n) {
  return json{{"n", n},
              {"e_gs", gt.e_gs},
              {"degeneracy_gap", gt.degeneracy_gap},
              {"residual", gt.residual}}
      .dump();
}

std::string trace_to_json(const TrainingTrace &trace) {
  json records = json::array();
  for (const auto &r : trace.records) {
    json rec{{"epoch", r.epoch},
             {"energy", r.energy},
             {"inclusion", r.inclusion},
             {"wall_ms", r.wall_ms}};
    rec["denominator"] = r.denominator ? json(*r.denominator) : json(nullptr);
    rec["exact_energy"] =
        r.exact_energy ? json(*r.exact_energy) : json(nullptr);
    records.push_back(rec);
  }
  json doc{{"records", records},
           {"termination", to_string(trace.termination)},
           {"final_energy", trace.final_energy},
           {"nn_params", trace.nn_params}};
  doc["final_exact_energy"] = trace.final_exact_energy
                                  ? json(*trace.final_exact_energy)
                                  : json(nullptr);
  doc["final_denominator"] = trace.final_denominator
                                 ? json(*trace.final_denominator)
                                 : json(nullptr);
  doc["inclusion_holds"] = trace.support.inclusion_holds;
  doc["missing_count"] = trace.support.missing.size();
  return doc.dump();
}

std::string trace_to_csv(const TrainingTrace &trace) {
  std::ostringstream out;
  out << "epoch,energy,denominator,inclusion_flag,wall_ms\n";
  for (const auto &r : trace.records) {
    out << r.epoch << ',' << format_double(r.energy) << ',';
    if (r.denominator) out << format_double(*r.denominator);
    out << ',' << (r.inclusion ? 1 : 0) << ',' << format_double(r.wall_ms)
        << '\n';
  }
  return out.str();
}

std::string haar_study_to_csv(const HaarBcStudy &study) {
  std::ostringstream out;
  out << "n,mean_bc,stderr,analytic_prediction\n";
  for (const auto &row : study.rows) {
    out << row.n << ',' << format_double(row.mean_bc) << ','
        << format_double(row.stderr_bc) << ',' << format_double(row.analytic)
        << '\n';
  }
  return out.str();
}

std::string haar_study_to_json(const HaarBcStudy &study) {
  json rows = json::array();
  for (const auto &row : study.rows) {
    rows.push_back(json{{"n", row.n},
                        {"mean_bc", row.mean_bc},
                        {"stderr", row.stderr_bc},
                        {"analytic", row.analytic}});
  }
  return json{{"rows", rows}, {"fitted_slope", study.fitted_slope}}.dump();
}

const char *to_string(Termination t) {
  switch (t) {
    case Termination::Completed:
      return "completed";
    case Termination::DenominatorCollapse:
      return "denominator_collapse";
    case Termination::NonFinite:
      return "nan";
    case Termination::DivergenceGuard:
      return "divergence_guard";
  }
  return "unknown";
}

const char *to_string(OutputMode m) {
  switch (m) {
    case OutputMode::AmpBounded:
      return "amp_bounded";
    case OutputMode::AmpPositive:
      return "amp_positive";
    case OutputMode::Phase:
      return "phase";
  }
  return "unknown";
}

const char *to_string(Activation a) {
  switch (a) {
    case Activation::Tanh:
      return "tanh";
    case Activation::Relu:
      return "relu";
    case Activation::Sigmoid:
      return "sigmoid";
  }
  return "unknown";
}

const char *to_string(Boundary b) {
  return b == Boundary::Periodic ? "periodic" : "open";
}

OutputMode output_mode_from_string(std::string_view s) {
  if (s == "amp_bounded") return OutputMode::AmpBounded;
  if (s == "amp_positive") return OutputMode::AmpPositive;
  if (s == "phase") return OutputMode::Phase;
  throw std::invalid_argument("unknown output mode: " + std::string(s));
}

Activation activation_from_string(std::string_view s) {
  if (s == "tanh") return Activation::Tanh;
  if (s == "relu") return Activation::Relu;
  if (s == "sigmoid") return Activation::Sigmoid;
  throw std::invalid_argument("unknown activation: " + std::string(s));
}

Boundary boundary_from_string(std::string_view s) {
  if (s == "open") return Boundary::Open;
  if (s == "periodic") return Boundary::Periodic;
  throw std::invalid_argument("unknown boundary: " + std::string(s));
}

}  // namespace qnhe
