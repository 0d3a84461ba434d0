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

#include <string>
#include <string_view>

#include "qnhe/diagnostics.hpp"
#include "qnhe/estimators.hpp"
#include "qnhe/groundtruth.hpp"
#include "qnhe/neural.hpp"
#include "qnhe/training.hpp"

namespace qnhe {

// JSON wire formats. Schemas:
//   Hamiltonian:  {"n": int, "terms": [[coeff, "IXYZ..."], ...]}
//   SampleSet:    {"tag": str, "shots": int, "counts": {"0101": count}}
//                 (+ "exact": true when probabilities stand in for counts)
//   NeuralNet:    {"mode", "r", "n_in", "hidden", "activation", "params"}
// Qubit 0 is the leftmost character of every bit/letter string.

std::string hamiltonian_to_json(const Hamiltonian &h);
Hamiltonian hamiltonian_from_json(std::string_view text);

std::string sampleset_to_json(const SampleSet &set);
SampleSet sampleset_from_json(std::string_view text);

std::string neuralnet_to_json(const NeuralNet &net);
NeuralNet neuralnet_from_json(std::string_view text);

std::string estimate_to_json(const EnergyEstimate &estimate);
std::string support_report_to_json(const SupportReport &report);
std::string divergence_report_to_json(const DivergenceReport &report);
std::string groundtruth_to_json(const GroundTruth &gt, int n);

std::string trace_to_json(const TrainingTrace &trace);
/// Fixed schema: epoch,energy,denominator,inclusion_flag,wall_ms (the
/// denominator column is empty for VQE/U-VQNHE traces).
std::string trace_to_csv(const TrainingTrace &trace);

/// Columns: n,mean_bc,stderr,analytic_prediction.
std::string haar_study_to_csv(const HaarBcStudy &study);
std::string haar_study_to_json(const HaarBcStudy &study);

const char *to_string(Termination t);
const char *to_string(OutputMode m);
const char *to_string(Activation a);
const char *to_string(Boundary b);

OutputMode output_mode_from_string(std::string_view s);
Activation activation_from_string(std::string_view s);
Boundary boundary_from_string(std::string_view s);

/// Shortest-round-trip double formatting used by all CSV output.
std::string format_double(double value);

}  // namespace qnhe
