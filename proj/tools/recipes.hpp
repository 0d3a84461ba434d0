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
#include <string>
#include <vector>

#include "qnhe/groundtruth.hpp"
#include "qnhe/training.hpp"

namespace qnhe::tools {

enum class Flavor { VqeOnly, Dnp, Uvqnhe };

struct SingleRun {
  TrainingConfig config;
  Flavor flavor = Flavor::VqeOnly;
  VqeResult vqe;
  std::optional<GroundTruth> ground;  // absent beyond the solver's n = 14
  TrainingTrace trace;                // empty for VqeOnly
};

/// VQE baseline, ground truth, and (for Dnp/Uvqnhe) the neural training
/// stage on top of the frozen circuit.
SingleRun run_pipeline(const TrainingConfig &config, Flavor flavor);

/// Writes trace.csv, vqe_trace.csv, summary.json, theta.json,
/// nn_checkpoint.json, nn_outputs.csv and samples/*.json under `dir`.
void write_run_outputs(const std::string &dir, const SingleRun &run);

std::vector<std::string> recipe_names();

/// Executes a named figure-reproduction grid. Individual grid-point
/// failures are recorded in the recipe summary, not fatal.
void run_recipe(const std::string &name, std::uint64_t master_seed,
                const std::string &out_dir);

/// Support/divergence/coupon reports over serialized sample sets, with an
/// optional network checkpoint supplying the reweighting.
void diagnose(const std::vector<std::string> &sample_files,
              const std::string &checkpoint_file, const std::string &out_dir);

}  // namespace qnhe::tools
