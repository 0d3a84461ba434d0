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
//
// qnlab: experiment runner for the VQE / VQNHE / U-VQNHE laboratory.
//
//   qnlab vqe     --out DIR [--config PATH] [--seed N] [...]
//   qnlab vqnhe   --out DIR [--config PATH] [--seed N] [...]
//   qnlab uvqnhe  --out DIR [--config PATH] [--seed N] [...]
//   qnlab diagnose --samples F... [--checkpoint F] --out DIR
//   qnlab recipe NAME --seed N --out DIR
//
// Exit codes: 0 success, 1 configuration error, 2 runtime failure.
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "config.hpp"
#include "qnhe/serialize.hpp"
#include "recipes.hpp"

namespace {

using namespace qnhe;
using namespace qnhe::tools;

struct CommonFlags {
  std::string config_path;
  std::string out_dir = "qnlab-out";
  std::optional<std::uint64_t> seed;
  bool exact = false;
  std::optional<std::uint64_t> shots_ansatz;
  std::optional<std::uint64_t> shots_term;
};

void add_common_flags(CLI::App *cmd, CommonFlags &flags) {
  cmd->add_option("--config", flags.config_path, "Experiment config (JSON)");
  cmd->add_option("--seed", flags.seed, "Master seed (overrides config)");
  cmd->add_option("--out", flags.out_dir, "Output directory");
  cmd->add_flag("--exact", flags.exact,
                "Exact-probability mode (no shot sampling)");
  cmd->add_option("--shots-ansatz", flags.shots_ansatz,
                  "Shots for the ansatz circuit");
  cmd->add_option("--shots-term", flags.shots_term,
                  "Shots per measurement circuit");
}

TrainingConfig resolve_config(const CommonFlags &flags) {
  TrainingConfig config = flags.config_path.empty()
                              ? TrainingConfig{}
                              : config_from_json(read_file(flags.config_path));
  if (flags.seed) config.seed = *flags.seed;
  if (flags.exact) config.shots.exact = true;
  if (flags.shots_ansatz) config.shots.ansatz = *flags.shots_ansatz;
  if (flags.shots_term) config.shots.term = *flags.shots_term;
  return config;
}

int run_flavor(const CommonFlags &flags, Flavor flavor) {
  const TrainingConfig config = resolve_config(flags);
  const SingleRun run = run_pipeline(config, flavor);
  write_run_outputs(flags.out_dir, run);
  std::printf("vqe baseline: %.10f\n", run.vqe.energy);
  if (run.ground) std::printf("ground energy: %.10f\n", run.ground->e_gs);
  if (flavor != Flavor::VqeOnly) {
    std::printf("final energy: %.10f (%s)\n", run.trace.final_energy,
                to_string(run.trace.termination));
  }
  std::printf("outputs in %s\n", flags.out_dir.c_str());
  return 0;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"statevector laboratory for quantum-neural hybrid eigensolvers"};
  app.require_subcommand(1);

  CommonFlags vqe_flags, vqnhe_flags, uvqnhe_flags, recipe_flags;
  CLI::App *vqe = app.add_subcommand("vqe", "Derivative-free VQE baseline");
  add_common_flags(vqe, vqe_flags);
  CLI::App *vqnhe = app.add_subcommand(
      "vqnhe", "VQE + diagonal non-unitary neural post-processing");
  add_common_flags(vqnhe, vqnhe_flags);
  CLI::App *uvqnhe = app.add_subcommand(
      "uvqnhe", "VQE + diagonal unitary (phase) neural post-processing");
  add_common_flags(uvqnhe, uvqnhe_flags);

  std::vector<std::string> sample_files;
  std::string checkpoint_file;
  std::string diagnose_out = "qnlab-out";
  CLI::App *diag = app.add_subcommand(
      "diagnose", "Support/divergence/coupon reports over sample files");
  diag->add_option("--samples", sample_files, "SampleSet JSON files")
      ->required();
  diag->add_option("--checkpoint", checkpoint_file,
                   "Network checkpoint JSON (optional)");
  diag->add_option("--out", diagnose_out, "Output directory");

  std::string recipe_name;
  CLI::App *recipe = app.add_subcommand(
      "recipe", "Run a figure-reproduction grid");
  recipe->add_option("name", recipe_name, "Recipe name")
      ->required()
      ->check(CLI::IsMember(recipe_names()));
  add_common_flags(recipe, recipe_flags);
  // Reproduction grids must be explicitly seeded.
  recipe->get_option("--seed")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (vqe->parsed()) return run_flavor(vqe_flags, Flavor::VqeOnly);
    if (vqnhe->parsed()) return run_flavor(vqnhe_flags, Flavor::Dnp);
    if (uvqnhe->parsed()) return run_flavor(uvqnhe_flags, Flavor::Uvqnhe);
    if (diag->parsed()) {
      diagnose(sample_files, checkpoint_file, diagnose_out);
      std::printf("reports in %s\n", diagnose_out.c_str());
      return 0;
    }
    if (recipe->parsed()) {
      run_recipe(recipe_name, *recipe_flags.seed, recipe_flags.out_dir);
      std::printf("recipe outputs in %s/%s\n", recipe_flags.out_dir.c_str(),
                  recipe_name.c_str());
      return 0;
    }
  } catch (const std::invalid_argument &e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 1;
  } catch (const std::exception &e) {
    std::fprintf(stderr, "runtime failure: %s\n", e.what());
    return 2;
  }
  return 1;
}
