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
#include "config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "qnhe/serialize.hpp"

namespace qnhe::tools {

using nlohmann::json;

TrainingConfig config_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::exception &e) {
    throw std::invalid_argument(std::string("config parse error: ") + e.what());
  }
  TrainingConfig config;
  try {
    config.n = doc.value("n", config.n);
    config.field = doc.value("field", config.field);
    if (doc.contains("boundary")) {
      config.boundary =
          boundary_from_string(doc.at("boundary").get<std::string>());
    }
    config.layers = doc.value("layers", config.layers);
    config.seed = doc.value("seed", config.seed);
    if (doc.contains("vqe")) {
      const auto &vqe = doc.at("vqe");
      config.vqe.budget = vqe.value("budget", config.vqe.budget);
      config.vqe.tolerance = vqe.value("tolerance", config.vqe.tolerance);
      config.vqe.shot_mode = vqe.value("shot_mode", config.vqe.shot_mode);
    }
    if (doc.contains("nn")) {
      const auto &nn = doc.at("nn");
      if (nn.contains("mode")) {
        config.nn.mode = output_mode_from_string(nn.at("mode").get<std::string>());
      }
      config.nn.range_r = nn.value("r", config.nn.range_r);
      config.nn.epochs = nn.value("epochs", config.nn.epochs);
      config.nn.learning_rate = nn.value("learning_rate", config.nn.learning_rate);
      config.nn.hidden = nn.value("hidden", config.nn.hidden);
      if (nn.contains("activation")) {
        config.nn.activation =
            activation_from_string(nn.at("activation").get<std::string>());
      }
      config.nn.refresh_samples =
          nn.value("refresh_samples", config.nn.refresh_samples);
      config.nn.record_exact = nn.value("record_exact", config.nn.record_exact);
    }
    if (doc.contains("shots")) {
      const auto &shots = doc.at("shots");
      config.shots.exact = shots.value("exact", config.shots.exact);
      config.shots.ansatz = shots.value("ansatz", config.shots.ansatz);
      config.shots.term = shots.value("term", config.shots.term);
    }
  } catch (const json::exception &e) {
    throw std::invalid_argument(std::string("config field error: ") + e.what());
  }

  if (config.n < 2 || config.n > kMaxQubits) {
    throw std::invalid_argument("config: n out of range");
  }
  if (config.layers < 1) throw std::invalid_argument("config: layers >= 1");
  if (config.nn.epochs < 1) throw std::invalid_argument("config: epochs >= 1");
  if (!config.shots.exact && (config.shots.ansatz < 1 || config.shots.term < 1)) {
    throw std::invalid_argument("config: shots >= 1 unless exact mode");
  }
  return config;
}

std::string config_to_json(const TrainingConfig &config) {
  return json{
      {"n", config.n},
      {"field", config.field},
      {"boundary", to_string(config.boundary)},
      {"layers", config.layers},
      {"seed", config.seed},
      {"vqe",
       {{"budget", config.vqe.budget},
        {"tolerance", config.vqe.tolerance},
        {"shot_mode", config.vqe.shot_mode}}},
      {"nn",
       {{"mode", to_string(config.nn.mode)},
        {"r", config.nn.range_r},
        {"epochs", config.nn.epochs},
        {"learning_rate", config.nn.learning_rate},
        {"hidden", config.nn.hidden},
        {"activation", to_string(config.nn.activation)},
        {"refresh_samples", config.nn.refresh_samples},
        {"record_exact", config.nn.record_exact}}},
      {"shots",
       {{"exact", config.shots.exact},
        {"ansatz", config.shots.ansatz},
        {"term", config.shots.term}}}}
      .dump(2);
}

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string &path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
}

}  // namespace qnhe::tools
