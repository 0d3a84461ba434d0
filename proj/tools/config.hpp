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

#include "qnhe/training.hpp"

namespace qnhe::tools {

/// Flat JSON experiment config; every field optional, spec'd defaults.
TrainingConfig config_from_json(std::string_view text);
std::string config_to_json(const TrainingConfig &config);

std::string read_file(const std::string &path);
void write_file(const std::string &path, std::string_view content);

}  // namespace qnhe::tools
