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

#include <cstdint>
#include <string_view>

namespace qnhe {

std::uint64_t fnv1a64(std::string_view s);
std::uint64_t splitmix64(std::uint64_t x);

/// Counter-based generator (Philox-4x32-10). A stream is addressed by
/// (seed, stream id, counter); `derive` spawns an independent stream from a
/// tag, so per-circuit sampling stays reproducible regardless of the order
/// or concurrency in which circuits are processed.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed, std::uint64_t stream = 0)
      : seed_(seed), stream_(stream) {}

  /// Child stream for a named subtask, starting at counter zero.
  [[nodiscard]] RngStream derive(std::string_view tag) const;
  [[nodiscard]] RngStream derive(std::uint64_t salt) const;

  std::uint64_t next_u64();
  /// Uniform in [0, 1), 53-bit resolution.
  double next_double();
  /// Standard normal via Box-Muller.
  double next_gaussian();
  /// Uniform in [0, bound); bound must be nonzero.
  std::uint64_t uniform_int(std::uint64_t bound);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }

 private:
  void refill();

  std::uint64_t seed_ = 0;
  std::uint64_t stream_ = 0;
  std::uint64_t counter_ = 0;
  std::uint64_t buf_[2] = {0, 0};
  int buf_pos_ = 2;
  bool have_gauss_ = false;
  double gauss_ = 0.0;
};

}  // namespace qnhe
