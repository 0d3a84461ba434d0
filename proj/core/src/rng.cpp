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
#include "qnhe/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace qnhe {

std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

namespace {

constexpr std::uint32_t kPhiloxM0 = 0xD2511F53u;
constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57u;
constexpr std::uint32_t kPhiloxW0 = 0x9E3779B9u;
constexpr std::uint32_t kPhiloxW1 = 0xBB67AE85u;

inline void philox_round(std::uint32_t c[4], std::uint32_t k0,
                         std::uint32_t k1) {
  const std::uint64_t p0 = std::uint64_t{kPhiloxM0} * c[0];
  const std::uint64_t p1 = std::uint64_t{kPhiloxM1} * c[2];
  const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
  const std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
  const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
  const std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
  const std::uint32_t out0 = hi1 ^ c[1] ^ k0;
  const std::uint32_t out2 = hi0 ^ c[3] ^ k1;
  c[0] = out0;
  c[1] = lo1;
  c[2] = out2;
  c[3] = lo0;
}

}  // namespace

void RngStream::refill() {
  std::uint32_t c[4] = {
      static_cast<std::uint32_t>(counter_),
      static_cast<std::uint32_t>(counter_ >> 32),
      static_cast<std::uint32_t>(stream_),
      static_cast<std::uint32_t>(stream_ >> 32),
  };
  std::uint32_t k0 = static_cast<std::uint32_t>(seed_);
  std::uint32_t k1 = static_cast<std::uint32_t>(seed_ >> 32);
  for (int round = 0; round < 10; ++round) {
    philox_round(c, k0, k1);
    k0 += kPhiloxW0;
    k1 += kPhiloxW1;
  }
  buf_[0] = (std::uint64_t{c[1]} << 32) | c[0];
  buf_[1] = (std::uint64_t{c[3]} << 32) | c[2];
  buf_pos_ = 0;
  ++counter_;
}

RngStream RngStream::derive(std::string_view tag) const {
  return derive(fnv1a64(tag));
}

RngStream RngStream::derive(std::uint64_t salt) const {
  return RngStream(seed_, splitmix64(stream_ ^ salt));
}

std::uint64_t RngStream::next_u64() {
  if (buf_pos_ >= 2) refill();
  return buf_[buf_pos_++];
}

double RngStream::next_double() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::next_gaussian() {
  if (have_gauss_) {
    have_gauss_ = false;
    return gauss_;
  }
  // Box-Muller; u clamped away from zero so log stays finite.
  double u = next_double();
  if (u <= 0.0) u = 0x1.0p-53;
  const double v = next_double();
  const double radius = std::sqrt(-2.0 * std::log(u));
  const double angle = 6.283185307179586476925286766559 * v;
  gauss_ = radius * std::sin(angle);
  have_gauss_ = true;
  return radius * std::cos(angle);
}

std::uint64_t RngStream::uniform_int(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_int: bound must be > 0");
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = next_u64();
    if (r >= threshold) return r % bound;
  }
}

}  // namespace qnhe
