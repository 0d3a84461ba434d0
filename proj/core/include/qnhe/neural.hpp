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
#include <span>
#include <vector>

#include "qnhe/rng.hpp"

namespace qnhe {

/// Output squashing of the two-layer perceptron.
///   AmpBounded:  f(s) = exp(ln(r) * tanh(z)), strictly inside [1/r, r]
///   AmpPositive: f(s) = exp(z) clamped to [1e-12, 1e12]
///   Phase:       g(s) = pi * tanh(z), in [-pi, pi]
enum class OutputMode { AmpBounded, AmpPositive, Phase };

enum class Activation { Tanh, Relu, Sigmoid };

/// Two fully-connected layers; input is the bit string encoded as a +/-1
/// vector (bit b -> 1 - 2b), output a single squashed scalar.
class NeuralNet {
 public:
  NeuralNet() = default;

  /// Xavier-uniform initialization from the stream.
  static NeuralNet init(int n_in, int hidden, OutputMode mode, double range_r,
                        Activation activation, RngStream &rng);
  static NeuralNet from_params(int n_in, int hidden, OutputMode mode,
                               double range_r, Activation activation,
                               std::vector<double> params);

  int n_in() const { return n_in_; }
  int hidden() const { return hidden_; }
  OutputMode mode() const { return mode_; }
  double range_r() const { return range_r_; }
  Activation activation() const { return activation_; }

  std::size_t param_count() const;
  const std::vector<double> &params() const { return params_; }
  void set_params(std::span<const double> params);

  double forward(std::uint64_t s) const;

  /// Accumulates the gradient of (upstream * forward(s)) into `grad`
  /// (length param_count()). Callers batch many strings into one buffer.
  void accumulate_backward(std::uint64_t s, double upstream,
                           std::span<double> grad) const;

  /// Gradient of (upstream * forward(s)) as a fresh vector.
  std::vector<double> backward(std::uint64_t s, double upstream) const;

 private:
  // Flat layout: W1 (hidden x n_in, row-major), b1, W2, b2.
  double w1(int row, int col) const {
    return params_[static_cast<std::size_t>(row) * n_in_ + col];
  }

  int n_in_ = 0;
  int hidden_ = 0;
  OutputMode mode_ = OutputMode::AmpBounded;
  double range_r_ = 3.0;
  Activation activation_ = Activation::Tanh;
  std::vector<double> params_;
};

struct AdamState {
  double learning_rate = 1e-2;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
  long step = 0;
  std::vector<double> m;
  std::vector<double> v;

  explicit AdamState(std::size_t size, double lr = 1e-2)
      : learning_rate(lr), m(size, 0.0), v(size, 0.0) {}
};

/// Standard bias-corrected Adam update; shapes must match.
void adam_step(std::vector<double> &params, std::span<const double> grad,
               AdamState &state);

}  // namespace qnhe
