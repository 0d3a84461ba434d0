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
#include "qnhe/neural.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qnhe/statevector.hpp"

namespace qnhe {

namespace {

constexpr double kPositiveClampLo = 1e-12;
constexpr double kPositiveClampHi = 1e12;

double activate(Activation a, double x) {
  switch (a) {
    case Activation::Tanh:
      return std::tanh(x);
    case Activation::Relu:
      return x > 0.0 ? x : 0.0;
    case Activation::Sigmoid:
      return 1.0 / (1.0 + std::exp(-x));
  }
  return 0.0;
}

double activate_deriv(Activation a, double x) {
  switch (a) {
    case Activation::Tanh: {
      const double t = std::tanh(x);
      return 1.0 - t * t;
    }
    case Activation::Relu:
      return x > 0.0 ? 1.0 : 0.0;
    case Activation::Sigmoid: {
      const double s = 1.0 / (1.0 + std::exp(-x));
      return s * (1.0 - s);
    }
  }
  return 0.0;
}

}  // namespace

NeuralNet NeuralNet::init(int n_in, int hidden, OutputMode mode,
                          double range_r, Activation activation,
                          RngStream &rng) {
  if (n_in < 1 || hidden < 1) {
    throw std::invalid_argument("NeuralNet: bad layer sizes");
  }
  if (mode == OutputMode::AmpBounded && range_r <= 1.0) {
    throw std::invalid_argument("NeuralNet: bounded mode needs r > 1");
  }
  NeuralNet net;
  net.n_in_ = n_in;
  net.hidden_ = hidden;
  net.mode_ = mode;
  net.range_r_ = range_r;
  net.activation_ = activation;
  net.params_.assign(net.param_count(), 0.0);
  // Xavier-uniform hidden layer; output layer starts at zero so training
  // begins exactly at the identity post-processing (f == 1 or g == 0).
  const double lim1 = std::sqrt(6.0 / (n_in + hidden));
  for (int i = 0; i < hidden * n_in; ++i) {
    net.params_[static_cast<std::size_t>(i)] =
        lim1 * (2.0 * rng.next_double() - 1.0);
  }
  return net;
}

NeuralNet NeuralNet::from_params(int n_in, int hidden, OutputMode mode,
                                 double range_r, Activation activation,
                                 std::vector<double> params) {
  if (n_in < 1 || hidden < 1) {
    throw std::invalid_argument("NeuralNet: bad layer sizes");
  }
  NeuralNet net;
  net.n_in_ = n_in;
  net.hidden_ = hidden;
  net.mode_ = mode;
  net.range_r_ = range_r;
  net.activation_ = activation;
  if (params.size() != net.param_count()) {
    throw std::invalid_argument("NeuralNet: parameter count mismatch");
  }
  net.params_ = std::move(params);
  return net;
}

std::size_t NeuralNet::param_count() const {
  return static_cast<std::size_t>(hidden_) * n_in_ + hidden_ + hidden_ + 1;
}

void NeuralNet::set_params(std::span<const double> params) {
  if (params.size() != params_.size()) {
    throw std::invalid_argument("NeuralNet: parameter count mismatch");
  }
  params_.assign(params.begin(), params.end());
}

double NeuralNet::forward(std::uint64_t s) const {
  const std::size_t w1_size = static_cast<std::size_t>(hidden_) * n_in_;
  const double *b1 = params_.data() + w1_size;
  const double *w2 = b1 + hidden_;
  const double b2 = w2[hidden_];
  double z = b2;
  for (int iHidden = 0; iHidden < hidden_; ++iHidden) {
    double pre = b1[iHidden];
    for (int j = 0; j < n_in_; ++j) {
      const double x = bit_of(s, n_in_, j) ? -1.0 : 1.0;
      pre += w1(iHidden, j) * x;
    }
    z += w2[iHidden] * activate(activation_, pre);
  }
  switch (mode_) {
    case OutputMode::AmpBounded:
      return std::exp(std::log(range_r_) * std::tanh(z));
    case OutputMode::AmpPositive: {
      const double f = std::exp(z);
      if (f < kPositiveClampLo) return kPositiveClampLo;
      if (f > kPositiveClampHi) return kPositiveClampHi;
      return f;
    }
    case OutputMode::Phase:
      return std::numbers::pi * std::tanh(z);
  }
  return 0.0;
}

void NeuralNet::accumulate_backward(std::uint64_t s, double upstream,
                                    std::span<double> grad) const {
  if (grad.size() != params_.size()) {
    throw std::invalid_argument("backward: gradient size mismatch");
  }
  const std::size_t w1_size = static_cast<std::size_t>(hidden_) * n_in_;
  const double *b1 = params_.data() + w1_size;
  const double *w2 = b1 + hidden_;
  const double b2 = w2[hidden_];

  // Forward pass, keeping pre-activations.
  std::vector<double> pre(static_cast<std::size_t>(hidden_));
  std::vector<double> act(static_cast<std::size_t>(hidden_));
  double z = b2;
  for (int iHidden = 0; iHidden < hidden_; ++iHidden) {
    double p = b1[iHidden];
    for (int j = 0; j < n_in_; ++j) {
      const double x = bit_of(s, n_in_, j) ? -1.0 : 1.0;
      p += w1(iHidden, j) * x;
    }
    pre[iHidden] = p;
    act[iHidden] = activate(activation_, p);
    z += w2[iHidden] * act[iHidden];
  }

  double dout_dz = 0.0;
  switch (mode_) {
    case OutputMode::AmpBounded: {
      const double t = std::tanh(z);
      const double f = std::exp(std::log(range_r_) * t);
      dout_dz = f * std::log(range_r_) * (1.0 - t * t);
      break;
    }
    case OutputMode::AmpPositive: {
      const double f = std::exp(z);
      // Zero slope once the clamp is active.
      dout_dz = (f <= kPositiveClampLo || f >= kPositiveClampHi) ? 0.0 : f;
      break;
    }
    case OutputMode::Phase: {
      const double t = std::tanh(z);
      dout_dz = std::numbers::pi * (1.0 - t * t);
      break;
    }
  }

  const double dz = upstream * dout_dz;
  double *g_w1 = grad.data();
  double *g_b1 = g_w1 + w1_size;
  double *g_w2 = g_b1 + hidden_;
  for (int iHidden = 0; iHidden < hidden_; ++iHidden) {
    g_w2[iHidden] += dz * act[iHidden];
    const double dpre = dz * w2[iHidden] * activate_deriv(activation_, pre[iHidden]);
    g_b1[iHidden] += dpre;
    for (int j = 0; j < n_in_; ++j) {
      const double x = bit_of(s, n_in_, j) ? -1.0 : 1.0;
      g_w1[static_cast<std::size_t>(iHidden) * n_in_ + j] += dpre * x;
    }
  }
  g_w2[hidden_] += dz;  // b2
}

std::vector<double> NeuralNet::backward(std::uint64_t s,
                                        double upstream) const {
  std::vector<double> grad(params_.size(), 0.0);
  accumulate_backward(s, upstream, grad);
  return grad;
}

void adam_step(std::vector<double> &params, std::span<const double> grad,
               AdamState &state) {
  if (params.size() != grad.size() || params.size() != state.m.size()) {
    throw std::invalid_argument("adam_step: shape mismatch");
  }
  state.step += 1;
  const double b1 = state.beta1;
  const double b2 = state.beta2;
  const double corr1 = 1.0 - std::pow(b1, static_cast<double>(state.step));
  const double corr2 = 1.0 - std::pow(b2, static_cast<double>(state.step));
  for (std::size_t i = 0; i < params.size(); ++i) {
    state.m[i] = b1 * state.m[i] + (1.0 - b1) * grad[i];
    state.v[i] = b2 * state.v[i] + (1.0 - b2) * grad[i] * grad[i];
    const double mhat = state.m[i] / corr1;
    const double vhat = state.v[i] / corr2;
    params[i] -= state.learning_rate * mhat / (std::sqrt(vhat) + state.epsilon);
  }
}

}  // namespace qnhe
