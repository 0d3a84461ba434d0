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
#include <functional>
#include <span>
#include <vector>

#include "qnhe/estimators.hpp"
#include "qnhe/rng.hpp"

namespace qnhe {

/// Sampled-support bookkeeping for the DNP ratio estimator. The estimator
/// is stably normalized only when every configuration that can enter a
/// numerator (after star collapse and pairing) was also observed by the
/// ansatz circuit.
struct SupportReport {
  int n = 0;
  std::vector<std::uint64_t> ansatz_support;     // B_a, sorted
  std::vector<std::uint64_t> numerator_support;  // B_M, sorted
  std::vector<std::uint64_t> missing;            // B_M \ B_a, sorted
  bool inclusion_holds = false;
};

SupportReport support_report(const MeasurementDataset &data);

/// Expected uniform ansatz shots to observe all n_m target strings:
/// 2^n * H_{n_m}. Requires 1 <= n_m <= 2^n.
double coupon_expected_shots(int n, std::uint64_t n_m);

/// Shot budget guaranteeing support inclusion with probability >= 1-delta:
/// ceil(2^n * ln(n_m / delta)). Requires delta in (0,1).
std::uint64_t coupon_highprob_shots(int n, std::uint64_t n_m, double delta);

/// Classical overlap sum_s sqrt(p(s) q(s)), in [0, 1]. Distributions must
/// be normalized within 1e-8 over the same index universe.
double bhattacharyya(std::span<const double> p, std::span<const double> q);

enum class RenyiOrder { Half, Infinity };

/// Renyi divergence in natural log. Order 1/2 equals -2 ln B(p,q); order
/// infinity returns +inf (a value, not an exception) when q misses part of
/// p's support.
double renyi(std::span<const double> p, std::span<const double> q,
             RenyiOrder order);

struct DynamicRangeReport {
  double gamma = 1.0;        // max f / min f with f = p/q on common support
  double bc = 1.0;           // B(p, q)
  double lower_bound = 1.0;  // B^{-4}
  bool holds = false;        // gamma >= lower_bound
};

/// The dynamic-range inequality gamma >= B(p,q)^{-4} for the reweighting
/// f = p/q.
DynamicRangeReport dynamic_range_bound(std::span<const double> p,
                                       std::span<const double> q);

/// Divergence panel between a target p and a reference q.
struct DivergenceReport {
  double bhattacharyya = 1.0;
  double renyi_half = 0.0;
  double renyi_inf_pq = 0.0;
  double renyi_inf_qp = 0.0;
  double gamma = 1.0;
  double gamma_lower_bound = 1.0;
};

DivergenceReport divergence_report(std::span<const double> p,
                                   std::span<const double> q);

/// Minimum measurements for stable estimation at output range [1/r, r] and
/// tolerance eps: ceil(9 r^4 / (4 eps^2)). Requires r >= 1, eps > 0.
std::uint64_t shot_lower_bound(double r, double eps);
/// Truncating variant of the same formula (floor), used by reproduction
/// configs that quote it as a literal shot count.
std::uint64_t shot_lower_bound_truncated(double r, double eps);

/// Exact Haar state via normalized complex Gaussians.
StateVector haar_random_state(int n, RngStream &rng);
/// Brickwork circuit of depth n with random RX/RZ/RZZ angles; probes the
/// linear-depth 2-design regime without exact Haar sampling.
StateVector random_circuit_state(int n, RngStream &rng);

enum class HaarSampler { Gaussian, RandomCircuit };

struct HaarBcRow {
  int n = 0;
  double mean_bc = 0.0;
  double stderr_bc = 0.0;
  /// Beta-moment prediction: sum_s sqrt(p(s)) * Gamma(3/2)Gamma(d)/Gamma(d+1/2).
  double analytic = 0.0;
};

struct HaarBcStudy {
  std::vector<HaarBcRow> rows;
  /// Least-squares slope of ln(mean_bc) versus n, in nats per qubit.
  double fitted_slope = 0.0;
};

/// Scaling of E[B(p, q)] over Haar-random q per qubit count. `target_p`
/// maps n to the fixed target distribution; the default is a point mass at
/// |0...0> so the fitted slope isolates the 2^{-n/2} factor.
HaarBcStudy haar_bc_study(
    std::span<const int> ns, int trials, RngStream rng,
    const std::function<std::vector<double>(int)> &target_p = {},
    HaarSampler sampler = HaarSampler::Gaussian);

/// Beta-moment mean of sqrt(q(s)) for one Haar amplitude in dimension d.
double haar_sqrt_moment(double d);

struct WitnessPoint {
  double k = 1.0;
  double energy = 0.0;
  double denominator = 0.0;
};

struct UnboundednessWitness {
  bool found = false;
  std::uint64_t witness = 0;       // s* in B_M \ B_a
  PauliString term{1};             // term with the most negative coefficient on s*
  double linear_coefficient = 0.0; // d(sum c_P N_P)/df(s*)
  std::vector<WitnessPoint> trace; // f_k(s*) = k for k = 1, 10, ..., 1e4
};

/// Constructive check of the support-mismatch instability: finds a
/// configuration outside the ansatz support whose numerator coefficient is
/// negative and scales its weight, which drives the estimate down while
/// the denominator stays exactly constant.
UnboundednessWitness unboundedness_witness(const MeasurementDataset &data,
                                           const WeightFn &f_base);

}  // namespace qnhe
