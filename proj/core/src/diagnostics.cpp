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
#include "qnhe/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "qnhe/measurement.hpp"

namespace qnhe {

namespace {

std::vector<std::uint64_t> sorted(const std::unordered_set<std::uint64_t> &set) {
  std::vector<std::uint64_t> out(set.begin(), set.end());
  std::sort(out.begin(), out.end());
  return out;
}

void require_distribution(std::span<const double> p) {
  double total = 0.0;
  for (double x : p) {
    if (x < 0.0 || !std::isfinite(x)) {
      throw std::invalid_argument("distribution entries must be finite and >= 0");
    }
    total += x;
  }
  if (std::abs(total - 1.0) > 1e-8) {
    throw std::invalid_argument("distribution must sum to 1 within 1e-8");
  }
}

void require_same_universe(std::span<const double> p,
                           std::span<const double> q) {
  if (p.size() != q.size() || p.empty()) {
    throw std::invalid_argument("distributions must share one universe");
  }
}

}  // namespace

SupportReport support_report(const MeasurementDataset &data) {
  SupportReport report;
  report.n = data.n;
  std::unordered_set<std::uint64_t> ansatz_support;
  for (const auto &[s, raw] : data.ansatz.counts) ansatz_support.insert(s);

  std::unordered_set<std::uint64_t> numerator_support;
  for (const auto &term : data.terms) {
    if (term.pauli.is_identity()) continue;
    if (term.real_plan.direct()) {
      // Diagonal terms read the ansatz samples; their numerator support is
      // the observed ansatz support itself.
      for (const auto &[s, raw] : data.ansatz.counts) {
        numerator_support.insert(s);
      }
      continue;
    }
    for (const auto &[s, raw] : term.real.counts) {
      const std::uint64_t collapsed =
          star_collapse(s, term.real_plan.star, data.n);
      numerator_support.insert(collapsed);
      numerator_support.insert(pair_map(term.pauli, collapsed));
    }
  }

  std::unordered_set<std::uint64_t> missing;
  for (std::uint64_t s : numerator_support) {
    if (!ansatz_support.contains(s)) missing.insert(s);
  }
  report.ansatz_support = sorted(ansatz_support);
  report.numerator_support = sorted(numerator_support);
  report.missing = sorted(missing);
  report.inclusion_holds = missing.empty();
  return report;
}

double coupon_expected_shots(int n, std::uint64_t n_m) {
  if (n < 1 || n > kMaxQubits) {
    throw std::invalid_argument("coupon_expected_shots: n out of range");
  }
  const double dim = std::ldexp(1.0, n);
  if (n_m < 1 || static_cast<double>(n_m) > dim) {
    throw std::invalid_argument("coupon_expected_shots: n_m out of range");
  }
  double harmonic = 0.0;
  for (std::uint64_t i = 1; i <= n_m; ++i) {
    harmonic += 1.0 / static_cast<double>(i);
  }
  return dim * harmonic;
}

std::uint64_t coupon_highprob_shots(int n, std::uint64_t n_m, double delta) {
  if (n < 1 || n > kMaxQubits) {
    throw std::invalid_argument("coupon_highprob_shots: n out of range");
  }
  const double dim = std::ldexp(1.0, n);
  if (n_m < 1 || static_cast<double>(n_m) > dim) {
    throw std::invalid_argument("coupon_highprob_shots: n_m out of range");
  }
  if (!(delta > 0.0) || !(delta < 1.0)) {
    throw std::invalid_argument("coupon_highprob_shots: delta must be in (0,1)");
  }
  const double bound = dim * std::log(static_cast<double>(n_m) / delta);
  return static_cast<std::uint64_t>(std::ceil(std::max(0.0, bound)));
}

double bhattacharyya(std::span<const double> p, std::span<const double> q) {
  require_same_universe(p, q);
  require_distribution(p);
  require_distribution(q);
  double acc = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) acc += std::sqrt(p[i] * q[i]);
  return acc;
}

double renyi(std::span<const double> p, std::span<const double> q,
             RenyiOrder order) {
  if (order == RenyiOrder::Half) {
    return -2.0 * std::log(bhattacharyya(p, q));
  }
  require_same_universe(p, q);
  require_distribution(p);
  require_distribution(q);
  double max_ratio = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0.0) continue;
    if (q[i] <= 0.0) return std::numeric_limits<double>::infinity();
    max_ratio = std::max(max_ratio, p[i] / q[i]);
  }
  return std::log(max_ratio);
}

DynamicRangeReport dynamic_range_bound(std::span<const double> p,
                                       std::span<const double> q) {
  require_same_universe(p, q);
  require_distribution(p);
  require_distribution(q);
  double max_f = 0.0;
  double min_f = std::numeric_limits<double>::infinity();
  bool any = false;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0.0 || q[i] <= 0.0) continue;
    const double f = p[i] / q[i];
    max_f = std::max(max_f, f);
    min_f = std::min(min_f, f);
    any = true;
  }
  if (!any) {
    throw std::invalid_argument("dynamic_range_bound: empty common support");
  }
  DynamicRangeReport report;
  report.gamma = max_f / min_f;
  report.bc = bhattacharyya(p, q);
  report.lower_bound = 1.0 / std::pow(report.bc, 4.0);
  report.holds = report.gamma >= report.lower_bound * (1.0 - 1e-12);
  return report;
}

DivergenceReport divergence_report(std::span<const double> p,
                                   std::span<const double> q) {
  DivergenceReport report;
  report.bhattacharyya = bhattacharyya(p, q);
  report.renyi_half = -2.0 * std::log(report.bhattacharyya);
  report.renyi_inf_pq = renyi(p, q, RenyiOrder::Infinity);
  report.renyi_inf_qp = renyi(q, p, RenyiOrder::Infinity);
  report.gamma_lower_bound = 1.0 / std::pow(report.bhattacharyya, 4.0);
  report.gamma = dynamic_range_bound(p, q).gamma;
  return report;
}

std::uint64_t shot_lower_bound(double r, double eps) {
  if (!(r >= 1.0) || !std::isfinite(r)) {
    throw std::invalid_argument("shot_lower_bound: r must be >= 1");
  }
  if (!(eps > 0.0) || !std::isfinite(eps)) {
    throw std::invalid_argument("shot_lower_bound: eps must be > 0");
  }
  return static_cast<std::uint64_t>(
      std::ceil(9.0 * std::pow(r, 4.0) / (4.0 * eps * eps)));
}

std::uint64_t shot_lower_bound_truncated(double r, double eps) {
  if (!(r >= 1.0) || !(eps > 0.0)) {
    throw std::invalid_argument("shot_lower_bound_truncated: bad inputs");
  }
  return static_cast<std::uint64_t>(
      std::floor(9.0 * std::pow(r, 4.0) / (4.0 * eps * eps)));
}

StateVector haar_random_state(int n, RngStream &rng) {
  StateVector v;
  v.n = n;
  v.amps.resize(std::uint64_t{1} << n);
  for (auto &a : v.amps) a = {rng.next_gaussian(), rng.next_gaussian()};
  const double norm = v.norm();
  for (auto &a : v.amps) a /= norm;
  return v;
}

StateVector random_circuit_state(int n, RngStream &rng) {
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  Circuit c(n);
  for (int layer = 0; layer < n; ++layer) {
    for (int q = 0; q < n; ++q) {
      c.append(Gate::rx(q, kTwoPi * rng.next_double()));
      c.append(Gate::rz(q, kTwoPi * rng.next_double()));
    }
    for (int q = layer % 2; q + 1 < n; q += 2) {
      c.append(Gate::rzz(q, q + 1, kTwoPi * rng.next_double()));
    }
  }
  return run_circuit(c);
}

double haar_sqrt_moment(double d) {
  // Gamma(3/2) Gamma(d) / Gamma(d + 1/2)
  return std::exp(std::lgamma(1.5) + std::lgamma(d) - std::lgamma(d + 0.5));
}

HaarBcStudy haar_bc_study(
    std::span<const int> ns, int trials, RngStream rng,
    const std::function<std::vector<double>(int)> &target_p,
    HaarSampler sampler) {
  if (trials < 2) throw std::invalid_argument("haar_bc_study: trials too small");
  HaarBcStudy study;
  for (int n : ns) {
    const std::uint64_t dim = std::uint64_t{1} << n;
    std::vector<double> p;
    if (target_p) {
      p = target_p(n);
      if (p.size() != dim) {
        throw std::invalid_argument("haar_bc_study: target size mismatch");
      }
    } else {
      p.assign(dim, 0.0);
      p[0] = 1.0;
    }
    double sqrt_p_sum = 0.0;
    for (double x : p) sqrt_p_sum += std::sqrt(x);

    RngStream n_rng = rng.derive("haar-n" + std::to_string(n));
    double sum = 0.0;
    double sum_sq = 0.0;
    for (int t = 0; t < trials; ++t) {
      const StateVector psi = sampler == HaarSampler::Gaussian
                                  ? haar_random_state(n, n_rng)
                                  : random_circuit_state(n, n_rng);
      const std::vector<double> q = probabilities(psi);
      const double bc = bhattacharyya(p, q);
      sum += bc;
      sum_sq += bc * bc;
    }
    HaarBcRow row;
    row.n = n;
    row.mean_bc = sum / trials;
    const double var =
        std::max(0.0, (sum_sq - sum * sum / trials) / (trials - 1));
    row.stderr_bc = std::sqrt(var / trials);
    row.analytic = sqrt_p_sum * haar_sqrt_moment(static_cast<double>(dim));
    study.rows.push_back(row);
  }

  // Least-squares slope of ln(mean) vs n.
  const auto m = static_cast<double>(study.rows.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (const auto &row : study.rows) {
    const double x = row.n;
    const double y = std::log(row.mean_bc);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double denom = m * sxx - sx * sx;
  study.fitted_slope = denom != 0.0 ? (m * sxy - sx * sy) / denom : 0.0;
  return study;
}

UnboundednessWitness unboundedness_witness(const MeasurementDataset &data,
                                           const WeightFn &f_base) {
  std::unordered_set<std::uint64_t> ansatz_support;
  for (const auto &[s, raw] : data.ansatz.counts) ansatz_support.insert(s);

  // Linear coefficient of the numerator total in f(s) for every s outside
  // the ansatz support (the denominator cannot react to those strings).
  std::unordered_map<std::uint64_t, double> linear;
  // Per slot: (most negative single contribution, owning term index).
  std::unordered_map<std::uint64_t, std::pair<double, std::size_t>> worst;
  for (std::size_t t = 0; t < data.terms.size(); ++t) {
    const auto &term = data.terms[t];
    if (term.pauli.is_identity() || term.real_plan.direct()) continue;
    for (const auto &[s, raw] : term.real.counts) {
      const std::uint64_t collapsed =
          star_collapse(s, term.real_plan.star, data.n);
      const std::uint64_t partner = pair_map(term.pauli, collapsed);
      const double w = raw / term.real.weight_norm() *
                       term_sign(term.real_plan, s) * term.coeff;
      for (const auto &[slot, other] :
           {std::pair{collapsed, partner}, std::pair{partner, collapsed}}) {
        if (ansatz_support.contains(slot)) continue;
        const double contribution = w * f_base(other);
        linear[slot] += contribution;
        auto [it, inserted] = worst.try_emplace(slot, contribution, t);
        if (!inserted && contribution < it->second.first) {
          it->second = {contribution, t};
        }
      }
    }
  }

  UnboundednessWitness result;
  double best = 0.0;
  for (const auto &[s, coeff] : linear) {
    if (coeff < best || (coeff == best && result.found && s < result.witness)) {
      best = coeff;
      result.witness = s;
      result.found = true;
    }
  }
  if (!result.found) return result;
  result.linear_coefficient = best;
  result.term = data.terms[worst.at(result.witness).second].pauli;

  const std::uint64_t star = result.witness;
  for (double k : {1.0, 1e1, 1e2, 1e3, 1e4}) {
    WeightFn f_k = [&f_base, star, k](std::uint64_t s) {
      return s == star ? k : f_base(s);
    };
    const EnergyEstimate estimate = dnp_empirical_energy(data, f_k);
    result.trace.push_back({k, estimate.value, *estimate.denominator});
  }
  return result;
}

}  // namespace qnhe
