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
#include "qnhe/groundtruth.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "qnhe/rng.hpp"

namespace qnhe {

namespace {

constexpr int kDenseMaxQubits = 10;
constexpr int kLanczosMaxQubits = 14;

double residual_norm(const Hamiltonian &h, const StateVector &v, double e) {
  const StateVector hv = apply_hamiltonian(h, v);
  double acc = 0.0;
  for (std::uint64_t s = 0; s < v.dim(); ++s) {
    acc += std::norm(hv.amps[s] - e * v.amps[s]);
  }
  return std::sqrt(acc);
}

GroundTruth dense_ground_state(const Hamiltonian &h) {
  const std::uint64_t dim = std::uint64_t{1} << h.n;
  Eigen::MatrixXcd matrix = Eigen::MatrixXcd::Zero(dim, dim);
  // Column s of H: H|s>.
  StateVector basis;
  basis.n = h.n;
  basis.amps.assign(dim, {0.0, 0.0});
  for (std::uint64_t s = 0; s < dim; ++s) {
    basis.amps[s] = {1.0, 0.0};
    const StateVector column = apply_hamiltonian(h, basis);
    for (std::uint64_t t = 0; t < dim; ++t) matrix(t, s) = column.amps[t];
    basis.amps[s] = {0.0, 0.0};
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(matrix);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("ground_state: dense eigensolver failed");
  }
  GroundTruth out;
  out.e_gs = solver.eigenvalues()(0);
  out.degeneracy_gap = solver.eigenvalues()(1) - solver.eigenvalues()(0);
  out.ground_state.n = h.n;
  out.ground_state.amps.resize(dim);
  for (std::uint64_t s = 0; s < dim; ++s) {
    out.ground_state.amps[s] = solver.eigenvectors()(s, 0);
  }
  out.residual = residual_norm(h, out.ground_state, out.e_gs);
  return out;
}

GroundTruth lanczos_ground_state(const Hamiltonian &h,
                                 const GroundStateOptions &options) {
  const std::uint64_t dim = std::uint64_t{1} << h.n;
  const int max_iter =
      std::min<std::uint64_t>(options.max_iterations, dim);

  RngStream rng(options.seed, fnv1a64("groundtruth-lanczos"));
  StateVector v;
  v.n = h.n;
  v.amps.resize(dim);
  for (auto &a : v.amps) a = {rng.next_gaussian(), rng.next_gaussian()};
  double norm = v.norm();
  for (auto &a : v.amps) a /= norm;

  std::vector<StateVector> basis;  // full reorthogonalization
  std::vector<double> alpha;
  std::vector<double> beta;
  basis.push_back(v);

  GroundTruth out;
  for (int iteration = 0; iteration < max_iter; ++iteration) {
    StateVector w = apply_hamiltonian(h, basis.back());
    const double a = inner_product(basis.back(), w).real();
    alpha.push_back(a);

    // w -= a*v_j + b_{j-1}*v_{j-1}, then re-orthogonalize against all.
    for (std::uint64_t s = 0; s < dim; ++s) {
      w.amps[s] -= a * basis.back().amps[s];
      if (basis.size() > 1) {
        w.amps[s] -= beta.back() * basis[basis.size() - 2].amps[s];
      }
    }
    for (const auto &u : basis) {
      const std::complex<double> overlap = inner_product(u, w);
      for (std::uint64_t s = 0; s < dim; ++s) w.amps[s] -= overlap * u.amps[s];
    }

    // Ritz pair from the tridiagonal matrix.
    const int m = static_cast<int>(alpha.size());
    Eigen::MatrixXd tri = Eigen::MatrixXd::Zero(m, m);
    for (int i = 0; i < m; ++i) {
      tri(i, i) = alpha[static_cast<std::size_t>(i)];
      if (i + 1 < m) {
        tri(i, i + 1) = beta[static_cast<std::size_t>(i)];
        tri(i + 1, i) = beta[static_cast<std::size_t>(i)];
      }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(tri);
    const double ritz = solver.eigenvalues()(0);

    StateVector candidate;
    candidate.n = h.n;
    candidate.amps.assign(dim, {0.0, 0.0});
    for (int i = 0; i < m; ++i) {
      const double weight = solver.eigenvectors()(i, 0);
      for (std::uint64_t s = 0; s < dim; ++s) {
        candidate.amps[s] += weight * basis[static_cast<std::size_t>(i)].amps[s];
      }
    }
    const double cnorm = candidate.norm();
    for (auto &amp : candidate.amps) amp /= cnorm;

    const double res = residual_norm(h, candidate, ritz);
    if (res <= options.residual_tol || iteration + 1 == max_iter ||
        basis.size() == dim) {
      out.e_gs = ritz;
      out.ground_state = std::move(candidate);
      out.residual = res;
      out.degeneracy_gap =
          m > 1 ? solver.eigenvalues()(1) - solver.eigenvalues()(0) : 0.0;
      if (res > options.residual_tol) {
        throw std::runtime_error(
            "ground_state: Lanczos did not converge, residual " +
            std::to_string(res));
      }
      return out;
    }

    const double b = w.norm();
    if (b < 1e-14) {
      // Krylov space exhausted; the Ritz pair is exact.
      out.e_gs = ritz;
      out.ground_state = std::move(candidate);
      out.residual = res;
      out.degeneracy_gap =
          m > 1 ? solver.eigenvalues()(1) - solver.eigenvalues()(0) : 0.0;
      return out;
    }
    beta.push_back(b);
    for (auto &amp : w.amps) amp /= b;
    basis.push_back(std::move(w));
  }
  throw std::runtime_error("ground_state: Lanczos iteration budget exhausted");
}

}  // namespace

GroundTruth ground_state(const Hamiltonian &hamiltonian,
                         const GroundStateOptions &options) {
  if (hamiltonian.n > kLanczosMaxQubits) {
    throw std::invalid_argument("ground_state: supported up to n = 14");
  }
  if (hamiltonian.terms.empty()) {
    throw std::invalid_argument("ground_state: empty Hamiltonian");
  }
  const bool dense = options.force_dense ||
                     (!options.force_lanczos && hamiltonian.n <= kDenseMaxQubits);
  GroundTruth out = dense ? dense_ground_state(hamiltonian)
                          : lanczos_ground_state(hamiltonian, options);
  if (out.residual > 1e-8) {
    throw std::runtime_error("ground_state: residual " +
                             std::to_string(out.residual) + " exceeds 1e-8");
  }
  return out;
}

}  // namespace qnhe
