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
#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "qnhe/groundtruth.hpp"
#include "test_helpers.hpp"

using namespace qnhe;

TEST_CASE("two-site critical TFIM has energy -sqrt(5)", "[groundtruth]") {
  // Dense 4x4 diagonalization of -Z0Z1 - X0 - X1: eigenvalues -sqrt(5),
  // -1, +1, +sqrt(5).
  const GroundTruth gt = ground_state(build_tfim(2, 1.0, Boundary::Open));
  REQUIRE(gt.e_gs == Catch::Approx(-std::sqrt(5.0)).epsilon(1e-12));
  REQUIRE(gt.residual <= 1e-8);
}

TEST_CASE("classical Ising is degenerate", "[groundtruth]") {
  const GroundTruth gt = ground_state(build_tfim(2, 0.0, Boundary::Open));
  REQUIRE(gt.e_gs == Catch::Approx(-1.0));
  REQUIRE(gt.degeneracy_gap == Catch::Approx(0.0).margin(1e-12));
}

TEST_CASE("dense and lanczos agree where both run", "[groundtruth]") {
  for (int n : {4, 7, 10}) {
    const Hamiltonian h = build_tfim(n, 1.0, Boundary::Open);
    GroundStateOptions dense;
    dense.force_dense = true;
    GroundStateOptions lanczos;
    lanczos.force_lanczos = true;
    const GroundTruth a = ground_state(h, dense);
    const GroundTruth b = ground_state(h, lanczos);
    REQUIRE(std::abs(a.e_gs - b.e_gs) < 1e-8);
    REQUIRE(b.residual <= 1e-8);
  }
}

TEST_CASE("lanczos handles n = 12", "[groundtruth]") {
  const GroundTruth gt = ground_state(build_tfim(12, 1.0, Boundary::Open));
  REQUIRE(gt.residual <= 1e-8);
  // Extensive energy scale sanity: between -2n and -n at h=1.
  REQUIRE(gt.e_gs < -12.0);
  REQUIRE(gt.e_gs > -24.0);
}

TEST_CASE("the eigenvector satisfies the eigenvalue equation", "[groundtruth]") {
  const Hamiltonian h = build_tfim(6, 1.0, Boundary::Periodic);
  const GroundTruth gt = ground_state(h);
  const StateVector hv = apply_hamiltonian(h, gt.ground_state);
  double acc = 0.0;
  for (std::uint64_t s = 0; s < hv.dim(); ++s) {
    acc += std::norm(hv.amps[s] - gt.e_gs * gt.ground_state.amps[s]);
  }
  REQUIRE(std::sqrt(acc) <= 1e-8);
}

TEST_CASE("random states respect the variational bound", "[groundtruth]") {
  const Hamiltonian h = build_tfim(4, 1.0, Boundary::Open);
  const GroundTruth gt = ground_state(h);
  RngStream rng(404);
  for (int trial = 0; trial < 1000; ++trial) {
    const StateVector v = test::random_state(4, rng);
    REQUIRE(exact_expectation(h, v) >= gt.e_gs - 1e-9);
  }
}

TEST_CASE("ground_state rejects oversized problems", "[groundtruth]") {
  std::vector<std::pair<double, PauliString>> terms;
  terms.emplace_back(1.0, PauliString::from_letters("ZIIIIIIIIIIIIII"));
  const Hamiltonian h = Hamiltonian::from_terms(15, terms);
  REQUIRE_THROWS_AS(ground_state(h), std::invalid_argument);
}
