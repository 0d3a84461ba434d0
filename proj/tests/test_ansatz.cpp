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
#include <numbers>

#include "qnhe/ansatz.hpp"

using namespace qnhe;

TEST_CASE("parameter count formula over the supported grid", "[ansatz]") {
  for (int n = 2; n <= 14; ++n) {
    for (int layers = 1; layers <= 4; ++layers) {
      const AnsatzSpec open{n, layers, Boundary::Open};
      REQUIRE(open.param_count() ==
              static_cast<std::size_t>(layers * (2 * n - 1)));
      const AnsatzSpec ring{n, layers, Boundary::Periodic};
      REQUIRE(ring.param_count() == static_cast<std::size_t>(layers * 2 * n));
    }
  }
  const AnsatzSpec seven{7, 2, Boundary::Open};
  REQUIRE(seven.param_count() == 26);
}

TEST_CASE("zero parameters prepare the all-zeros state", "[ansatz]") {
  const AnsatzSpec spec{3, 2, Boundary::Open};
  const std::vector<double> zeros(spec.param_count(), 0.0);
  const StateVector v = run_circuit(build_ansatz(spec, zeros));
  REQUIRE(v.amps[0] == std::complex<double>{1.0, 0.0});
  for (std::uint64_t s = 1; s < v.dim(); ++s) {
    REQUIRE(v.amps[s] == std::complex<double>{0.0, 0.0});
  }
}

TEST_CASE("an RX(pi) wall flips every qubit", "[ansatz]") {
  const AnsatzSpec spec{2, 1, Boundary::Open};
  const std::vector<double> params = {std::numbers::pi, std::numbers::pi, 0.0};
  const StateVector v = run_circuit(build_ansatz(spec, params));
  const auto q = probabilities(v);
  REQUIRE(q[3] == Catch::Approx(1.0));
}

TEST_CASE("parameter count mismatches are rejected", "[ansatz]") {
  const AnsatzSpec spec{3, 1, Boundary::Open};
  const std::vector<double> short_params(spec.param_count() - 1, 0.0);
  REQUIRE_THROWS_AS(build_ansatz(spec, short_params), std::invalid_argument);
}

TEST_CASE("initial parameters are small and seeded", "[ansatz]") {
  const AnsatzSpec spec{5, 2, Boundary::Open};
  RngStream rng_a(11);
  RngStream rng_b(11);
  const auto a = initial_params(spec, rng_a);
  const auto b = initial_params(spec, rng_b);
  REQUIRE(a == b);
  REQUIRE(a.size() == spec.param_count());
  for (double p : a) {
    REQUIRE(std::abs(p) <= 0.1);
  }
}
