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

#include "qnhe/simulator.hpp"
#include "test_helpers.hpp"

using namespace qnhe;
using test::cplx;

namespace qnhe::test {

// Textbook 2x2/4x4 matrices, embedded by explicit bit bookkeeping.
std::vector<std::vector<cplx>> dense_gate_matrix(const Gate &g, int n) {
  const std::uint64_t dim = std::uint64_t{1} << n;
  std::vector<std::vector<cplx>> m(dim, std::vector<cplx>(dim, {0.0, 0.0}));
  const cplx i{0.0, 1.0};
  const double half = g.angle / 2.0;

  if (!g.two_qubit()) {
    cplx u[2][2];
    switch (g.kind) {
      case Gate::Kind::H: {
        const double r = 1.0 / std::sqrt(2.0);
        u[0][0] = r; u[0][1] = r; u[1][0] = r; u[1][1] = -r;
        break;
      }
      case Gate::Kind::X:
        u[0][0] = 0; u[0][1] = 1; u[1][0] = 1; u[1][1] = 0;
        break;
      case Gate::Kind::RX:
        u[0][0] = std::cos(half); u[0][1] = -i * std::sin(half);
        u[1][0] = -i * std::sin(half); u[1][1] = std::cos(half);
        break;
      case Gate::Kind::RZ:
        u[0][0] = std::exp(-i * half); u[0][1] = 0;
        u[1][0] = 0; u[1][1] = std::exp(i * half);
        break;
      case Gate::Kind::SDG:
        u[0][0] = 1; u[0][1] = 0; u[1][0] = 0; u[1][1] = -i;
        break;
      default:
        FAIL("not a single-qubit gate");
    }
    for (std::uint64_t row = 0; row < dim; ++row) {
      for (std::uint64_t col = 0; col < dim; ++col) {
        const std::uint64_t mask = qubit_bit(n, g.q0);
        if ((row & ~mask) != (col & ~mask)) continue;
        m[row][col] = u[(row & mask) ? 1 : 0][(col & mask) ? 1 : 0];
      }
    }
    return m;
  }

  // Two-qubit gates, basis |q0 q1> in {00, 01, 10, 11}.
  cplx u[4][4] = {};
  switch (g.kind) {
    case Gate::Kind::RZZ:
      u[0][0] = std::exp(-i * half);
      u[1][1] = std::exp(i * half);
      u[2][2] = std::exp(i * half);
      u[3][3] = std::exp(-i * half);
      break;
    case Gate::Kind::CX:
      u[0][0] = 1; u[1][1] = 1; u[2][3] = 1; u[3][2] = 1;
      break;
    case Gate::Kind::CY:
      u[0][0] = 1; u[1][1] = 1; u[2][3] = -i; u[3][2] = i;
      break;
    default:
      FAIL("not a two-qubit gate");
  }
  const std::uint64_t m0 = qubit_bit(n, g.q0);
  const std::uint64_t m1 = qubit_bit(n, g.q1);
  for (std::uint64_t row = 0; row < dim; ++row) {
    for (std::uint64_t col = 0; col < dim; ++col) {
      if ((row & ~(m0 | m1)) != (col & ~(m0 | m1))) continue;
      const int r = ((row & m0) ? 2 : 0) | ((row & m1) ? 1 : 0);
      const int c = ((col & m0) ? 2 : 0) | ((col & m1) ? 1 : 0);
      m[row][col] = u[r][c];
    }
  }
  return m;
}

}  // namespace qnhe::test

TEST_CASE("empty and tiny circuits produce pinned states", "[simulator]") {
  const StateVector identity = run_circuit(Circuit(2));
  REQUIRE(identity.amps[0] == cplx{1.0, 0.0});
  REQUIRE(identity.amps[1] == cplx{0.0, 0.0});

  Circuit h(1);
  h.append(Gate::h(0));
  const StateVector plus = run_circuit(h);
  REQUIRE(std::abs(plus.amps[0] - 1.0 / std::sqrt(2.0)) < 1e-15);
  REQUIRE(std::abs(plus.amps[1] - 1.0 / std::sqrt(2.0)) < 1e-15);

  Circuit rx(1);
  rx.append(Gate::rx(0, std::numbers::pi));
  const StateVector minus_i = run_circuit(rx);
  REQUIRE(std::abs(minus_i.amps[0]) < 1e-15);
  REQUIRE(std::abs(minus_i.amps[1] - cplx{0.0, -1.0}) < 1e-15);
}

TEST_CASE("every gate kind matches its dense matrix", "[simulator]") {
  RngStream rng(1001);
  const int n = 3;
  const std::vector<Gate> gates = {
      Gate::h(1),          Gate::x(2),
      Gate::rx(0, 0.7312), Gate::rz(2, -1.113),
      Gate::sdg(1),        Gate::rzz(0, 2, 2.219),
      Gate::cx(2, 0),      Gate::cy(0, 1),
      Gate::rzz(1, 0, -0.55)};
  for (const auto &g : gates) {
    const auto matrix = test::dense_gate_matrix(g, n);
    for (int trial = 0; trial < 5; ++trial) {
      StateVector v = test::random_state(n, rng);
      const StateVector expected = test::dense_apply(matrix, v);
      apply_gate(v, g);
      REQUIRE(std::abs(v.norm() - 1.0) < 1e-12);
      for (std::uint64_t s = 0; s < v.dim(); ++s) {
        REQUIRE(std::abs(v.amps[s] - expected.amps[s]) < 1e-12);
      }
    }
  }
}

TEST_CASE("circuit construction validates targets", "[simulator]") {
  Circuit c(2);
  REQUIRE_THROWS_AS(c.append(Gate::h(2)), std::invalid_argument);
  REQUIRE_THROWS_AS(c.append(Gate::cx(0, 0)), std::invalid_argument);
  REQUIRE_THROWS_AS(c.append(Gate::rx(0, std::nan(""))), std::invalid_argument);
}

TEST_CASE("probabilities of pinned states", "[simulator]") {
  StateVector bell = StateVector::zero_state(2);
  bell.amps[0] = 1.0 / std::sqrt(2.0);
  bell.amps[3] = 1.0 / std::sqrt(2.0);
  const auto q = probabilities(bell);
  REQUIRE(q[0] == Catch::Approx(0.5));
  REQUIRE(q[1] == 0.0);
  REQUIRE(q[3] == Catch::Approx(0.5));

  StateVector basis = StateVector::zero_state(2);
  basis.amps[0] = 0.0;
  basis.amps[2] = 1.0;  // |10>
  REQUIRE(probabilities(basis)[2] == Catch::Approx(1.0));

  Circuit hh(2);
  hh.append(Gate::h(0));
  hh.append(Gate::h(1));
  for (double p : probabilities(run_circuit(hh))) {
    REQUIRE(p == Catch::Approx(0.25));
  }
}

TEST_CASE("sampling a deterministic state", "[simulator]") {
  RngStream rng(4);
  const SampleSet set = sample(StateVector::zero_state(1), 100, rng, "t");
  REQUIRE(set.counts.size() == 1);
  REQUIRE(set.counts.at(0) == 100.0);
  REQUIRE(set.shots == 100);

  RngStream rng2(4);
  REQUIRE_THROWS_AS(sample(StateVector::zero_state(1), 0, rng2, "t"),
                    std::invalid_argument);
}

TEST_CASE("sampling is reproducible for a fixed stream", "[simulator]") {
  RngStream rng_a(99);
  RngStream rng_b(99);
  StateVector bell = StateVector::zero_state(2);
  bell.amps[0] = 1.0 / std::sqrt(2.0);
  bell.amps[3] = 1.0 / std::sqrt(2.0);
  const SampleSet a = sample(bell, 5000, rng_a, "bell");
  const SampleSet b = sample(bell, 5000, rng_b, "bell");
  REQUIRE(a.counts == b.counts);
}

TEST_CASE("bell-state frequencies land in the binomial window", "[simulator]") {
  RngStream rng(2024);
  StateVector bell = StateVector::zero_state(2);
  bell.amps[0] = 1.0 / std::sqrt(2.0);
  bell.amps[3] = 1.0 / std::sqrt(2.0);
  const SampleSet set = sample(bell, 1000000, rng, "bell");
  const double f00 = set.counts.at(0) / 1e6;
  REQUIRE(f00 > 0.497);
  REQUIRE(f00 < 0.503);
  REQUIRE(set.counts.count(1) == 0);
  REQUIRE(set.counts.count(2) == 0);
}

TEST_CASE("sampled frequencies pass a chi-square check", "[simulator]") {
  RngStream rng(771);
  const StateVector v = test::random_state(3, rng);
  const auto q = probabilities(v);
  RngStream sampler = rng.derive("shots");
  const SampleSet set = sample(v, 100000, sampler, "chi");
  double chi_sq = 0.0;
  for (std::uint64_t s = 0; s < 8; ++s) {
    const double expected = 100000.0 * q[s];
    const double observed = set.counts.count(s) ? set.counts.at(s) : 0.0;
    if (expected > 0) {
      chi_sq += (observed - expected) * (observed - expected) / expected;
    }
  }
  // df = 7, alpha = 0.001 critical value.
  REQUIRE(chi_sq < 24.322);
}

TEST_CASE("exact distributions carry probabilities", "[simulator]") {
  StateVector bell = StateVector::zero_state(2);
  bell.amps[0] = 1.0 / std::sqrt(2.0);
  bell.amps[3] = 1.0 / std::sqrt(2.0);
  const SampleSet set = exact_distribution(bell, "bell");
  REQUIRE(set.exact);
  REQUIRE(set.shots == 0);
  REQUIRE(set.counts.size() == 2);
  REQUIRE(set.counts.at(3) == Catch::Approx(0.5));
  REQUIRE(set.weight_norm() == 1.0);
}
