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

#include "qnhe/pauli.hpp"
#include "test_helpers.hpp"

using namespace qnhe;

TEST_CASE("letters round-trip and masks line up", "[pauli]") {
  const PauliString p = PauliString::from_letters("XIZY");
  REQUIRE(p.letters() == "XIZY");
  REQUIRE(p.letter(0) == 'X');
  REQUIRE(p.letter(1) == 'I');
  REQUIRE(p.letter(2) == 'Z');
  REQUIRE(p.letter(3) == 'Y');
  REQUIRE(p.lowest_xy_qubit() == 0);
  REQUIRE(p.weight_y() == 1);
  REQUIRE_FALSE(p.is_diagonal());
  REQUIRE(PauliString::from_letters("IZZI").is_diagonal());
  REQUIRE(PauliString(3).is_identity());
  REQUIRE_THROWS_AS(PauliString::from_letters("XQ"), std::invalid_argument);
}

TEST_CASE("tfim builder produces the advertised terms", "[pauli]") {
  const Hamiltonian h_classical = build_tfim(2, 0.0, Boundary::Open);
  REQUIRE(h_classical.terms.size() == 1);
  REQUIRE(h_classical.terms[0].first == -1.0);
  REQUIRE(h_classical.terms[0].second.letters() == "ZZ");

  const Hamiltonian h7 = build_tfim(7, 1.0, Boundary::Open);
  REQUIRE(h7.terms.size() == 13);
  const Hamiltonian ring = build_tfim(4, 0.5, Boundary::Periodic);
  REQUIRE(ring.terms.size() == 8);
  REQUIRE_THROWS_AS(build_tfim(1, 1.0, Boundary::Open), std::invalid_argument);
}

TEST_CASE("hamiltonian construction merges duplicates", "[pauli]") {
  const PauliString zz = PauliString::from_letters("ZZ");
  const PauliString x0 = PauliString::from_letters("XI");
  const Hamiltonian h = Hamiltonian::from_terms(
      2, {{0.5, zz}, {1.0, x0}, {0.25, zz}, {-1.0, x0}});
  REQUIRE(h.terms.size() == 1);
  REQUIRE(h.terms[0].second == zz);
  REQUIRE(h.terms[0].first == Catch::Approx(0.75));
  REQUIRE(h.coeff_l1() == Catch::Approx(0.75));
}

TEST_CASE("apply_pauli acts as the textbook single-qubit rules", "[pauli]") {
  StateVector zero = StateVector::zero_state(1);

  const StateVector z = apply_pauli(PauliString::from_letters("Z"), zero);
  REQUIRE(z.amps[0] == std::complex<double>{1.0, 0.0});

  const StateVector x = apply_pauli(PauliString::from_letters("X"), zero);
  REQUIRE(x.amps[1] == std::complex<double>{1.0, 0.0});
  REQUIRE(x.amps[0] == std::complex<double>{0.0, 0.0});

  const StateVector y = apply_pauli(PauliString::from_letters("Y"), zero);
  REQUIRE(y.amps[1] == std::complex<double>{0.0, 1.0});

  REQUIRE_THROWS_AS(
      apply_pauli(PauliString::from_letters("XX"), zero),
      std::invalid_argument);
}

TEST_CASE("apply_pauli squares to the identity", "[pauli]") {
  RngStream rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + static_cast<int>(rng.uniform_int(3));
    const StateVector v = test::random_state(n, rng);
    const PauliString p = test::random_pauli(n, rng, true);
    const StateVector round_trip = apply_pauli(p, apply_pauli(p, v));
    for (std::uint64_t s = 0; s < v.dim(); ++s) {
      REQUIRE(std::abs(round_trip.amps[s] - v.amps[s]) < 1e-14);
    }
  }
}

TEST_CASE("exact_expectation on pinned states", "[pauli]") {
  const Hamiltonian zz = Hamiltonian::from_terms(
      2, {{-1.0, PauliString::from_letters("ZZ")}});
  REQUIRE(exact_expectation(zz, StateVector::zero_state(2)) ==
          Catch::Approx(-1.0));

  // |+>|0>
  StateVector plus0 = StateVector::zero_state(2);
  plus0.amps[0] = 1.0 / std::sqrt(2.0);
  plus0.amps[2] = 1.0 / std::sqrt(2.0);
  const Hamiltonian x0 = Hamiltonian::from_terms(
      2, {{1.0, PauliString::from_letters("XI")}});
  REQUIRE(exact_expectation(x0, plus0) == Catch::Approx(1.0));

  StateVector uniform;
  uniform.n = 4;
  uniform.amps.assign(16, {0.25, 0.0});
  REQUIRE(exact_expectation(build_tfim(4, 1.0, Boundary::Open), uniform) ==
          Catch::Approx(-4.0));

  StateVector unnormalized = StateVector::zero_state(2);
  unnormalized.amps[0] = 2.0;
  REQUIRE_THROWS_AS(exact_expectation(zz, unnormalized), std::invalid_argument);
}

TEST_CASE("expectation values of Hermitian sums are real", "[pauli]") {
  RngStream rng(77);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 2 + static_cast<int>(rng.uniform_int(3));
    const StateVector v = test::random_state(n, rng);
    const Hamiltonian h = test::random_hamiltonian(n, 6, rng);
    for (const auto &[coeff, pauli] : h.terms) {
      REQUIRE(std::abs(pauli_expectation(pauli, v).imag()) < 1e-10);
    }
  }
}

TEST_CASE("exact_expectation is linear in the Hamiltonian", "[pauli]") {
  RngStream rng(78);
  const int n = 3;
  const StateVector v = test::random_state(n, rng);
  const Hamiltonian h1 = test::random_hamiltonian(n, 4, rng);
  const Hamiltonian h2 = test::random_hamiltonian(n, 4, rng);
  const double a = 0.7, b = -1.3;
  std::vector<std::pair<double, PauliString>> combined;
  for (const auto &[c, p] : h1.terms) combined.emplace_back(a * c, p);
  for (const auto &[c, p] : h2.terms) combined.emplace_back(b * c, p);
  const double lhs =
      exact_expectation(Hamiltonian::from_terms(n, combined), v);
  const double rhs = a * exact_expectation(h1, v) + b * exact_expectation(h2, v);
  REQUIRE(std::abs(lhs - rhs) < 1e-12);
}

TEST_CASE("apply_hamiltonian matches the per-term route", "[pauli]") {
  RngStream rng(79);
  const int n = 3;
  const StateVector v = test::random_state(n, rng);
  const Hamiltonian h = test::random_hamiltonian(n, 5, rng);
  const StateVector hv = apply_hamiltonian(h, v);
  StateVector expected;
  expected.n = n;
  expected.amps.assign(v.dim(), {0.0, 0.0});
  for (const auto &[coeff, pauli] : h.terms) {
    const StateVector pv = apply_pauli(pauli, v);
    for (std::uint64_t s = 0; s < v.dim(); ++s) {
      expected.amps[s] += coeff * pv.amps[s];
    }
  }
  for (std::uint64_t s = 0; s < v.dim(); ++s) {
    REQUIRE(std::abs(hv.amps[s] - expected.amps[s]) < 1e-12);
  }
}
