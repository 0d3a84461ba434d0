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

#include "qnhe/measurement.hpp"
#include "test_helpers.hpp"

using namespace qnhe;

TEST_CASE("pair_map flips exactly the X/Y support", "[measurement]") {
  // P = XYZ, s = 011 -> 101
  const PauliString p = PauliString::from_letters("XYZ");
  REQUIRE(pair_map(p, bits_to_index("011")) == bits_to_index("101"));
  REQUIRE(pair_map(PauliString::from_letters("ZZZ"), bits_to_index("010")) ==
          bits_to_index("010"));
  REQUIRE(pair_map(PauliString::from_letters("XX"), 0) == 3);
}

TEST_CASE("pair_map is an involution", "[measurement]") {
  RngStream rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + static_cast<int>(rng.uniform_int(4));
    const PauliString p = test::random_pauli(n, rng, true);
    const std::uint64_t s = rng.uniform_int(std::uint64_t{1} << n);
    REQUIRE(pair_map(p, pair_map(p, s)) == s);
  }
}

TEST_CASE("star_collapse zeroes one bit", "[measurement]") {
  REQUIRE(star_collapse(bits_to_index("101"), 0, 3) == bits_to_index("001"));
  REQUIRE(star_collapse(bits_to_index("001"), 0, 3) == bits_to_index("001"));
  REQUIRE(star_collapse(bits_to_index("111"), 2, 3) == bits_to_index("110"));
  REQUIRE_THROWS_AS(star_collapse(0, 3, 3), std::invalid_argument);
}

TEST_CASE("star_sign reads the star bit", "[measurement]") {
  REQUIRE(star_sign(bits_to_index("000"), 0, 3) == 1);
  REQUIRE(star_sign(bits_to_index("100"), 0, 3) == -1);
  REQUIRE(star_sign(bits_to_index("101"), 2, 3) == -1);
}

TEST_CASE("diagonal terms get direct plans", "[measurement]") {
  const MeasurementPlan plan = plan_measurement(
      PauliString::from_letters("ZZ"), MeasurementVariant::Real);
  REQUIRE(plan.direct());
  REQUIRE(plan.suffix.gates.empty());
  REQUIRE(plan.tag() == kAnsatzTag);
}

TEST_CASE("single-X terms rotate the star only", "[measurement]") {
  const MeasurementPlan plan =
      plan_measurement(PauliString::from_letters("X"), MeasurementVariant::Real);
  REQUIRE(plan.star == 0);
  REQUIRE(plan.suffix.gates.size() == 1);
  REQUIRE(plan.suffix.gates[0].kind == Gate::Kind::H);
  REQUIRE(plan.suffix.gates[0].q0 == 0);
  REQUIRE(plan.tag() == "pauli-real:X");
}

TEST_CASE("mixed terms aggregate parity onto the star", "[measurement]") {
  const MeasurementPlan plan = plan_measurement(
      PauliString::from_letters("XYZ"), MeasurementVariant::Real);
  REQUIRE(plan.star == 0);
  REQUIRE(plan.suffix.gates.size() == 2);
  REQUIRE(plan.suffix.gates[0].kind == Gate::Kind::CY);
  REQUIRE(plan.suffix.gates[0].q0 == 0);  // control = star
  REQUIRE(plan.suffix.gates[0].q1 == 1);
  REQUIRE(plan.suffix.gates[1].kind == Gate::Kind::H);
  REQUIRE(plan.suffix.gates[1].q0 == 0);
}

TEST_CASE("imaginary variant inserts a star phase", "[measurement]") {
  const MeasurementPlan plan = plan_measurement(
      PauliString::from_letters("YX"), MeasurementVariant::Imag);
  REQUIRE(plan.star == 0);
  REQUIRE(plan.suffix.gates.size() == 3);
  REQUIRE(plan.suffix.gates[0].kind == Gate::Kind::CX);
  REQUIRE(plan.suffix.gates[1].kind == Gate::Kind::RZ);
  REQUIRE(plan.suffix.gates[1].q0 == 0);
  // Y star letter reads out through RX.
  REQUIRE(plan.suffix.gates[2].kind == Gate::Kind::RX);
  REQUIRE(plan.tag() == "pauli-imag:YX");
}

TEST_CASE("term_sign folds the plain-Z parity in", "[measurement]") {
  const PauliString p = PauliString::from_letters("XZ");
  const MeasurementPlan plan = plan_measurement(p, MeasurementVariant::Real);
  REQUIRE(plan.star == 0);
  REQUIRE(term_sign(plan, bits_to_index("00")) == 1);
  REQUIRE(term_sign(plan, bits_to_index("01")) == -1);
  REQUIRE(term_sign(plan, bits_to_index("10")) == -1);
  REQUIRE(term_sign(plan, bits_to_index("11")) == 1);

  const PauliString zz = PauliString::from_letters("ZZ");
  const MeasurementPlan direct = plan_measurement(zz, MeasurementVariant::Real);
  REQUIRE(term_sign(direct, bits_to_index("01")) == -1);
  REQUIRE(term_sign(direct, bits_to_index("11")) == 1);
}
