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

#include <sstream>

#include "qnhe/serialize.hpp"
#include "test_helpers.hpp"

using namespace qnhe;

TEST_CASE("hamiltonian JSON round trip", "[serialize]") {
  const Hamiltonian h = build_tfim(3, 0.7, Boundary::Open);
  const Hamiltonian back = hamiltonian_from_json(hamiltonian_to_json(h));
  REQUIRE(back.n == h.n);
  REQUIRE(back.terms.size() == h.terms.size());
  for (std::size_t i = 0; i < h.terms.size(); ++i) {
    REQUIRE(back.terms[i].first == h.terms[i].first);
    REQUIRE(back.terms[i].second == h.terms[i].second);
  }
}

TEST_CASE("hamiltonian JSON uses leftmost-qubit-0 letter strings",
          "[serialize]") {
  const Hamiltonian h = Hamiltonian::from_terms(
      3, {{1.5, PauliString::from_letters("XIZ")}});
  const std::string text = hamiltonian_to_json(h);
  REQUIRE(text.find("\"XIZ\"") != std::string::npos);
}

TEST_CASE("sample set JSON round trip", "[serialize]") {
  RngStream rng(12);
  const StateVector v = test::random_state(3, rng);
  RngStream sampler(13);
  const SampleSet set = sample(v, 500, sampler, "pauli-real:XIZ");
  const SampleSet back = sampleset_from_json(sampleset_to_json(set));
  REQUIRE(back.n == set.n);
  REQUIRE(back.tag == set.tag);
  REQUIRE(back.shots == set.shots);
  REQUIRE(back.counts == set.counts);
  REQUIRE_FALSE(back.exact);
}

TEST_CASE("exact sample sets keep their probabilities", "[serialize]") {
  RngStream rng(14);
  const StateVector v = test::random_state(2, rng);
  const SampleSet set = exact_distribution(v, kAnsatzTag);
  const SampleSet back = sampleset_from_json(sampleset_to_json(set));
  REQUIRE(back.exact);
  REQUIRE(back.counts.size() == set.counts.size());
  for (const auto &[s, w] : set.counts) {
    REQUIRE(back.counts.at(s) == Catch::Approx(w).epsilon(1e-15));
  }
}

TEST_CASE("malformed sample sets are rejected", "[serialize]") {
  REQUIRE_THROWS(sampleset_from_json("{\"tag\":\"t\",\"shots\":1,\"counts\":{}}"));
  REQUIRE_THROWS(sampleset_from_json(
      "{\"tag\":\"t\",\"shots\":2,\"counts\":{\"01\":1,\"001\":1}}"));
  REQUIRE_THROWS(sampleset_from_json("not json"));
}

TEST_CASE("network checkpoints restore the same function", "[serialize]") {
  RngStream rng(15);
  NeuralNet net = NeuralNet::init(4, 8, OutputMode::AmpBounded, 2.5,
                                  Activation::Sigmoid, rng);
  std::vector<double> params = net.params();
  for (double &p : params) p += 0.1;
  net.set_params(params);

  const NeuralNet back = neuralnet_from_json(neuralnet_to_json(net));
  REQUIRE(back.mode() == net.mode());
  REQUIRE(back.range_r() == net.range_r());
  REQUIRE(back.activation() == net.activation());
  for (std::uint64_t s = 0; s < 16; ++s) {
    REQUIRE(back.forward(s) == net.forward(s));
  }
}

TEST_CASE("trace CSV has the fixed schema", "[serialize]") {
  TrainingTrace trace;
  EpochRecord r0;
  r0.epoch = 0;
  r0.energy = -1.25;
  r0.denominator = 0.5;
  r0.inclusion = true;
  r0.wall_ms = 3.0;
  EpochRecord r1;
  r1.epoch = 1;
  r1.energy = -1.5;
  r1.inclusion = false;
  r1.wall_ms = 2.0;
  trace.records = {r0, r1};

  const std::string csv = trace_to_csv(trace);
  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);
  REQUIRE(line == "epoch,energy,denominator,inclusion_flag,wall_ms");
  std::getline(lines, line);
  REQUIRE(line == "0,-1.25,0.5,1,3");
  std::getline(lines, line);
  REQUIRE(line == "1,-1.5,,0,2");  // empty denominator column
}

TEST_CASE("doubles format without precision loss", "[serialize]") {
  for (double v : {0.1, -3.25, 1e-17, 135056.25, 2.0 / 3.0}) {
    REQUIRE(std::stod(format_double(v)) == v);
  }
}

TEST_CASE("enum names round trip", "[serialize]") {
  REQUIRE(output_mode_from_string(to_string(OutputMode::AmpPositive)) ==
          OutputMode::AmpPositive);
  REQUIRE(activation_from_string(to_string(Activation::Relu)) ==
          Activation::Relu);
  REQUIRE(boundary_from_string(to_string(Boundary::Periodic)) ==
          Boundary::Periodic);
  REQUIRE_THROWS_AS(output_mode_from_string("bogus"), std::invalid_argument);
}
