// Copyright 2026 The Etch Authors
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

#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "etch/oracle.h"
#include "random_circuits.h"

namespace etch {
namespace {

constexpr double kTol = 1e-12;
const double kH = 1.0 / std::numbers::sqrt2;

void expect_amplitudes(const StateVector& s, const std::vector<Amplitude>& want) {
  ASSERT_EQ(s.amplitudes().size(), want.size());
  for (std::size_t i = 0; i < want.size(); ++i) {
    EXPECT_NEAR(std::abs(s[i] - want[i]), 0.0, kTol) << "index " << i;
  }
}

TEST(SimulateCircuit, HadamardOnZero) {
  expect_amplitudes(simulate_circuit(testing::single(GateKind::H)), {kH, kH});
}

TEST(SimulateCircuit, Ghz3) {
  StateVector s = simulate_circuit(testing::ghz3());
  std::vector<Amplitude> want(8, 0.0);
  want[0] = kH;
  want[7] = kH;
  expect_amplitudes(s, want);
}

TEST(SimulateCircuit, TOnPlus) {
  StateVector s = simulate_circuit(testing::single(GateKind::T), InputPreparation::Plus);
  expect_amplitudes(s, {kH, kH * std::polar(1.0, std::numbers::pi / 4)});
}

TEST(SimulateCircuit, TooLarge) {
  Circuit c{"big", 13, {{GateKind::H, 0, {}, {}}}};
  EXPECT_THROW(simulate_circuit(c), TooLarge);
}

TEST(GraphStateVector, SingleVertex) {
  expect_amplitudes(graph_state_vector(GraphState::with_order(1)), {kH, kH});
}

TEST(GraphStateVector, OneEdge) {
  GraphState g = GraphState::with_order(2);
  g.add_edge(0, 1);
  expect_amplitudes(graph_state_vector(g), {0.5, 0.5, 0.5, -0.5});
}

TEST(GraphStateVector, PathOfThreeStabilizers) {
  GraphState g = GraphState::with_order(3);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  StateVector s = graph_state_vector(g);
  for (const char* k : {"XZI", "ZXZ", "IZX"}) {
    // Strings are written qubit 0 first.
    StateVector image = s;
    image.apply_pauli(PauliString::parse(k));
    EXPECT_NEAR(fidelity(image, s), 1.0, kTol);
    EXPECT_NEAR(std::abs(inner(s, image) - 1.0), 0.0, kTol) << k;
  }
}

TEST(GraphStateVector, NormAndEdgeOrderStable) {
  const GraphState g = build_graph_state(layout(Circuit{"c", 2, {{GateKind::CNOT, 1, 0, {}}}}));
  ASSERT_LE(g.n(), kMaxDenseQubits);
  StateVector a = graph_state_vector(g);
  EXPECT_NEAR(a.norm(), 1.0, kTol);
  StateVector b = StateVector::plus(g.n());
  auto edges = g.edges();
  for (auto it = edges.rbegin(); it != edges.rend(); ++it) b.apply_cz(it->first, it->second);
  for (std::size_t i = 0; i < a.amplitudes().size(); ++i) EXPECT_NEAR(std::abs(a[i] - b[i]), 0.0, kTol);
}

TEST(VerifyStabilizers, DenseAndSymplecticAgree) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    Circuit c = testing::random_circuit(seed, 2, 2);
    GraphState g = build_graph_state(layout(c));
    if (g.n() > 20) continue;
    EXPECT_TRUE(verify_stabilizers(g, StabilizerPath::Dense));
    EXPECT_TRUE(verify_stabilizers(g, StabilizerPath::Symplectic));
  }
}

TEST(VerifyStabilizers, NegativeControlAndEmpty) {
  GraphState g = GraphState::with_order(2);
  g.add_edge(0, 1);
  StateVector s = graph_state_vector(g);
  std::vector<PauliString> fake = {PauliString::parse("XZ"), PauliString::parse("ZI")};
  EXPECT_FALSE(verify_stabilizers_dense(s, fake).pass);
  EXPECT_FALSE(verify_stabilizers_symplectic(fake));
  EXPECT_TRUE(verify_stabilizers(GraphState(), StabilizerPath::Dense));
  EXPECT_TRUE(verify_stabilizers(GraphState(), StabilizerPath::Symplectic));
  EXPECT_THROW(verify_stabilizers(GraphState::with_order(25), StabilizerPath::Dense), TooLarge);
}

TEST(MeasurementOrder, MiddleBeforeItsColumn) {
  const GraphState g = build_graph_state(layout(Circuit{"c", 2, {{GateKind::CNOT, 1, 0, {}}}}));
  auto order = measurement_order(g);
  EXPECT_EQ(order.size(), 13u);
  int prev_col = -1;
  for (std::size_t k = 0; k < order.size(); ++k) {
    const Vertex& v = g.vertices()[order[k]];
    EXPECT_GE(v.col, prev_col);
    prev_col = v.col;
    if (v.role == CellRole::CnotMiddle) {
      EXPECT_EQ(g.vertices()[order[k + 1]].col, v.col);
      EXPECT_EQ(g.vertices()[order[k + 1]].row, 0);
    }
  }
}

TEST(SimulateMbqc, SingleHAllHistories) {
  const Lattice l = layout(testing::single(GateKind::H));
  const StateVector plus = StateVector::plus(1);
  for (int h = 0; h < 16; ++h) {
    std::vector<std::uint8_t> bits = {std::uint8_t(h & 1), std::uint8_t(h >> 1 & 1),
                                      std::uint8_t(h >> 2 & 1), std::uint8_t(h >> 3 & 1)};
    MbqcResult r = simulate_mbqc(l, StateVector(1), OutcomeSource::forced_bits(bits));
    EXPECT_NEAR(fidelity(r.readout, plus), 1.0, 1e-12) << "history " << h;
    EXPECT_NEAR(r.run.branch_probability, 1.0 / 16.0, 1e-12);
    EXPECT_EQ(r.run.outcomes, bits);
  }
}

TEST(SimulateMbqc, SingleTOnPlus) {
  const Lattice l = layout(testing::single(GateKind::T));
  const StateVector want = simulate_circuit(testing::single(GateKind::T), InputPreparation::Plus);
  for (std::uint64_t seed = 0; seed < 16; ++seed) {
    MbqcResult r = simulate_mbqc(l, StateVector::plus(1), OutcomeSource::random(seed));
    EXPECT_NEAR(fidelity(r.readout, want), 1.0, 1e-12);
  }
}

TEST(SimulateMbqc, Ghz2AndGhz3) {
  Circuit ghz2{"ghz2", 2, {{GateKind::H, 0, {}, {}}, {GateKind::CNOT, 1, 0, {}}}};
  for (const Circuit& c : {ghz2, testing::ghz3()}) {
    const Lattice l = layout(c);
    const StateVector want = simulate_circuit(c);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      MbqcResult r = simulate_mbqc(l, StateVector(c.n_wires), OutcomeSource::random(seed));
      EXPECT_NEAR(fidelity(r.readout, want), 1.0, 1e-9);
      EXPECT_LE(r.run.peak_live_qubits, kMaxDenseQubits);
    }
  }
}

TEST(Equivalent, EverySingleGatePattern) {
  std::vector<Circuit> cases = {testing::single(GateKind::H),
                                testing::single(GateKind::S),
                                testing::single(GateKind::Sdg),
                                testing::single(GateKind::T),
                                testing::single(GateKind::Tdg),
                                testing::single(GateKind::Rz, {Angle::from_radians(0.3)}),
                                testing::single(GateKind::Rx, {Angle::from_radians(0.3)}),
                                testing::single(GateKind::Ry, {Angle::from_radians(0.3)}),
                                testing::single(GateKind::URot, {Angle::from_radians(0.3), Angle::from_radians(-1.2), Angle::from_radians(2.0)}),
                                Circuit{"cnot-down", 2, {{GateKind::CNOT, 1, 0, {}}}},
                                Circuit{"cnot-up", 2, {{GateKind::CNOT, 0, 1, {}}}}};
  for (const Circuit& c : cases) {
    EquivalenceReport r = equivalent(c);
    EXPECT_TRUE(r.pass) << c.id << " worst " << r.worst_fidelity;
    EXPECT_TRUE(r.exhaustive) << c.id;
  }
}

TEST(Equivalent, RandomTwoGateCircuits) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    Circuit c = testing::random_circuit(seed * 7919, 3, 2);
    EquivalenceOptions o;
    o.seed = seed;
    o.sampled_histories = 50;
    EquivalenceReport r = equivalent(c, PatternCatalogue::standard(), o);
    EXPECT_TRUE(r.pass) << serialize_circuit(c) << " worst " << r.worst_fidelity;
  }
}

TEST(Equivalent, CorruptedCatalogueFails) {
  std::string text(
      "byproduct row4 flow flow flow flow\n"
      "pattern t row4 X X XY(pi/4) X\n");
  PatternCatalogue bad = PatternCatalogue::parse(text);
  EquivalenceReport r = equivalent(testing::single(GateKind::T), bad);
  EXPECT_FALSE(r.pass);
  EXPECT_LT(r.worst_fidelity, 0.99);
}

TEST(Equivalent, GateFreeCircuitIsUnsupported) {
  EquivalenceReport r = equivalent(Circuit{"e", 1, {}});
  EXPECT_FALSE(r.supported);
  EXPECT_FALSE(r.pass);
}

TEST(DeterministicReadout, WrongByproductRuleIsDetected) {
  Lattice l = layout(testing::single(GateKind::H));
  StateVector in = StateVector::random(1, 5);
  EXPECT_NO_THROW(deterministic_readout(l, in));
  // Dropping the flow corrections from the last measured cell makes the
  // readout depend on its outcome.
  l.at(0, 3).byproduct = Byproduct::Self;
  EXPECT_THROW(deterministic_readout(l, in), NonDeterministicResult);
}

TEST(ExcisionOracle, MatchesZMeasurement) {
  std::vector<Circuit> small = {
      Circuit{"p", 2, {{GateKind::H, 0, {}, {}}, {GateKind::T, 1, {}, {}}}},
      Circuit{"q", 2, {{GateKind::S, 0, {}, {}}}},
      Circuit{"r", 2, {{GateKind::H, 1, {}, {}}, {GateKind::Rz, 0, {}, {Angle::from_radians(0.4)}}}},
  };
  for (const Circuit& c : small) {
    Lattice l = layout(c);
    ASSERT_LE(l.rows() * l.cols(), kMaxDenseQubits);
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
      EXPECT_NEAR(excision_fidelity(l, seed), 1.0, 1e-10) << c.id;
    }
  }
}

TEST(EquivalenceReport, Json) {
  EquivalenceReport r;
  r.circuit_id = "x";
  r.pass = true;
  r.histories = 16;
  std::string text = equivalence_report_json({r});
  EXPECT_NE(text.find("\"pass\": true"), std::string::npos);
  EXPECT_NE(text.find("\"histories\": 16"), std::string::npos);
}

}  // namespace
}  // namespace etch
