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

#include <numbers>

#include "etch/circuit.h"
#include "random_circuits.h"

namespace etch {
namespace {

constexpr const char* kGhz3 = R"({"id": "ghz3", "qubits": 3, "gates": [
  {"type": "h", "target": 0},
  {"type": "cnot", "control": 0, "target": 1},
  {"type": "cnot", "control": 1, "target": 2}]})";

TEST(ParseCircuit, Ghz3) {
  Circuit c = parse_circuit(kGhz3);
  EXPECT_EQ(c.id, "ghz3");
  EXPECT_EQ(c.n_wires, 3);
  ASSERT_EQ(c.gates.size(), 3u);
  EXPECT_EQ(c.gates[0].kind, GateKind::H);
  EXPECT_EQ(c.gates[2].control, 1);
  EXPECT_EQ(c.gates[2].target, 2);
  EXPECT_EQ(c, testing::ghz3());
}

TEST(ParseCircuit, EmptyProgram) {
  Circuit c = parse_circuit(R"({"id": "e", "qubits": 1, "gates": []})");
  EXPECT_EQ(c.n_wires, 1);
  EXPECT_TRUE(c.gates.empty());
}

TEST(ParseCircuit, UnknownKindNamesGate) {
  try {
    parse_circuit(R"({"qubits": 3, "gates": [{"type": "ccx", "target": 0}]})");
    FAIL() << "expected UnknownGateKind";
  } catch (const CircuitFormatError& e) {
    EXPECT_EQ(e.kind(), CircuitFormatError::Kind::UnknownGateKind);
    EXPECT_EQ(e.gate_index(), 0u);
  }
}

TEST(ParseCircuit, MissingField) {
  try {
    parse_circuit(R"({"qubits": 2, "gates": [{"type": "h", "target": 0}, {"type": "cnot", "target": 1}]})");
    FAIL() << "expected MissingField";
  } catch (const CircuitFormatError& e) {
    EXPECT_EQ(e.kind(), CircuitFormatError::Kind::MissingField);
    EXPECT_EQ(e.gate_index(), 1u);
  }
  EXPECT_THROW(parse_circuit(R"({"gates": []})"), CircuitFormatError);
}

TEST(ParseCircuit, MalformedDocument) {
  try {
    parse_circuit("{\"qubits\": 1, \"gates\": [");
    FAIL();
  } catch (const CircuitFormatError& e) {
    EXPECT_EQ(e.kind(), CircuitFormatError::Kind::MalformedDocument);
  }
}

TEST(ParseCircuit, SymbolicAndNumericAngles) {
  Circuit c = parse_circuit(R"({"qubits": 1, "gates": [
    {"type": "rz", "target": 0, "angle": "pi/4"},
    {"type": "rx", "target": 0, "angle": 0.3},
    {"type": "urot", "target": 0, "angles": [0.1, "-pi/2", 2]}]})");
  ASSERT_TRUE(c.gates[0].angles[0].exact());
  EXPECT_EQ(*c.gates[0].angles[0].exact(), (PiFraction{1, 4}));
  EXPECT_DOUBLE_EQ(c.gates[0].angles[0].radians(), std::numbers::pi / 4);
  EXPECT_FALSE(c.gates[1].angles[0].exact());
  EXPECT_DOUBLE_EQ(c.gates[1].angles[0].radians(), 0.3);
  ASSERT_EQ(c.gates[2].angles.size(), 3u);
  EXPECT_EQ(*c.gates[2].angles[1].exact(), (PiFraction{-1, 2}));
}

TEST(Angle, ParseForms) {
  EXPECT_EQ(*Angle::parse("pi").exact(), (PiFraction{1, 1}));
  EXPECT_EQ(*Angle::parse("-pi/2").exact(), (PiFraction{-1, 2}));
  EXPECT_EQ(*Angle::parse("3*pi/4").exact(), (PiFraction{3, 4}));
  EXPECT_EQ(*Angle::parse("0").exact(), (PiFraction{0, 1}));
  EXPECT_EQ(Angle::pi_times(2, 4), Angle::pi_times(1, 2));
  EXPECT_THROW(Angle::parse("tau"), std::invalid_argument);
}

TEST(Validate, NonAdjacentCnot) {
  Circuit c{"x", 3, {{GateKind::CNOT, 2, 0, {}}}};
  auto v = validate(c);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].kind, Violation::Kind::NonAdjacentCnot);
  EXPECT_EQ(v[0].gate, 0u);
  EXPECT_NE(v[0].message().find("NonAdjacentCNOT"), std::string::npos);
}

TEST(Validate, Ghz3IsValid) { EXPECT_TRUE(validate(testing::ghz3()).empty()); }

TEST(Validate, AngleArity) {
  Circuit c{"x", 1, {{GateKind::H, 0, {}, {}}, {GateKind::Rz, 0, {}, {Angle(), Angle()}}}};
  auto v = validate(c);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].kind, Violation::Kind::AngleArity);
  EXPECT_EQ(v[0].gate, 1u);
}

TEST(Validate, CollectsEveryViolation) {
  Circuit c{"x", 2, {{GateKind::H, 5, {}, {}}, {GateKind::T, 0, 1, {}}, {GateKind::Rx, 0, {}, {}}}};
  auto v = validate(c);
  ASSERT_EQ(v.size(), 3u);
  EXPECT_EQ(v[0].kind, Violation::Kind::WireOutOfRange);
  EXPECT_EQ(v[1].kind, Violation::Kind::ControlMismatch);
  EXPECT_EQ(v[2].kind, Violation::Kind::AngleArity);
  Circuit none{"x", 0, {}};
  EXPECT_EQ(validate(none).at(0).kind, Violation::Kind::NoWires);
}

TEST(CircuitProperty, SerializeRoundTrip) {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    Circuit c = testing::random_circuit(seed, 6, 12);
    ASSERT_TRUE(validate(c).empty());
    Circuit back = parse_circuit(serialize_circuit(c));
    EXPECT_EQ(back, c) << serialize_circuit(c);
  }
}

TEST(CircuitProperty, GeneratedCnotsAreAdjacent) {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    for (const Gate& g : testing::random_circuit(seed, 8, 20).gates) {
      if (g.kind == GateKind::CNOT) EXPECT_EQ(std::abs(*g.control - g.target), 1);
    }
  }
}

}  // namespace
}  // namespace etch
