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

#include "etch/circuit.h"

#include <array>
#include <cstdlib>
#include <utility>

#include "json.hpp"

namespace etch {

namespace {

using nlohmann::json;

constexpr std::array<std::pair<GateKind, std::string_view>, 10> kGateNames = {{
    {GateKind::H, "h"},
    {GateKind::S, "s"},
    {GateKind::Sdg, "sdg"},
    {GateKind::Rx, "rx"},
    {GateKind::Ry, "ry"},
    {GateKind::Rz, "rz"},
    {GateKind::URot, "urot"},
    {GateKind::T, "t"},
    {GateKind::Tdg, "tdg"},
    {GateKind::CNOT, "cnot"},
}};

std::string at_gate(std::size_t i) { return "gate " + std::to_string(i) + ": "; }

Angle angle_from_json(const json& value, std::size_t gate_index) {
  try {
    if (value.is_string()) return Angle::parse(value.get<std::string>());
    if (value.is_number()) {
      double r = value.get<double>();
      return r == 0.0 ? Angle::pi_times(0) : Angle::from_radians(r);
    }
  } catch (const std::invalid_argument& e) {
    throw CircuitFormatError(CircuitFormatError::Kind::MalformedDocument, gate_index,
                             at_gate(gate_index) + e.what());
  }
  throw CircuitFormatError(CircuitFormatError::Kind::MalformedDocument, gate_index,
                           at_gate(gate_index) + "angle must be a number or string");
}

json angle_to_json(const Angle& a) {
  if (a.exact()) return a.to_string();
  return a.radians();
}

int wire_from_json(const json& gate, const char* field, std::size_t i) {
  if (!gate.contains(field)) {
    throw CircuitFormatError(CircuitFormatError::Kind::MissingField, i,
                             at_gate(i) + "missing field '" + field + "'");
  }
  const json& v = gate.at(field);
  if (!v.is_number_integer()) {
    throw CircuitFormatError(CircuitFormatError::Kind::MalformedDocument, i,
                             at_gate(i) + "field '" + field + "' must be an integer");
  }
  return v.get<int>();
}

}  // namespace

std::string_view gate_name(GateKind kind) {
  for (const auto& [k, name] : kGateNames) {
    if (k == kind) return name;
  }
  return "?";
}

std::optional<GateKind> gate_kind_from_name(std::string_view name) {
  for (const auto& [k, n] : kGateNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

std::size_t angle_arity(GateKind kind) {
  switch (kind) {
    case GateKind::Rx:
    case GateKind::Ry:
    case GateKind::Rz:
      return 1;
    case GateKind::URot:
      return 3;
    default:
      return 0;
  }
}

CircuitFormatError::CircuitFormatError(Kind kind, std::optional<std::size_t> gate_index,
                                       const std::string& message)
    : std::runtime_error(message), kind_(kind), gate_index_(gate_index) {}

Circuit parse_circuit(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw CircuitFormatError(CircuitFormatError::Kind::MalformedDocument, std::nullopt,
                             std::string("malformed circuit document: ") + e.what());
  }
  if (!doc.is_object()) {
    throw CircuitFormatError(CircuitFormatError::Kind::MalformedDocument, std::nullopt,
                             "circuit document must be a JSON object");
  }

  Circuit circuit;
  if (doc.contains("id")) {
    if (!doc["id"].is_string()) {
      throw CircuitFormatError(CircuitFormatError::Kind::MalformedDocument, std::nullopt,
                               "field 'id' must be a string");
    }
    circuit.id = doc["id"].get<std::string>();
  }
  if (!doc.contains("qubits")) {
    throw CircuitFormatError(CircuitFormatError::Kind::MissingField, std::nullopt,
                             "missing field 'qubits'");
  }
  if (!doc["qubits"].is_number_integer()) {
    throw CircuitFormatError(CircuitFormatError::Kind::MalformedDocument, std::nullopt,
                             "field 'qubits' must be an integer");
  }
  circuit.n_wires = doc["qubits"].get<int>();
  if (!doc.contains("gates")) {
    throw CircuitFormatError(CircuitFormatError::Kind::MissingField, std::nullopt,
                             "missing field 'gates'");
  }
  const json& gates = doc["gates"];
  if (!gates.is_array()) {
    throw CircuitFormatError(CircuitFormatError::Kind::MalformedDocument, std::nullopt,
                             "field 'gates' must be an array");
  }

  circuit.gates.reserve(gates.size());
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const json& g = gates[i];
    if (!g.is_object()) {
      throw CircuitFormatError(CircuitFormatError::Kind::MalformedDocument, i,
                               at_gate(i) + "gate must be an object");
    }
    if (!g.contains("type")) {
      throw CircuitFormatError(CircuitFormatError::Kind::MissingField, i,
                               at_gate(i) + "missing field 'type'");
    }
    if (!g["type"].is_string()) {
      throw CircuitFormatError(CircuitFormatError::Kind::MalformedDocument, i,
                               at_gate(i) + "field 'type' must be a string");
    }
    const std::string type = g["type"].get<std::string>();
    auto kind = gate_kind_from_name(type);
    if (!kind) {
      throw CircuitFormatError(CircuitFormatError::Kind::UnknownGateKind, i,
                               at_gate(i) + "unknown gate kind '" + type + "'");
    }

    Gate gate;
    gate.kind = *kind;
    gate.target = wire_from_json(g, "target", i);
    if (gate.kind == GateKind::CNOT || g.contains("control")) {
      gate.control = wire_from_json(g, "control", i);
    }
    if (g.contains("angles")) {
      if (!g["angles"].is_array()) {
        throw CircuitFormatError(CircuitFormatError::Kind::MalformedDocument, i,
                                 at_gate(i) + "field 'angles' must be an array");
      }
      for (const json& a : g["angles"]) gate.angles.push_back(angle_from_json(a, i));
    } else if (g.contains("angle")) {
      gate.angles.push_back(angle_from_json(g["angle"], i));
    }
    circuit.gates.push_back(std::move(gate));
  }
  return circuit;
}

std::string serialize_circuit(const Circuit& circuit) {
  json gates = json::array();
  for (const Gate& g : circuit.gates) {
    json out = json::object();
    out["type"] = std::string(gate_name(g.kind));
    if (g.control) out["control"] = *g.control;
    out["target"] = g.target;
    if (g.kind == GateKind::URot || g.angles.size() > 1) {
      json arr = json::array();
      for (const Angle& a : g.angles) arr.push_back(angle_to_json(a));
      out["angles"] = std::move(arr);
    } else if (g.angles.size() == 1) {
      out["angle"] = angle_to_json(g.angles.front());
    }
    gates.push_back(std::move(out));
  }
  json doc = json::object();
  doc["id"] = circuit.id;
  doc["qubits"] = circuit.n_wires;
  doc["gates"] = std::move(gates);
  return doc.dump(2) + "\n";
}

std::string Violation::message() const {
  std::string where = gate ? at_gate(*gate) : std::string();
  switch (kind) {
    case Kind::NoWires:
      return "circuit must have at least one wire";
    case Kind::WireOutOfRange:
      return where + "wire index out of range";
    case Kind::NonAdjacentCnot:
      return where + "NonAdjacentCNOT: control and target must be neighbouring wires";
    case Kind::ControlMismatch:
      return where + "control wire given for a non-CNOT gate";
    case Kind::AngleArity:
      return where + "wrong number of angles for gate kind";
  }
  return where + "invalid gate";
}

std::vector<Violation> validate(const Circuit& circuit) {
  std::vector<Violation> out;
  if (circuit.n_wires < 1) out.push_back({Violation::Kind::NoWires, std::nullopt});

  auto in_range = [&](int w) { return w >= 0 && w < circuit.n_wires; };
  for (std::size_t i = 0; i < circuit.gates.size(); ++i) {
    const Gate& g = circuit.gates[i];
    bool range_ok = in_range(g.target) && (!g.control || in_range(*g.control));
    if (!range_ok) out.push_back({Violation::Kind::WireOutOfRange, i});

    if (g.kind == GateKind::CNOT) {
      if (!g.control) {
        out.push_back({Violation::Kind::ControlMismatch, i});
      } else if (std::abs(*g.control - g.target) != 1) {
        out.push_back({Violation::Kind::NonAdjacentCnot, i});
      }
    } else if (g.control) {
      out.push_back({Violation::Kind::ControlMismatch, i});
    }

    if (g.angles.size() != angle_arity(g.kind)) {
      out.push_back({Violation::Kind::AngleArity, i});
    }
  }
  return out;
}

}  // namespace etch
