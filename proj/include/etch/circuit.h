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

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "etch/angle.h"

namespace etch {

enum class GateKind { H, S, Sdg, Rx, Ry, Rz, URot, T, Tdg, CNOT };

// Lower-case name used by the circuit file format ("h", "sdg", "cnot", ...).
std::string_view gate_name(GateKind kind);
std::optional<GateKind> gate_kind_from_name(std::string_view name);

// Number of angles a gate of this kind carries: 1 for rx/ry/rz, 3 for urot.
std::size_t angle_arity(GateKind kind);

struct Gate {
  GateKind kind = GateKind::H;
  int target = 0;
  std::optional<int> control;  // CNOT only
  // Radians. urot holds [phi, theta, lambda] for Rz(phi) Rx(theta) Rz(lambda).
  std::vector<Angle> angles;

  bool operator==(const Gate&) const = default;
};

// Wires are numbered 0..n_wires-1 top to bottom; gates are in program order.
struct Circuit {
  std::string id;
  int n_wires = 1;
  std::vector<Gate> gates;

  bool operator==(const Circuit&) const = default;
};

class CircuitFormatError : public std::runtime_error {
 public:
  enum class Kind { MalformedDocument, UnknownGateKind, MissingField };

  CircuitFormatError(Kind kind, std::optional<std::size_t> gate_index,
                     const std::string& message);

  Kind kind() const { return kind_; }
  std::optional<std::size_t> gate_index() const { return gate_index_; }

 private:
  Kind kind_;
  std::optional<std::size_t> gate_index_;
};

Circuit parse_circuit(std::string_view json_text);
std::string serialize_circuit(const Circuit& circuit);

struct Violation {
  enum class Kind {
    NoWires,
    WireOutOfRange,
    NonAdjacentCnot,
    ControlMismatch,
    AngleArity,
  };
  Kind kind;
  std::optional<std::size_t> gate;

  std::string message() const;
  bool operator==(const Violation&) const = default;
};

// Every input restriction the transpiler imposes. Empty means valid.
std::vector<Violation> validate(const Circuit& circuit);

}  // namespace etch
