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

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "etch/angle.h"
#include "etch/circuit.h"

namespace etch {

enum class AngleClass { Clifford, NonClifford };

// Clifford iff the angle is k*pi/2 mod 2pi: exactly for symbolic angles,
// within 1e-12 otherwise.
AngleClass classify_angle(const Angle& angle);
AngleClass classify_angle(double radians);

enum class Basis { X, Y, Z, XYPlane, ReadoutZ, Input };

class MeasurementLabel {
 public:
  // XY-plane measurement. Angles equal to 0, pi/2, pi or -pi/2 collapse to the
  // Pauli labels X, +Y, -X, -Y; the sign is kept in angle().
  static MeasurementLabel in_plane(const Angle& angle);
  static MeasurementLabel pauli_z() { return MeasurementLabel(Basis::Z); }
  static MeasurementLabel readout() { return MeasurementLabel(Basis::ReadoutZ); }
  static MeasurementLabel input() { return MeasurementLabel(Basis::Input); }

  // "X", "-X", "+Y", "-Y", "XY(<angle>)", "Z", "readout", "input".
  static MeasurementLabel parse(std::string_view text);

  Basis basis() const { return basis_; }
  // XY-plane measurement angle; zero for Z-type labels.
  const Angle& angle() const { return angle_; }
  bool in_xy_plane() const {
    return basis_ == Basis::X || basis_ == Basis::Y || basis_ == Basis::XYPlane;
  }
  bool is_pauli() const { return basis_ != Basis::XYPlane; }

  std::string to_string() const;

  bool operator==(const MeasurementLabel&) const = default;

 private:
  explicit MeasurementLabel(Basis basis) : basis_(basis) {}
  MeasurementLabel(Basis basis, Angle angle) : basis_(basis), angle_(angle) {}

  Basis basis_ = Basis::X;
  Angle angle_;
};

enum class PatternShape { SingleRow, ThreeRow };

// Table columns a pattern is counted under.
enum class PatternColumn { Clifford4, Cnot, ArbitraryZRotation4, T4 };

std::string_view column_name(PatternColumn column);

// How the outcome of a measured cell is corrected.
enum class Byproduct { Flow, Self };

inline constexpr int kSingleRowQubits = 4;
inline constexpr int kCnotRowQubits = 6;
inline constexpr int kCnotQubits = 2 * kCnotRowQubits + 1;
inline constexpr int kCzQubits = 8;
// Index of the CNOT middle cell within Pattern::labels.
inline constexpr int kCnotMiddleIndex = kCnotRowQubits;
// Column of the middle cell relative to the pattern's merged input column,
// i.e. the third of the six appended columns.
inline constexpr int kCnotMiddleOffset = 3;

struct Pattern {
  GateKind kind = GateKind::H;
  int qubit_count = kSingleRowQubits;
  PatternShape shape = PatternShape::SingleRow;
  // SingleRow: 4 labels. ThreeRow: 6 control, 1 middle, 6 target.
  std::vector<MeasurementLabel> labels;
  std::vector<Byproduct> byproducts;  // parallel to labels
  int non_pauli_count = 0;
  PatternColumn column = PatternColumn::Clifford4;
};

class CatalogueError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Gate kind -> measurement pattern. Loaded from the plain-text catalogue
// format in data/patterns.cat; standard() is that file compiled in.
class PatternCatalogue {
 public:
  static const PatternCatalogue& standard();
  static PatternCatalogue parse(std::string_view text);

  // One pattern per gate, except urot which expands to Rz, Rx, Rz patterns in
  // time order. Throws CatalogueError if the kind has no entry.
  std::vector<Pattern> pattern_for(const Gate& gate) const;

  bool has(GateKind kind) const { return entries_.count(kind) != 0; }

 private:
  struct LabelTemplate {
    std::optional<MeasurementLabel> fixed;
    int theta_sign = 0;  // +1 for theta, -1 for -theta
  };
  struct Entry {
    PatternShape shape;
    std::vector<LabelTemplate> labels;
  };

  Pattern instantiate(GateKind kind, const Entry& entry,
                      std::optional<Angle> theta) const;

  std::map<GateKind, Entry> entries_;
  std::map<PatternShape, std::vector<Byproduct>> byproducts_;
};

}  // namespace etch
