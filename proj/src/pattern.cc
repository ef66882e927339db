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

#include "etch/pattern.h"

#include <cmath>
#include <numbers>
#include <sstream>

#include "catalogue_text.h"

namespace etch {

namespace {

constexpr double kAngleTolerance = 1e-12;

// Quarter turns k with angle == k*pi/2 (mod 2pi), if any.
std::optional<int> quarter_turns(const Angle& angle) {
  if (const auto& exact = angle.exact()) {
    if ((2 * exact->num) % exact->den != 0) return std::nullopt;
    std::int64_t k = (2 * exact->num) / exact->den;
    return static_cast<int>(((k % 4) + 4) % 4);
  }
  double quarters = angle.radians() / (std::numbers::pi / 2);
  double nearest = std::round(quarters);
  if (std::abs(angle.radians() - nearest * std::numbers::pi / 2) > kAngleTolerance) {
    return std::nullopt;
  }
  return static_cast<int>(((static_cast<long long>(nearest) % 4) + 4) % 4);
}

std::optional<GateKind> catalogue_kind(std::string_view name) {
  return gate_kind_from_name(name);
}

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::optional<PatternShape> shape_from_name(std::string_view name) {
  if (name == "row4") return PatternShape::SingleRow;
  if (name == "6-1-6") return PatternShape::ThreeRow;
  return std::nullopt;
}

std::size_t shape_size(PatternShape shape) {
  return shape == PatternShape::SingleRow ? kSingleRowQubits : kCnotQubits;
}

// Drops the "|" group separators of a 6-1-6 record after checking them.
std::vector<std::string> ungroup(const std::vector<std::string>& tokens,
                                 PatternShape shape, int line_no) {
  std::vector<std::string> out;
  std::vector<std::size_t> group_sizes{0};
  for (const auto& t : tokens) {
    if (t == "|") {
      group_sizes.push_back(0);
    } else {
      out.push_back(t);
      ++group_sizes.back();
    }
  }
  bool ok = shape == PatternShape::SingleRow
                ? group_sizes.size() == 1
                : group_sizes == std::vector<std::size_t>{kCnotRowQubits, 1, kCnotRowQubits};
  if (!ok || out.size() != shape_size(shape)) {
    throw CatalogueError("catalogue line " + std::to_string(line_no) +
                         ": wrong number of entries for shape");
  }
  return out;
}

}  // namespace

AngleClass classify_angle(const Angle& angle) {
  return quarter_turns(angle) ? AngleClass::Clifford : AngleClass::NonClifford;
}

AngleClass classify_angle(double radians) {
  return classify_angle(Angle::from_radians(radians));
}

MeasurementLabel MeasurementLabel::in_plane(const Angle& angle) {
  if (auto k = quarter_turns(angle)) {
    switch (*k) {
      case 0:
        return MeasurementLabel(Basis::X, Angle::pi_times(0));
      case 1:
        return MeasurementLabel(Basis::Y, Angle::pi_times(1, 2));
      case 2:
        return MeasurementLabel(Basis::X, Angle::pi_times(1));
      default:
        return MeasurementLabel(Basis::Y, Angle::pi_times(-1, 2));
    }
  }
  return MeasurementLabel(Basis::XYPlane, angle);
}

MeasurementLabel MeasurementLabel::parse(std::string_view text) {
  if (text == "X" || text == "+X") return in_plane(Angle::pi_times(0));
  if (text == "-X") return in_plane(Angle::pi_times(1));
  if (text == "Y" || text == "+Y") return in_plane(Angle::pi_times(1, 2));
  if (text == "-Y") return in_plane(Angle::pi_times(-1, 2));
  if (text == "Z") return pauli_z();
  if (text == "readout") return readout();
  if (text == "input") return input();
  if (text.size() > 4 && text.substr(0, 3) == "XY(" && text.back() == ')') {
    return in_plane(Angle::parse(text.substr(3, text.size() - 4)));
  }
  throw std::invalid_argument("unknown measurement label '" + std::string(text) + "'");
}

std::string MeasurementLabel::to_string() const {
  switch (basis_) {
    case Basis::X:
      return angle_.exact() && angle_.exact()->num != 0 ? "-X" : "X";
    case Basis::Y:
      return angle_.exact() && angle_.exact()->num < 0 ? "-Y" : "+Y";
    case Basis::XYPlane:
      return "XY(" + angle_.to_string() + ")";
    case Basis::Z:
      return "Z";
    case Basis::ReadoutZ:
      return "readout";
    case Basis::Input:
      return "input";
  }
  return "?";
}

std::string_view column_name(PatternColumn column) {
  switch (column) {
    case PatternColumn::Clifford4:
      return "Clifford_4";
    case PatternColumn::Cnot:
      return "CNOT_6-1-6";
    case PatternColumn::ArbitraryZRotation4:
      return "arbitrary Z-rotation_4";
    case PatternColumn::T4:
      return "T_4/Tdg_4";
  }
  return "?";
}

const PatternCatalogue& PatternCatalogue::standard() {
  static const PatternCatalogue catalogue = parse(detail::kStandardCatalogue);
  return catalogue;
}

PatternCatalogue PatternCatalogue::parse(std::string_view text) {
  PatternCatalogue cat;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    auto tokens = split_ws(line);
    if (tokens.empty()) continue;
    auto fail = [&](const std::string& what) {
      throw CatalogueError("catalogue line " + std::to_string(line_no) + ": " + what);
    };

    if (tokens[0] == "byproduct") {
      if (tokens.size() < 2) fail("missing shape");
      auto shape = shape_from_name(tokens[1]);
      if (!shape) fail("unknown shape '" + tokens[1] + "'");
      auto rules = ungroup({tokens.begin() + 2, tokens.end()}, *shape, line_no);
      std::vector<Byproduct> parsed;
      for (const auto& r : rules) {
        if (r == "flow") {
          parsed.push_back(Byproduct::Flow);
        } else if (r == "self") {
          parsed.push_back(Byproduct::Self);
        } else {
          fail("unknown byproduct rule '" + r + "'");
        }
      }
      cat.byproducts_[*shape] = std::move(parsed);
    } else if (tokens[0] == "pattern") {
      if (tokens.size() < 3) fail("missing kind or shape");
      auto kind = catalogue_kind(tokens[1]);
      if (!kind) fail("unknown gate kind '" + tokens[1] + "'");
      auto shape = shape_from_name(tokens[2]);
      if (!shape) fail("unknown shape '" + tokens[2] + "'");
      if ((*kind == GateKind::CNOT) != (*shape == PatternShape::ThreeRow)) {
        fail("cnot must use the 6-1-6 shape and only cnot may");
      }
      Entry entry{*shape, {}};
      for (const auto& tok : ungroup({tokens.begin() + 3, tokens.end()}, *shape, line_no)) {
        LabelTemplate t;
        if (tok == "XY(theta)") {
          t.theta_sign = 1;
        } else if (tok == "XY(-theta)") {
          t.theta_sign = -1;
        } else {
          try {
            t.fixed = MeasurementLabel::parse(tok);
          } catch (const std::invalid_argument& e) {
            fail(e.what());
          }
        }
        entry.labels.push_back(t);
      }
      cat.entries_[*kind] = std::move(entry);
    } else {
      fail("unknown record '" + tokens[0] + "'");
    }
  }

  for (const auto& [kind, entry] : cat.entries_) {
    if (!cat.byproducts_.count(entry.shape)) {
      throw CatalogueError("catalogue has no byproduct rules for the shape of '" +
                           std::string(gate_name(kind)) + "'");
    }
  }
  return cat;
}

Pattern PatternCatalogue::instantiate(GateKind kind, const Entry& entry,
                                      std::optional<Angle> theta) const {
  Pattern p;
  p.kind = kind;
  p.shape = entry.shape;
  p.qubit_count = static_cast<int>(shape_size(entry.shape));
  p.byproducts = byproducts_.at(entry.shape);
  for (const LabelTemplate& t : entry.labels) {
    if (t.fixed) {
      p.labels.push_back(*t.fixed);
    } else {
      if (!theta) {
        throw CatalogueError("pattern '" + std::string(gate_name(kind)) +
                             "' needs a gate angle");
      }
      p.labels.push_back(MeasurementLabel::in_plane(t.theta_sign > 0 ? *theta : -*theta));
    }
    if (!p.labels.back().is_pauli()) ++p.non_pauli_count;
  }

  if (kind == GateKind::CNOT) {
    p.column = PatternColumn::Cnot;
  } else if (p.non_pauli_count == 0) {
    p.column = PatternColumn::Clifford4;
  } else if (kind == GateKind::T || kind == GateKind::Tdg) {
    p.column = PatternColumn::T4;
  } else {
    p.column = PatternColumn::ArbitraryZRotation4;
  }
  return p;
}

std::vector<Pattern> PatternCatalogue::pattern_for(const Gate& gate) const {
  auto lookup = [&](GateKind kind) -> const Entry& {
    auto it = entries_.find(kind);
    if (it == entries_.end()) {
      throw CatalogueError("no catalogue entry for gate kind '" +
                           std::string(gate_name(kind)) + "'");
    }
    return it->second;
  };

  if (gate.kind == GateKind::URot) {
    if (gate.angles.size() != 3) throw CatalogueError("urot needs three angles");
    const Entry& rz = lookup(GateKind::Rz);
    const Entry& rx = lookup(GateKind::Rx);
    return {instantiate(GateKind::Rz, rz, gate.angles[2]),
            instantiate(GateKind::Rx, rx, gate.angles[1]),
            instantiate(GateKind::Rz, rz, gate.angles[0])};
  }
  std::optional<Angle> theta;
  if (!gate.angles.empty()) theta = gate.angles.front();
  return {instantiate(gate.kind, lookup(gate.kind), theta)};
}

}  // namespace etch
