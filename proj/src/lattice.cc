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

#include "etch/lattice.h"

#include <algorithm>
#include <array>
#include <utility>

#include "json.hpp"

namespace etch {

namespace {

using nlohmann::json;

constexpr std::array<std::pair<CellRole, std::string_view>, 6> kRoleNames = {{
    {CellRole::Input, "input"},
    {CellRole::Wire, "wire"},
    {CellRole::PatternBody, "pattern"},
    {CellRole::CnotMiddle, "cnot-middle"},
    {CellRole::Readout, "readout"},
    {CellRole::Excised, "excised"},
}};

std::string violations_text(const std::vector<Violation>& violations) {
  std::string out = "circuit is not valid for layout:";
  for (const auto& v : violations) out += " [" + v.message() + "]";
  return out;
}

const MeasurementLabel& wire_label() {
  static const MeasurementLabel x = MeasurementLabel::in_plane(Angle::pi_times(0));
  return x;
}

class Builder {
 public:
  Builder(const Circuit& circuit, const PatternCatalogue& catalogue)
      : circuit_(circuit), catalogue_(catalogue), cursor_(circuit.n_wires, 0) {}

  Lattice build(const LayoutOptions& options) {
    for (std::size_t i = 0; i < circuit_.gates.size(); ++i) {
      const Gate& g = circuit_.gates[i];
      for (const Pattern& p : catalogue_.pattern_for(g)) {
        if (p.shape == PatternShape::ThreeRow) {
          place_cnot(i, *g.control, g.target, p);
        } else {
          place_row(i, g.target, p);
        }
      }
    }

    int last = 0;
    for (int c : cursor_) last = std::max(last, c);
    bool bare = circuit_.gates.empty();
    if (bare) last = 1;
    for (int w = 0; w < circuit_.n_wires; ++w) pad(w, last);

    Lattice lattice(2 * circuit_.n_wires - 1, last + 1);
    lattice.input_preparation = options.input;
    lattice.placements = std::move(placements_);
    if (bare) {
      lattice.warnings.push_back(
          "EmptyCircuit: no gates; lattice holds bare input-readout wires");
    }
    for (auto& [pos, cell] : pending_) {
      LatticeCell& dst = lattice.at(pos.first, pos.second);
      dst = cell;
    }
    for (int w = 0; w < circuit_.n_wires; ++w) {
      LatticeCell& in = lattice.at(2 * w, 0);
      in.role = CellRole::Input;
      LatticeCell& out = lattice.at(2 * w, last);
      out.role = CellRole::Readout;
      out.label = MeasurementLabel::readout();
      out.byproduct = Byproduct::Flow;
    }
    return lattice;
  }

 private:
  LatticeCell& cell(int row, int col) {
    auto& c = pending_[{row, col}];
    c.row = row;
    c.col = col;
    return c;
  }

  // Extends wire w with X-measured wire cells up to column `to`.
  void pad(int w, int to) {
    int row = 2 * w;
    for (int c = cursor_[w]; c < to; ++c) {
      LatticeCell& here = cell(row, c);
      if (here.role == CellRole::Excised) here.role = CellRole::Wire;
      here.label = wire_label();
      here.byproduct = Byproduct::Flow;
      LatticeCell& next = cell(row, c + 1);
      next.role = CellRole::Wire;
      next.source_gate.reset();
    }
    cursor_[w] = std::max(cursor_[w], to);
  }

  // Writes `count` measured labels from labels[first..] onto `row` starting
  // at `col`, then claims the appended cells for gate `gate`.
  void lay_row(int row, int col, std::size_t gate, const Pattern& p, std::size_t first,
               int count) {
    for (int k = 0; k < count; ++k) {
      LatticeCell& measured = cell(row, col + k);
      if (measured.role == CellRole::Excised) measured.role = CellRole::Wire;
      measured.label = p.labels[first + k];
      measured.byproduct = p.byproducts[first + k];
      LatticeCell& appended = cell(row, col + k + 1);
      appended.role = CellRole::PatternBody;
      appended.source_gate = gate;
    }
  }

  void place_row(std::size_t gate, int wire, const Pattern& p) {
    int start = cursor_[wire];
    lay_row(2 * wire, start, gate, p, 0, kSingleRowQubits);
    cursor_[wire] = start + kSingleRowQubits;
    placements_.push_back({gate, p.column, 2 * wire, std::nullopt, start});
  }

  void place_cnot(std::size_t gate, int control, int target, const Pattern& p) {
    int start = std::max(cursor_[control], cursor_[target]);
    pad(control, start);
    pad(target, start);
    lay_row(2 * control, start, gate, p, 0, kCnotRowQubits);
    lay_row(2 * target, start, gate, p, kCnotMiddleIndex + 1, kCnotRowQubits);

    LatticeCell& middle = cell(std::min(control, target) * 2 + 1, start + kCnotMiddleOffset);
    middle.role = CellRole::CnotMiddle;
    middle.label = p.labels[kCnotMiddleIndex];
    middle.byproduct = p.byproducts[kCnotMiddleIndex];
    middle.source_gate = gate;

    cursor_[control] = cursor_[target] = start + kCnotRowQubits;
    placements_.push_back({gate, p.column, 2 * control, 2 * target, start});
  }

  const Circuit& circuit_;
  const PatternCatalogue& catalogue_;
  std::vector<int> cursor_;
  std::vector<Placement> placements_;
  // Ordered so the grid is filled deterministically.
  std::map<std::pair<int, int>, LatticeCell> pending_;
};

json label_fields(const MeasurementLabel& label) {
  json out = json::object();
  switch (label.basis()) {
    case Basis::X:
      out["basis"] = "X";
      break;
    case Basis::Y:
      out["basis"] = "Y";
      break;
    case Basis::XYPlane:
      out["basis"] = "XY";
      break;
    case Basis::Z:
      out["basis"] = "Z";
      return out;
    case Basis::ReadoutZ:
      out["basis"] = "readout";
      return out;
    case Basis::Input:
      out["basis"] = "input";
      return out;
  }
  const Angle& a = label.angle();
  if (a.exact()) {
    out["angle"] = a.to_string();
  } else {
    out["angle"] = a.radians();
  }
  return out;
}

MeasurementLabel label_from_json(const json& cell) {
  const std::string basis = cell.at("basis").get<std::string>();
  if (basis == "Z") return MeasurementLabel::pauli_z();
  if (basis == "readout") return MeasurementLabel::readout();
  if (basis == "input") return MeasurementLabel::input();
  if (basis != "X" && basis != "Y" && basis != "XY") {
    throw std::invalid_argument("unknown basis '" + basis + "'");
  }
  const json& a = cell.at("angle");
  Angle angle = a.is_string() ? Angle::parse(a.get<std::string>())
                              : Angle::from_radians(a.get<double>());
  return MeasurementLabel::in_plane(angle);
}

}  // namespace

std::string_view role_name(CellRole role) {
  for (const auto& [r, name] : kRoleNames) {
    if (r == role) return name;
  }
  return "?";
}

std::optional<CellRole> role_from_name(std::string_view name) {
  for (const auto& [r, n] : kRoleNames) {
    if (n == name) return r;
  }
  return std::nullopt;
}

std::string_view preparation_name(InputPreparation prep) {
  switch (prep) {
    case InputPreparation::Zero:
      return "zero";
    case InputPreparation::Plus:
      return "plus";
    case InputPreparation::Custom:
      return "custom";
  }
  return "?";
}

Lattice::Lattice(int rows, int cols) : rows_(rows), cols_(cols) {
  cells_.resize(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols));
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      LatticeCell& cell = at(r, c);
      cell.row = r;
      cell.col = c;
    }
  }
}

std::vector<int> Lattice::wire_rows() const {
  std::vector<int> out;
  for (int r = 0; r < rows_; r += 2) out.push_back(r);
  return out;
}

const LatticeCell& Lattice::at(int row, int col) const {
  if (row < 0 || row >= rows_ || col < 0 || col >= cols_) {
    throw std::out_of_range("lattice cell out of range");
  }
  return cells_[static_cast<std::size_t>(row) * cols_ + col];
}

LatticeCell& Lattice::at(int row, int col) {
  return const_cast<LatticeCell&>(std::as_const(*this).at(row, col));
}

LayoutError::LayoutError(std::vector<Violation> violations)
    : std::invalid_argument(violations_text(violations)),
      violations_(std::move(violations)) {}

Lattice layout(const Circuit& circuit, const PatternCatalogue& catalogue,
               const LayoutOptions& options) {
  if (auto violations = validate(circuit); !violations.empty()) {
    throw LayoutError(std::move(violations));
  }
  return Builder(circuit, catalogue).build(options);
}

std::size_t occupied_count(const Lattice& lattice) {
  return static_cast<std::size_t>(
      std::count_if(lattice.cells().begin(), lattice.cells().end(),
                    [](const LatticeCell& c) { return c.occupied(); }));
}

std::size_t excision_count(const Lattice& lattice) {
  return lattice.cells().size() - occupied_count(lattice);
}

std::array<int, 2> specification(const Lattice& lattice) {
  return {lattice.rows(), lattice.cols()};
}

std::string lattice_to_json(const Lattice& lattice) {
  json cells = json::array();
  for (const LatticeCell& c : lattice.cells()) {
    json out = json::object();
    out["row"] = c.row;
    out["col"] = c.col;
    out["role"] = std::string(role_name(c.role));
    if (c.label) out.update(label_fields(*c.label));
    if (c.source_gate) out["gate"] = *c.source_gate;
    if (c.byproduct == Byproduct::Self) out["byproduct"] = "self";
    cells.push_back(std::move(out));
  }
  json doc = json::object();
  doc["rows"] = lattice.rows();
  doc["cols"] = lattice.cols();
  doc["readout_col"] = lattice.readout_col();
  doc["input"] = std::string(preparation_name(lattice.input_preparation));
  doc["cells"] = std::move(cells);
  return doc.dump() + "\n";
}

Lattice lattice_from_json(std::string_view text) {
  try {
    json doc = json::parse(text);
    int rows = doc.at("rows").get<int>();
    int cols = doc.at("cols").get<int>();
    if (rows < 1 || cols < 1) throw std::invalid_argument("lattice must be non-empty");
    if (doc.contains("readout_col") && doc["readout_col"].get<int>() != cols - 1) {
      throw std::invalid_argument("readout_col must be the last column");
    }
    Lattice lattice(rows, cols);
    if (doc.contains("input")) {
      const std::string prep = doc["input"].get<std::string>();
      if (prep == "zero") {
        lattice.input_preparation = InputPreparation::Zero;
      } else if (prep == "plus") {
        lattice.input_preparation = InputPreparation::Plus;
      } else if (prep == "custom") {
        lattice.input_preparation = InputPreparation::Custom;
      } else {
        throw std::invalid_argument("unknown input preparation '" + prep + "'");
      }
    }
    for (const json& c : doc.at("cells")) {
      LatticeCell& cell = lattice.at(c.at("row").get<int>(), c.at("col").get<int>());
      auto role = role_from_name(c.at("role").get<std::string>());
      if (!role) throw std::invalid_argument("unknown cell role");
      cell.role = *role;
      if (c.contains("basis")) cell.label = label_from_json(c);
      if (c.contains("gate")) cell.source_gate = c["gate"].get<std::size_t>();
      if (c.contains("byproduct") && c["byproduct"] == "self") {
        cell.byproduct = Byproduct::Self;
      }
      if (cell.role != CellRole::Excised && !cell.label) {
        throw std::invalid_argument("occupied cell without a basis");
      }
    }
    return lattice;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed lattice document: ") + e.what());
  }
}

}  // namespace etch
