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

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "etch/circuit.h"
#include "etch/pattern.h"

namespace etch {

enum class CellRole { Input, Wire, PatternBody, CnotMiddle, Readout, Excised };

std::string_view role_name(CellRole role);
std::optional<CellRole> role_from_name(std::string_view name);

struct LatticeCell {
  int row = 0;
  int col = 0;
  CellRole role = CellRole::Excised;
  // Measurement basis. Absent only for excised cells.
  std::optional<MeasurementLabel> label;
  std::optional<std::size_t> source_gate;
  Byproduct byproduct = Byproduct::Flow;

  bool occupied() const { return role != CellRole::Excised; }
  bool operator==(const LatticeCell&) const = default;
};

// State the input column is prepared in. Metrics do not depend on it.
enum class InputPreparation { Zero, Plus, Custom };

std::string_view preparation_name(InputPreparation prep);

// Where one pattern was placed. Single-row patterns have no second row.
struct Placement {
  std::size_t gate = 0;
  PatternColumn column = PatternColumn::Clifford4;
  int row = 0;
  std::optional<int> target_row;  // CNOT target row
  int start_col = 0;              // merged input column

  bool operator==(const Placement&) const = default;
};

// Dense rows x cols grid. Wire w sits on row 2w; odd rows are interstitial and
// hold only CNOT middle cells or excised cells.
class Lattice {
 public:
  Lattice() = default;
  Lattice(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int readout_col() const { return cols_ - 1; }
  std::vector<int> wire_rows() const;

  const LatticeCell& at(int row, int col) const;
  LatticeCell& at(int row, int col);
  const std::vector<LatticeCell>& cells() const { return cells_; }

  InputPreparation input_preparation = InputPreparation::Zero;
  std::vector<Placement> placements;
  std::vector<std::string> warnings;

  bool operator==(const Lattice& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && cells_ == other.cells_ &&
           input_preparation == other.input_preparation;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<LatticeCell> cells_;
};

class LayoutError : public std::invalid_argument {
 public:
  explicit LayoutError(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

struct LayoutOptions {
  InputPreparation input = InputPreparation::Zero;
};

// Places every pattern left to right, wire rows top to bottom, with merged
// input/output cells, CNOT synchronisation padding and a shared readout
// column. Throws LayoutError if validate(circuit) is not empty. A circuit
// with no gates yields an Input-Readout lattice and a warning.
Lattice layout(const Circuit& circuit,
               const PatternCatalogue& catalogue = PatternCatalogue::standard(),
               const LayoutOptions& options = {});

std::size_t excision_count(const Lattice& lattice);
std::size_t occupied_count(const Lattice& lattice);

// [rows, cols]
std::array<int, 2> specification(const Lattice& lattice);

std::string lattice_to_json(const Lattice& lattice);
// Throws std::invalid_argument on a malformed document.
Lattice lattice_from_json(std::string_view text);

}  // namespace etch
