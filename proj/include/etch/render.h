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

#include <stdexcept>
#include <string>
#include <string_view>

#include "etch/lattice.h"

namespace etch {

enum class RenderFormat { Dot, Svg };

class UnknownFormat : public std::invalid_argument {
 public:
  explicit UnknownFormat(std::string_view name)
      : std::invalid_argument("UnknownFormat: '" + std::string(name) +
                              "' (expected dot or svg)") {}
};

RenderFormat parse_render_format(std::string_view name);

// Cell styles: solid for X/Y pattern measurements, open for wire X, a square
// for readout, a diamond for input, red for non-Pauli measurements and faint
// grey for excised cells (omitted unless show_excised).
struct RenderSpec {
  RenderFormat format = RenderFormat::Svg;
  bool show_excised = true;
};

enum class CellStyle { Input, PatternPauli, Wire, NonPauli, Readout, Excised };
CellStyle cell_style(const LatticeCell& cell);

std::string render_lattice(const Lattice& lattice, const RenderSpec& spec);

}  // namespace etch
