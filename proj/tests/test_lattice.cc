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

#include <algorithm>
#include <map>

#include "etch/lattice.h"
#include "random_circuits.h"

namespace etch {
namespace {

// Independent recomputation of the column count from the append rules:
// 4 columns per single-row pattern, 6 per CNOT after synchronising the two
// wires, plus the input column.
int expected_cols(const Circuit& c) {
  std::vector<int> cursor(c.n_wires, 0);
  for (const Gate& g : c.gates) {
    if (g.kind == GateKind::CNOT) {
      int s = std::max(cursor[*g.control], cursor[g.target]) + 6;
      cursor[*g.control] = cursor[g.target] = s;
    } else {
      cursor[g.target] += g.kind == GateKind::URot ? 12 : 4;
    }
  }
  int last = *std::max_element(cursor.begin(), cursor.end());
  return std::max(last, 1) + 1;
}

int cnot_count(const Circuit& c) {
  return static_cast<int>(std::count_if(c.gates.begin(), c.gates.end(),
                                        [](const Gate& g) { return g.kind == GateKind::CNOT; }));
}

TEST(Layout, Ghz3Census) {
  Lattice l = layout(testing::ghz3());
  EXPECT_EQ(specification(l), (std::array<int, 2>{5, 17}));
  EXPECT_EQ(l.readout_col(), 16);
  EXPECT_EQ(occupied_count(l), 53u);
  EXPECT_EQ(excision_count(l), 32u);
  EXPECT_EQ(l.wire_rows(), (std::vector<int>{0, 2, 4}));
}

TEST(Layout, SingleH) {
  Lattice l = layout(testing::single(GateKind::H));
  EXPECT_EQ(specification(l), (std::array<int, 2>{1, 5}));
  EXPECT_EQ(l.at(0, 0).role, CellRole::Input);
  for (int c = 1; c < 4; ++c) EXPECT_EQ(l.at(0, c).role, CellRole::PatternBody);
  EXPECT_EQ(l.at(0, 4).role, CellRole::Readout);
  EXPECT_EQ(excision_count(l), 0u);
}

TEST(Layout, SingleTHasOneNonPauliLabel) {
  Lattice l = layout(testing::single(GateKind::T));
  EXPECT_EQ(specification(l), (std::array<int, 2>{1, 5}));
  int non_pauli = 0;
  for (const auto& c : l.cells()) non_pauli += c.label && !c.label->is_pauli();
  EXPECT_EQ(non_pauli, 1);
}

TEST(Layout, ParallelWiresExciseTheInterstitialRow) {
  Circuit c{"p", 2, {{GateKind::H, 0, {}, {}}, {GateKind::T, 1, {}, {}}}};
  Lattice l = layout(c);
  EXPECT_EQ(specification(l), (std::array<int, 2>{3, 5}));
  EXPECT_EQ(excision_count(l), 5u);
}

TEST(Layout, CnotSynchronisesAndPads) {
  Circuit c{"s", 2, {{GateKind::H, 0, {}, {}}, {GateKind::H, 0, {}, {}}, {GateKind::CNOT, 1, 0, {}}}};
  Lattice l = layout(c);
  EXPECT_EQ(l.cols(), 15);
  // Wire 1 waited at columns 0..8 as X-measured wire cells.
  for (int col = 1; col <= 8; ++col) EXPECT_EQ(l.at(2, col).role, CellRole::Wire) << col;
  EXPECT_EQ(l.at(1, 8 + kCnotMiddleOffset).role, CellRole::CnotMiddle);
  ASSERT_EQ(l.placements.size(), 3u);
  EXPECT_EQ(l.placements[2].start_col, 8);
  EXPECT_EQ(l.placements[2].target_row, 2);
}

TEST(Layout, EmptyCircuitWarns) {
  Circuit c{"e", 1, {}};
  Lattice l = layout(c);
  EXPECT_EQ(specification(l), (std::array<int, 2>{1, 2}));
  EXPECT_EQ(l.at(0, 0).role, CellRole::Input);
  EXPECT_EQ(l.at(0, 1).role, CellRole::Readout);
  ASSERT_EQ(l.warnings.size(), 1u);
  EXPECT_NE(l.warnings[0].find("EmptyCircuit"), std::string::npos);
}

TEST(Layout, RejectsInvalidCircuits) {
  Circuit c{"bad", 3, {{GateKind::CNOT, 2, 0, {}}}};
  try {
    layout(c);
    FAIL();
  } catch (const LayoutError& e) {
    ASSERT_EQ(e.violations().size(), 1u);
    EXPECT_EQ(e.violations()[0].kind, Violation::Kind::NonAdjacentCnot);
  }
}

TEST(Specification, Product) {
  Lattice l(11, 21);
  EXPECT_EQ(l.cells().size(), 231u);
}

class LayoutProperty : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(LayoutProperty, StructuralInvariants) {
  const Circuit c = testing::random_circuit(GetParam(), 6, 14);
  const Lattice l = layout(c);
  ASSERT_EQ(l.rows(), 2 * c.n_wires - 1);
  ASSERT_EQ(l.cols(), expected_cols(c));
  EXPECT_EQ(occupied_count(l) + excision_count(l), l.cells().size());
  EXPECT_EQ(occupied_count(l), static_cast<std::size_t>(c.n_wires * l.cols() + cnot_count(c)));

  for (const LatticeCell& cell : l.cells()) {
    const bool wire_row = cell.row % 2 == 0;
    if (wire_row) {
      EXPECT_TRUE(cell.occupied());
      EXPECT_EQ(cell.role == CellRole::Readout, cell.col == l.readout_col());
      EXPECT_EQ(cell.role == CellRole::Input, cell.col == 0);
    } else {
      EXPECT_TRUE(cell.role == CellRole::CnotMiddle || cell.role == CellRole::Excised);
    }
    EXPECT_EQ(cell.label.has_value(), cell.occupied());
  }

  // Placements reproduce pattern_for, in order, with aligned CNOT segments.
  std::size_t expected = 0;
  for (const Gate& g : c.gates) expected += PatternCatalogue::standard().pattern_for(g).size();
  ASSERT_EQ(l.placements.size(), expected);
  for (const Placement& p : l.placements) {
    if (p.column != PatternColumn::Cnot) continue;
    int middle_row = std::min(p.row, *p.target_row) + 1;
    const LatticeCell& m = l.at(middle_row, p.start_col + kCnotMiddleOffset);
    EXPECT_EQ(m.role, CellRole::CnotMiddle);
    EXPECT_EQ(m.source_gate, p.gate);
    EXPECT_GT(kCnotMiddleOffset, 0);
    EXPECT_LE(kCnotMiddleOffset, 6);
  }
}

TEST_P(LayoutProperty, DeterministicAndRoundTrips) {
  const Circuit c = testing::random_circuit(GetParam(), 5, 10);
  const Lattice a = layout(c);
  const Lattice b = layout(c);
  EXPECT_EQ(a, b);
  EXPECT_EQ(lattice_to_json(a), lattice_to_json(b));
  Lattice back = lattice_from_json(lattice_to_json(a));
  EXPECT_EQ(back, a);
}

INSTANTIATE_TEST_SUITE_P(Seeds, LayoutProperty, ::testing::Range<std::uint64_t>(1, 121));

TEST(LatticeJson, RejectsMalformed) {
  EXPECT_THROW(lattice_from_json("{"), std::invalid_argument);
  EXPECT_THROW(lattice_from_json(R"({"rows": 1, "cols": 2, "cells": [{"row": 0, "col": 5, "role": "wire", "basis": "X", "angle": "0"}]})"),
               std::out_of_range);
  EXPECT_THROW(lattice_from_json(R"({"rows": 1, "cols": 2, "cells": [{"row": 0, "col": 0, "role": "teapot"}]})"),
               std::invalid_argument);
}

TEST(LatticeJson, ExcisedCellsCarryRoleOnly) {
  std::string text = lattice_to_json(layout(testing::ghz3()));
  EXPECT_NE(text.find(R"("role":"excised")"), std::string::npos);
  EXPECT_NE(text.find(R"("readout_col":16)"), std::string::npos);
  EXPECT_NE(text.find(R"("byproduct":"self")"), std::string::npos);
}

}  // namespace
}  // namespace etch
