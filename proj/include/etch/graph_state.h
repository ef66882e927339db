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
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "etch/lattice.h"

namespace etch {

struct Vertex {
  int id = 0;
  int row = 0;
  int col = 0;
  MeasurementLabel label = MeasurementLabel::input();
  CellRole role = CellRole::Wire;
  Byproduct byproduct = Byproduct::Flow;
};

// Simple undirected graph with per-vertex measurement labels. Vertices are
// numbered 0..n-1; edges are stored once with u < v.
class GraphState {
 public:
  GraphState() = default;
  explicit GraphState(std::vector<Vertex> vertices);
  // Bare graph with default labels, handy for tests.
  static GraphState with_order(int n);

  // Returns false (and changes nothing) for a self-loop or an existing edge.
  bool add_edge(int u, int v);

  int n() const { return static_cast<int>(vertices_.size()); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  // Sorted neighbour ids.
  const std::vector<int>& neighbours(int v) const { return adjacency_.at(v); }
  bool has_edge(int u, int v) const;

  // Vertex id of a lattice cell, or -1 if the cell is excised or unknown.
  int vertex_at(int row, int col) const;

 private:
  std::vector<Vertex> vertices_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<std::pair<int, int>> edges_;
};

// Vertices are the non-excised cells in row-major order. Edges join grid
// neighbours (left-right and up-down) that are both non-excised. On laid-out
// lattices that is the wire chains plus two vertical edges per CNOT middle.
GraphState build_graph_state(const Lattice& lattice);

enum class PauliLetter : std::uint8_t { I = 0, X = 1, Z = 2, Y = 3 };

char letter_char(PauliLetter p);

// Sparse Pauli operator i^phase * P_0 P_1 ... on n qubits.
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(int n) : n_(n) {}
  // "XZI" style, optionally prefixed by "+", "-", "i" or "-i".
  static PauliString parse(const std::string& text);

  int n() const { return n_; }
  int phase() const { return phase_; }  // power of i, 0..3
  void set_phase(int phase) { phase_ = ((phase % 4) + 4) % 4; }

  PauliLetter at(int q) const;
  void set(int q, PauliLetter p);
  // Non-identity positions in ascending order.
  const std::vector<std::pair<int, PauliLetter>>& support() const { return support_; }

  std::string to_string() const;

  bool operator==(const PauliString&) const = default;

 private:
  int n_ = 0;
  int phase_ = 0;
  std::vector<std::pair<int, PauliLetter>> support_;
};

bool commutes(const PauliString& a, const PauliString& b);

// K_i = X_i Z_{N(i)}, one per vertex, phase +1.
std::vector<PauliString> stabilizer_generators(const GraphState& g);

// Rank over GF(2) of the generators' symplectic (x|z) rows.
std::size_t symplectic_rank(const std::vector<PauliString>& generators);

struct GeneratorCheck {
  bool commuting = true;
  std::size_t rank = 0;
  std::size_t anticommuting_pairs = 0;
  bool independent(std::size_t n) const { return rank == n; }
};

// Pairwise commutation (only pairs with overlapping support are tested) and
// symplectic rank. Linear in total support size for sparse generators.
GeneratorCheck check_generators(const std::vector<PauliString>& generators);

// One "u v" line per edge.
std::string edge_list_text(const GraphState& g);
// Undirected DOT graph with nodes pinned at their lattice coordinates.
std::string graph_to_dot(const GraphState& g);

}  // namespace etch
