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

#include "etch/graph_state.h"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace etch {

GraphState::GraphState(std::vector<Vertex> vertices)
    : vertices_(std::move(vertices)), adjacency_(vertices_.size()) {
  for (std::size_t i = 0; i < vertices_.size(); ++i) vertices_[i].id = static_cast<int>(i);
}

GraphState GraphState::with_order(int n) {
  std::vector<Vertex> vs(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    vs[i].col = i;
    vs[i].label = MeasurementLabel::in_plane(Angle::pi_times(0));
  }
  return GraphState(std::move(vs));
}

bool GraphState::add_edge(int u, int v) {
  if (u == v || u < 0 || v < 0 || u >= n() || v >= n()) return false;
  if (has_edge(u, v)) return false;
  auto insert_sorted = [](std::vector<int>& list, int x) {
    list.insert(std::lower_bound(list.begin(), list.end(), x), x);
  };
  insert_sorted(adjacency_[u], v);
  insert_sorted(adjacency_[v], u);
  edges_.emplace_back(std::min(u, v), std::max(u, v));
  return true;
}

bool GraphState::has_edge(int u, int v) const {
  const auto& list = adjacency_.at(u);
  return std::binary_search(list.begin(), list.end(), v);
}

int GraphState::vertex_at(int row, int col) const {
  // Vertices are row-major, so a binary search on (row, col) finds the cell.
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), std::make_pair(row, col),
                             [](const Vertex& v, const std::pair<int, int>& key) {
                               return std::make_pair(v.row, v.col) < key;
                             });
  if (it == vertices_.end() || it->row != row || it->col != col) return -1;
  return it->id;
}

GraphState build_graph_state(const Lattice& lattice) {
  std::vector<Vertex> vertices;
  std::vector<int> id_of(lattice.cells().size(), -1);
  for (std::size_t i = 0; i < lattice.cells().size(); ++i) {
    const LatticeCell& c = lattice.cells()[i];
    if (!c.occupied()) continue;
    Vertex v;
    v.row = c.row;
    v.col = c.col;
    v.role = c.role;
    v.byproduct = c.byproduct;
    if (c.role == CellRole::Input) {
      // The input cell is measured by the pattern that starts there.
      v.label = c.label.value_or(MeasurementLabel::input());
    } else if (c.label) {
      v.label = *c.label;
    }
    id_of[i] = static_cast<int>(vertices.size());
    vertices.push_back(v);
  }
  GraphState g(std::move(vertices));
  const int cols = lattice.cols();
  for (int r = 0; r < lattice.rows(); ++r) {
    for (int c = 0; c < cols; ++c) {
      int here = id_of[static_cast<std::size_t>(r) * cols + c];
      if (here < 0) continue;
      if (c + 1 < cols) {
        int right = id_of[static_cast<std::size_t>(r) * cols + c + 1];
        if (right >= 0) g.add_edge(here, right);
      }
      if (r + 1 < lattice.rows()) {
        int below = id_of[static_cast<std::size_t>(r + 1) * cols + c];
        if (below >= 0) g.add_edge(here, below);
      }
    }
  }
  return g;
}

char letter_char(PauliLetter p) {
  switch (p) {
    case PauliLetter::I:
      return 'I';
    case PauliLetter::X:
      return 'X';
    case PauliLetter::Y:
      return 'Y';
    case PauliLetter::Z:
      return 'Z';
  }
  return '?';
}

PauliString PauliString::parse(const std::string& text) {
  std::string_view body = text;
  int phase = 0;
  if (body.substr(0, 2) == "-i") {
    phase = 3;
    body.remove_prefix(2);
  } else if (body.substr(0, 1) == "i") {
    phase = 1;
    body.remove_prefix(1);
  } else if (body.substr(0, 1) == "-") {
    phase = 2;
    body.remove_prefix(1);
  } else if (body.substr(0, 1) == "+") {
    body.remove_prefix(1);
  }
  PauliString p(static_cast<int>(body.size()));
  p.phase_ = phase;
  for (std::size_t q = 0; q < body.size(); ++q) {
    switch (body[q]) {
      case 'I':
        break;
      case 'X':
        p.set(static_cast<int>(q), PauliLetter::X);
        break;
      case 'Y':
        p.set(static_cast<int>(q), PauliLetter::Y);
        break;
      case 'Z':
        p.set(static_cast<int>(q), PauliLetter::Z);
        break;
      default:
        throw std::invalid_argument("bad Pauli letter in '" + text + "'");
    }
  }
  return p;
}

PauliLetter PauliString::at(int q) const {
  auto it = std::lower_bound(support_.begin(), support_.end(), q,
                             [](const auto& e, int k) { return e.first < k; });
  if (it == support_.end() || it->first != q) return PauliLetter::I;
  return it->second;
}

void PauliString::set(int q, PauliLetter p) {
  if (q < 0 || q >= n_) throw std::out_of_range("Pauli position out of range");
  auto it = std::lower_bound(support_.begin(), support_.end(), q,
                             [](const auto& e, int k) { return e.first < k; });
  bool present = it != support_.end() && it->first == q;
  if (p == PauliLetter::I) {
    if (present) support_.erase(it);
  } else if (present) {
    it->second = p;
  } else {
    support_.insert(it, {q, p});
  }
}

std::string PauliString::to_string() const {
  static constexpr const char* kPhase[] = {"", "i", "-", "-i"};
  std::string out = kPhase[phase_];
  out.append(static_cast<std::size_t>(n_), 'I');
  std::size_t offset = out.size() - static_cast<std::size_t>(n_);
  for (const auto& [q, p] : support_) out[offset + q] = letter_char(p);
  return out;
}

bool commutes(const PauliString& a, const PauliString& b) {
  bool anti = false;
  auto ia = a.support().begin();
  auto ib = b.support().begin();
  while (ia != a.support().end() && ib != b.support().end()) {
    if (ia->first < ib->first) {
      ++ia;
    } else if (ib->first < ia->first) {
      ++ib;
    } else {
      if (ia->second != ib->second) anti = !anti;
      ++ia;
      ++ib;
    }
  }
  return !anti;
}

std::vector<PauliString> stabilizer_generators(const GraphState& g) {
  std::vector<PauliString> out;
  out.reserve(static_cast<std::size_t>(g.n()));
  for (int v = 0; v < g.n(); ++v) {
    PauliString k(g.n());
    k.set(v, PauliLetter::X);
    for (int w : g.neighbours(v)) k.set(w, PauliLetter::Z);
    out.push_back(std::move(k));
  }
  return out;
}

namespace {

using SparseRow = std::vector<int>;

SparseRow symplectic_row(const PauliString& p) {
  SparseRow xs;
  SparseRow zs;
  for (const auto& [q, letter] : p.support()) {
    auto bits = static_cast<std::uint8_t>(letter);
    if (bits & 1) xs.push_back(q);
    if (bits & 2) zs.push_back(p.n() + q);
  }
  xs.insert(xs.end(), zs.begin(), zs.end());
  return xs;
}

SparseRow xor_rows(const SparseRow& a, const SparseRow& b) {
  SparseRow out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                std::back_inserter(out));
  return out;
}

}  // namespace

std::size_t symplectic_rank(const std::vector<PauliString>& generators) {
  std::map<int, SparseRow> pivots;  // leading column -> reduced row
  for (const PauliString& p : generators) {
    SparseRow row = symplectic_row(p);
    while (!row.empty()) {
      auto it = pivots.find(row.front());
      if (it == pivots.end()) {
        int lead = row.front();
        pivots.emplace(lead, std::move(row));
        break;
      }
      row = xor_rows(row, it->second);
    }
  }
  return pivots.size();
}

GeneratorCheck check_generators(const std::vector<PauliString>& generators) {
  GeneratorCheck result;
  std::map<int, std::vector<std::size_t>> touching;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    for (const auto& [q, letter] : generators[i].support()) touching[q].push_back(i);
  }
  std::vector<std::size_t> seen_by(generators.size(), generators.size());
  for (std::size_t i = 0; i < generators.size(); ++i) {
    for (const auto& [q, letter] : generators[i].support()) {
      for (std::size_t j : touching[q]) {
        if (j <= i || seen_by[j] == i) continue;
        seen_by[j] = i;
        if (!commutes(generators[i], generators[j])) ++result.anticommuting_pairs;
      }
    }
  }
  result.commuting = result.anticommuting_pairs == 0;
  result.rank = symplectic_rank(generators);
  return result;
}

std::string edge_list_text(const GraphState& g) {
  std::ostringstream out;
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

std::string graph_to_dot(const GraphState& g) {
  std::ostringstream out;
  out << "graph G {\n  node [shape=circle, label=\"\", width=0.25];\n";
  for (const Vertex& v : g.vertices()) {
    out << "  v" << v.id << " [pos=\"" << v.col << ',' << -v.row << "!\", tooltip=\""
        << v.label.to_string() << "\"];\n";
  }
  for (const auto& [u, v] : g.edges()) out << "  v" << u << " -- v" << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace etch
