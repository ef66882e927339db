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

#include "etch/oracle.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

#include "etch/rng.h"
#include "json.hpp"

namespace etch {

namespace {

constexpr double kStabilizerTolerance = 1e-10;
const double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

void check_size(int qubits, int limit) {
  if (qubits > limit) throw TooLarge(qubits, limit);
}

// Inserts a zero bit at position q of index j.
inline std::size_t insert_zero(std::size_t j, int q) {
  std::size_t low = j & ((std::size_t{1} << q) - 1);
  return ((j >> q) << (q + 1)) | low;
}

}  // namespace

StateVector::StateVector(int n) : n_(n) {
  check_size(n, kMaxDenseQubits);
  amps_.assign(std::size_t{1} << n, Amplitude{0.0, 0.0});
  amps_[0] = 1.0;
}

StateVector StateVector::plus(int n) {
  StateVector s(n);
  double a = 1.0 / std::sqrt(static_cast<double>(s.amps_.size()));
  std::fill(s.amps_.begin(), s.amps_.end(), Amplitude{a, 0.0});
  return s;
}

StateVector StateVector::random(int n, std::uint64_t seed) {
  StateVector s(n);
  Rng rng(seed);
  for (auto& a : s.amps_) {
    double re = standard_normal(rng);
    double im = standard_normal(rng);
    a = {re, im};
  }
  s.normalize();
  return s;
}

StateVector StateVector::from_amplitudes(std::vector<Amplitude> amplitudes) {
  int n = std::countr_zero(amplitudes.size());
  if (amplitudes.empty() || (std::size_t{1} << n) != amplitudes.size()) {
    throw std::invalid_argument("amplitude count must be a power of two");
  }
  StateVector s(0);
  s.n_ = n;
  check_size(n, kMaxDenseQubits);
  s.amps_ = std::move(amplitudes);
  return s;
}

void StateVector::apply_1q(int q, const Matrix2& m) {
  const std::size_t half = amps_.size() / 2;
  for (std::size_t j = 0; j < half; ++j) {
    std::size_t i0 = insert_zero(j, q);
    std::size_t i1 = i0 | (std::size_t{1} << q);
    Amplitude a0 = amps_[i0];
    Amplitude a1 = amps_[i1];
    amps_[i0] = m[0] * a0 + m[1] * a1;
    amps_[i1] = m[2] * a0 + m[3] * a1;
  }
}

void StateVector::apply_cz(int a, int b) {
  if (a == b) throw std::invalid_argument("CZ needs two distinct qubits");
  const int lo = std::min(a, b);
  const int hi = std::max(a, b);
  const std::size_t mask = (std::size_t{1} << a) | (std::size_t{1} << b);
  // Visit only the quarter of indices with both bits set.
  const std::size_t quarter = amps_.size() / 4;
  for (std::size_t j = 0; j < quarter; ++j) {
    std::size_t i = insert_zero(insert_zero(j, lo), hi) | mask;
    amps_[i] = -amps_[i];
  }
}

void StateVector::apply_cnot(int control, int target) {
  const std::size_t c = std::size_t{1} << control;
  const std::size_t t = std::size_t{1} << target;
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if ((i & c) && !(i & t)) std::swap(amps_[i], amps_[i | t]);
  }
}

void StateVector::apply_pauli(const PauliString& p) {
  if (p.n() != n_) throw std::invalid_argument("Pauli length does not match state");
  std::size_t xmask = 0;
  std::size_t zmask = 0;
  int ys = 0;
  for (const auto& [q, letter] : p.support()) {
    auto bits = static_cast<unsigned>(letter);
    if (bits & 1) xmask |= std::size_t{1} << q;
    if (bits & 2) zmask |= std::size_t{1} << q;
    if (letter == PauliLetter::Y) ++ys;
  }
  static const Amplitude kPowers[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const Amplitude phase = kPowers[(p.phase() + ys) % 4];
  // P = phase * X^x Z^z, since Y = iXZ.
  std::vector<Amplitude> out(amps_.size());
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    double sign = (std::popcount(i & zmask) & 1) ? -1.0 : 1.0;
    out[i ^ xmask] = phase * sign * amps_[i];
  }
  amps_ = std::move(out);
}

int StateVector::add_plus_qubit() {
  check_size(n_ + 1, kMaxDenseQubits);
  const std::size_t old = amps_.size();
  amps_.resize(old * 2);
  for (std::size_t i = 0; i < old; ++i) {
    amps_[i] *= kInvSqrt2;
    amps_[i + old] = amps_[i];
  }
  return n_++;
}

double StateVector::project_out(int q, Amplitude c0, Amplitude c1) {
  const std::size_t half = amps_.size() / 2;
  std::vector<Amplitude> out(half);
  double weight = 0.0;
  for (std::size_t j = 0; j < half; ++j) {
    std::size_t i0 = insert_zero(j, q);
    out[j] = c0 * amps_[i0] + c1 * amps_[i0 | (std::size_t{1} << q)];
    weight += std::norm(out[j]);
  }
  amps_ = std::move(out);
  --n_;
  return weight;
}

double StateVector::norm() const {
  double s = 0.0;
  for (const auto& a : amps_) s += std::norm(a);
  return std::sqrt(s);
}

void StateVector::normalize() {
  double nrm = norm();
  if (nrm == 0.0) throw std::domain_error("cannot normalise a zero vector");
  for (auto& a : amps_) a /= nrm;
}

Amplitude inner(const StateVector& a, const StateVector& b) {
  if (a.n() != b.n()) throw std::invalid_argument("state sizes differ");
  Amplitude s = 0.0;
  for (std::size_t i = 0; i < a.amplitudes().size(); ++i) {
    s += std::conj(a[i]) * b[i];
  }
  return s;
}

double fidelity(const StateVector& a, const StateVector& b) {
  return std::norm(inner(a, b));
}

Matrix2 gate_matrix(GateKind kind, double angle) {
  using std::exp;
  const Amplitude i{0.0, 1.0};
  const double h = kInvSqrt2;
  const double c = std::cos(angle / 2);
  const double s = std::sin(angle / 2);
  switch (kind) {
    case GateKind::H:
      return {h, h, h, -h};
    case GateKind::S:
      return {1.0, 0.0, 0.0, i};
    case GateKind::Sdg:
      return {1.0, 0.0, 0.0, -i};
    case GateKind::T:
      return {1.0, 0.0, 0.0, exp(i * (std::numbers::pi / 4))};
    case GateKind::Tdg:
      return {1.0, 0.0, 0.0, exp(-i * (std::numbers::pi / 4))};
    case GateKind::Rx:
      return {c, -i * s, -i * s, c};
    case GateKind::Ry:
      return {c, -s, s, c};
    case GateKind::Rz:
      return {exp(-i * (angle / 2)), 0.0, 0.0, exp(i * (angle / 2))};
    case GateKind::URot:
    case GateKind::CNOT:
      break;
  }
  throw std::invalid_argument("gate has no single 2x2 matrix");
}

StateVector prepare_input(int n_wires, InputPreparation prep) {
  switch (prep) {
    case InputPreparation::Zero:
      return StateVector(n_wires);
    case InputPreparation::Plus:
      return StateVector::plus(n_wires);
    case InputPreparation::Custom:
      break;
  }
  throw std::invalid_argument("a custom input needs an explicit state");
}

StateVector simulate_circuit(const Circuit& circuit, const StateVector& input) {
  check_size(circuit.n_wires, kMaxCircuitWires);
  if (input.n() != circuit.n_wires) {
    throw std::invalid_argument("input state does not match the circuit width");
  }
  StateVector state = input;
  for (const Gate& g : circuit.gates) {
    switch (g.kind) {
      case GateKind::CNOT:
        state.apply_cnot(*g.control, g.target);
        break;
      case GateKind::URot:
        state.apply_1q(g.target, gate_matrix(GateKind::Rz, g.angles.at(2).radians()));
        state.apply_1q(g.target, gate_matrix(GateKind::Rx, g.angles.at(1).radians()));
        state.apply_1q(g.target, gate_matrix(GateKind::Rz, g.angles.at(0).radians()));
        break;
      default:
        state.apply_1q(g.target,
                       gate_matrix(g.kind, g.angles.empty() ? 0.0 : g.angles[0].radians()));
    }
  }
  return state;
}

StateVector simulate_circuit(const Circuit& circuit, InputPreparation prep) {
  check_size(circuit.n_wires, kMaxCircuitWires);
  return simulate_circuit(circuit, prepare_input(circuit.n_wires, prep));
}

StateVector graph_state_vector(const GraphState& g) {
  check_size(g.n(), kMaxDenseQubits);
  StateVector s = StateVector::plus(g.n());
  for (const auto& [u, v] : g.edges()) s.apply_cz(u, v);
  return s;
}

StabilizerReport verify_stabilizers_dense(const StateVector& state,
                                          const std::vector<PauliString>& generators) {
  StabilizerReport report;
  static const Amplitude kPowers[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const auto& amps = state.amplitudes();
  for (const PauliString& k : generators) {
    if (k.n() != state.n()) throw std::invalid_argument("Pauli length does not match state");
    std::size_t xmask = 0;
    std::size_t zmask = 0;
    int ys = 0;
    for (const auto& [q, letter] : k.support()) {
      auto bits = static_cast<unsigned>(letter);
      if (bits & 1) xmask |= std::size_t{1} << q;
      if (bits & 2) zmask |= std::size_t{1} << q;
      if (letter == PauliLetter::Y) ++ys;
    }
    const Amplitude phase = kPowers[(k.phase() + ys) % 4];
    // (K psi)[i ^ x] = phase * (-1)^{|i & z|} psi[i]
    for (std::size_t i = 0; i < amps.size(); ++i) {
      double sign = (std::popcount(i & zmask) & 1) ? -1.0 : 1.0;
      double d = std::abs(phase * sign * amps[i] - amps[i ^ xmask]);
      if (d > report.worst_deviation) report.worst_deviation = d;
    }
  }
  report.pass = report.worst_deviation <= kStabilizerTolerance;
  return report;
}

bool verify_stabilizers_symplectic(const std::vector<PauliString>& generators) {
  GeneratorCheck check = check_generators(generators);
  return check.commuting && check.independent(generators.size());
}

bool verify_stabilizers(const GraphState& g, StabilizerPath path) {
  auto gens = stabilizer_generators(g);
  if (path == StabilizerPath::Dense) {
    return verify_stabilizers_dense(graph_state_vector(g), gens).pass;
  }
  return verify_stabilizers_symplectic(gens);
}

std::vector<int> measurement_order(const GraphState& g) {
  std::vector<int> order;
  for (const Vertex& v : g.vertices()) {
    if (v.role != CellRole::Readout) order.push_back(v.id);
  }
  auto key = [&](int id) {
    const Vertex& v = g.vertices()[id];
    int middle_first = v.role == CellRole::CnotMiddle ? 0 : 1;
    return std::make_tuple(v.col, middle_first, v.row);
  };
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return key(a) < key(b); });
  return order;
}

namespace {

// The lazily built register: which vertex each live qubit holds.
class LiveRegister {
 public:
  LiveRegister(const GraphState& g, StateVector state, std::vector<int> inputs)
      : g_(g), state_(std::move(state)), slot_of_(g.n(), -1), vertex_of_(std::move(inputs)) {
    for (std::size_t s = 0; s < vertex_of_.size(); ++s) slot_of_[vertex_of_[s]] = static_cast<int>(s);
    peak_ = state_.n();
    // Edges among the input cells are entangled up front.
    for (std::size_t a = 0; a < vertex_of_.size(); ++a) {
      for (std::size_t b = a + 1; b < vertex_of_.size(); ++b) {
        if (g_.has_edge(vertex_of_[a], vertex_of_[b])) {
          state_.apply_cz(static_cast<int>(a), static_cast<int>(b));
        }
      }
    }
    added_.assign(g.n(), false);
    for (int v : vertex_of_) added_[v] = true;
  }

  void ensure(int v) {
    if (added_[v]) return;
    int slot = state_.add_plus_qubit();
    vertex_of_.push_back(v);
    slot_of_[v] = slot;
    added_[v] = true;
    for (int w : g_.neighbours(v)) {
      if (slot_of_[w] >= 0) state_.apply_cz(slot, slot_of_[w]);
    }
    peak_ = std::max(peak_, state_.n());
  }

  // Projects v onto <0| + sign e^{-i angle} <1| (unnormalised, scaled by
  // 1/sqrt2) and returns the branch weight relative to the prior state.
  double measure(int v, double angle, int outcome) {
    int slot = slot_of_[v];
    Amplitude c1 = std::polar(kInvSqrt2, -angle) * (outcome ? -1.0 : 1.0);
    double weight = state_.project_out(slot, kInvSqrt2, c1);
    vertex_of_.erase(vertex_of_.begin() + slot);
    slot_of_[v] = -1;
    for (std::size_t s = slot; s < vertex_of_.size(); ++s) slot_of_[vertex_of_[s]] = static_cast<int>(s);
    if (weight > 0.0) state_.normalize();
    return weight;
  }

  // Born probability of outcome 0 without changing the state.
  double probability_zero(int v, double angle) {
    StateVector copy = state_;
    return copy.project_out(slot_of_[v], kInvSqrt2, std::polar(kInvSqrt2, -angle));
  }

  StateVector& state() { return state_; }
  int slot(int v) const { return slot_of_[v]; }
  int peak() const { return peak_; }

 private:
  const GraphState& g_;
  StateVector state_;
  std::vector<int> slot_of_;
  std::vector<int> vertex_of_;
  std::vector<bool> added_;
  int peak_ = 0;
};

}  // namespace

MbqcResult simulate_mbqc(const Lattice& lattice, const StateVector& input,
                         const OutcomeSource& source) {
  const GraphState g = build_graph_state(lattice);
  const std::vector<int> wire_rows = lattice.wire_rows();
  const int n_wires = static_cast<int>(wire_rows.size());
  if (input.n() != n_wires) throw std::invalid_argument("input state does not match the lattice");

  std::vector<int> inputs;
  std::vector<int> readouts;
  for (int r : wire_rows) {
    inputs.push_back(g.vertex_at(r, 0));
    readouts.push_back(g.vertex_at(r, lattice.readout_col()));
  }

  MbqcResult result;
  MbqcRun& run = result.run;
  run.order = measurement_order(g);
  LiveRegister reg(g, input, inputs);
  std::vector<std::uint8_t> x(g.n(), 0);
  std::vector<std::uint8_t> z(g.n(), 0);
  Rng rng(source.seed);

  for (std::size_t k = 0; k < run.order.size(); ++k) {
    const int v = run.order[k];
    const Vertex& vert = g.vertices()[v];
    if (!vert.label.in_xy_plane()) {
      throw std::invalid_argument("measured cell " + std::to_string(vert.row) + "," +
                                  std::to_string(vert.col) + " has no XY-plane label");
    }
    reg.ensure(v);
    for (int w : g.neighbours(v)) reg.ensure(w);

    const double beta = vert.label.angle().radians();
    const double angle = x[v] ? -beta : beta;
    int outcome = 0;
    if (source.mode == OutcomeSource::Mode::Forced) {
      outcome = k < source.forced.size() ? (source.forced[k] & 1) : 0;
    } else {
      double p0 = reg.probability_zero(v, angle);
      outcome = uniform_unit(rng) < p0 ? 0 : 1;
    }
    run.branch_probability *= reg.measure(v, angle, outcome);
    run.outcomes.push_back(static_cast<std::uint8_t>(outcome));

    if ((outcome ^ z[v]) == 0) continue;
    if (vert.byproduct == Byproduct::Self) {
      for (int w : g.neighbours(v)) z[w] ^= 1;
    } else {
      const int next = g.vertex_at(vert.row, vert.col + 1);
      if (next < 0) throw std::logic_error("flow byproduct without a right-hand neighbour");
      x[next] ^= 1;
      for (int w : g.neighbours(next)) {
        if (w != v) z[w] ^= 1;
      }
    }
  }

  // Readout register: apply X then Z corrections, then order by wire.
  StateVector& live = reg.state();
  for (int w = 0; w < n_wires; ++w) {
    int v = readouts[w];
    reg.ensure(v);
    int s = reg.slot(v);
    if (x[v]) live.apply_1q(s, {0.0, 1.0, 1.0, 0.0});
    if (z[v]) live.apply_1q(s, {1.0, 0.0, 0.0, -1.0});
    run.readout_x.push_back(x[v]);
    run.readout_z.push_back(z[v]);
  }
  std::vector<Amplitude> ordered(std::size_t{1} << n_wires);
  for (std::size_t i = 0; i < live.amplitudes().size(); ++i) {
    std::size_t j = 0;
    for (int w = 0; w < n_wires; ++w) {
      if (i >> reg.slot(readouts[w]) & 1) j |= std::size_t{1} << w;
    }
    ordered[j] = live[i];
  }
  result.readout = StateVector::from_amplitudes(std::move(ordered));
  run.peak_live_qubits = reg.peak();
  return result;
}

namespace {

int measured_count(const Lattice& lattice) {
  int count = 0;
  for (const auto& c : lattice.cells()) {
    if (c.occupied() && c.role != CellRole::Readout) ++count;
  }
  return count;
}

// Calls visit(source) for every exhaustive or sampled history.
template <typename Visit>
std::size_t for_each_history(int measured, const EquivalenceOptions& options, bool& exhaustive,
                             Visit visit) {
  exhaustive = measured <= options.exhaustive_limit;
  if (exhaustive) {
    const std::uint64_t total = std::uint64_t{1} << measured;
    for (std::uint64_t h = 0; h < total; ++h) {
      std::vector<std::uint8_t> bits(measured);
      for (int k = 0; k < measured; ++k) bits[k] = (h >> k) & 1;
      visit(OutcomeSource::forced_bits(std::move(bits)));
    }
    return total;
  }
  Rng rng(options.seed);
  for (int h = 0; h < options.sampled_histories; ++h) {
    std::vector<std::uint8_t> bits(measured);
    for (auto& b : bits) b = static_cast<std::uint8_t>(rng() >> 63);
    visit(OutcomeSource::forced_bits(std::move(bits)));
  }
  return static_cast<std::size_t>(options.sampled_histories);
}

}  // namespace

EquivalenceReport equivalent(const Circuit& circuit, const PatternCatalogue& catalogue,
                             const EquivalenceOptions& options) {
  EquivalenceReport report;
  report.circuit_id = circuit.id;
  if (circuit.gates.empty()) {
    report.supported = false;
    return report;
  }
  const Lattice lattice = layout(circuit, catalogue);
  const StateVector input = StateVector::random(circuit.n_wires, options.seed);
  const StateVector want = simulate_circuit(circuit, input);

  report.histories = for_each_history(
      measured_count(lattice), options, report.exhaustive, [&](const OutcomeSource& src) {
        MbqcResult got = simulate_mbqc(lattice, input, src);
        if (got.run.branch_probability <= 0.0) return;  // impossible branch
        report.worst_fidelity = std::min(report.worst_fidelity, fidelity(got.readout, want));
      });
  report.pass = report.worst_fidelity >= 1.0 - options.tolerance;
  return report;
}

StateVector deterministic_readout(const Lattice& lattice, const StateVector& input,
                                  const EquivalenceOptions& options) {
  std::optional<StateVector> first;
  bool exhaustive = false;
  for_each_history(measured_count(lattice), options, exhaustive, [&](const OutcomeSource& src) {
    MbqcResult got = simulate_mbqc(lattice, input, src);
    if (got.run.branch_probability <= 0.0) return;
    if (!first) {
      first = std::move(got.readout);
      return;
    }
    double f = fidelity(*first, got.readout);
    if (f < 1.0 - options.tolerance) throw NonDeterministicResult(f);
  });
  if (!first) throw std::logic_error("no outcome history had nonzero probability");
  return *first;
}

double excision_fidelity(const Lattice& lattice, std::uint64_t seed) {
  const int rows = lattice.rows();
  const int cols = lattice.cols();
  check_size(rows * cols, kMaxDenseQubits);
  auto idx = [cols](int r, int c) { return r * cols + c; };

  StateVector full = StateVector::plus(rows * cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) full.apply_cz(idx(r, c), idx(r, c + 1));
      if (r + 1 < rows) full.apply_cz(idx(r, c), idx(r + 1, c));
    }
  }

  // Z-measure excised cells from the highest index down so lower slots keep
  // their positions.
  Rng rng(seed);
  std::vector<int> slot(static_cast<std::size_t>(rows * cols));
  for (int i = 0; i < rows * cols; ++i) slot[i] = i;
  for (int i = rows * cols - 1; i >= 0; --i) {
    int r = i / cols;
    int c = i % cols;
    if (lattice.at(r, c).occupied()) continue;
    StateVector trial = full;
    double p0 = trial.project_out(slot[i], 1.0, 0.0);
    int outcome = uniform_unit(rng) < p0 ? 0 : 1;
    full.project_out(slot[i], outcome ? 0.0 : 1.0, outcome ? 1.0 : 0.0);
    full.normalize();
    for (int j = i + 1; j < rows * cols; ++j) --slot[j];
    if (!outcome) continue;
    // Outcome 1 leaves Z on each neighbour; undo it.
    const int dr[] = {-1, 1, 0, 0};
    const int dc[] = {0, 0, -1, 1};
    for (int d = 0; d < 4; ++d) {
      int rr = r + dr[d];
      int cc = c + dc[d];
      if (rr < 0 || rr >= rows || cc < 0 || cc >= cols) continue;
      if (!lattice.at(rr, cc).occupied()) continue;
      full.apply_1q(slot[idx(rr, cc)], {1.0, 0.0, 0.0, -1.0});
    }
  }
  return fidelity(full, graph_state_vector(build_graph_state(lattice)));
}

std::string equivalence_report_json(const std::vector<EquivalenceReport>& reports) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : reports) {
    out.push_back({{"circuit", r.circuit_id},
                   {"pass", r.pass},
                   {"supported", r.supported},
                   {"worst_fidelity", r.worst_fidelity},
                   {"histories", r.histories},
                   {"exhaustive", r.exhaustive}});
  }
  return out.dump(2) + "\n";
}

}  // namespace etch
