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
#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "etch/circuit.h"
#include "etch/graph_state.h"
#include "etch/lattice.h"
#include "etch/pattern.h"

namespace etch {

using Amplitude = std::complex<double>;
using Matrix2 = std::array<Amplitude, 4>;  // row-major

// Dense simulation bound, in qubits.
inline constexpr int kMaxDenseQubits = 24;
inline constexpr int kMaxCircuitWires = 12;

class TooLarge : public std::runtime_error {
 public:
  TooLarge(int qubits, int limit)
      : std::runtime_error("TooLarge: " + std::to_string(qubits) + " qubits exceeds the " +
                           std::to_string(limit) + "-qubit oracle bound") {}
};

class NonDeterministicResult : public std::runtime_error {
 public:
  explicit NonDeterministicResult(double fidelity)
      : std::runtime_error("NonDeterministicResult: readout fidelity between outcome "
                           "histories fell to " + std::to_string(fidelity)),
        fidelity_(fidelity) {}
  double fidelity() const { return fidelity_; }

 private:
  double fidelity_;
};

// Qubit k is bit k of the amplitude index.
class StateVector {
 public:
  StateVector() : StateVector(0) {}
  explicit StateVector(int n);  // |0...0>
  static StateVector plus(int n);
  // Gaussian random amplitudes, normalised.
  static StateVector random(int n, std::uint64_t seed);
  static StateVector from_amplitudes(std::vector<Amplitude> amplitudes);

  int n() const { return n_; }
  const std::vector<Amplitude>& amplitudes() const { return amps_; }
  Amplitude operator[](std::size_t i) const { return amps_[i]; }

  void apply_1q(int q, const Matrix2& m);
  void apply_cz(int a, int b);
  void apply_cnot(int control, int target);
  void apply_pauli(const PauliString& p);

  // Appends a new highest qubit in |+>.
  int add_plus_qubit();
  // Projects qubit q onto c0*<0| + c1*<1| and removes it. Returns the
  // squared norm of the result before renormalisation.
  double project_out(int q, Amplitude c0, Amplitude c1);

  double norm() const;
  void normalize();

 private:
  int n_ = 0;
  std::vector<Amplitude> amps_;
};

Amplitude inner(const StateVector& a, const StateVector& b);
// |<a|b>|^2 for normalised states; insensitive to global phase.
double fidelity(const StateVector& a, const StateVector& b);

Matrix2 gate_matrix(GateKind kind, double angle = 0.0);

StateVector prepare_input(int n_wires, InputPreparation prep);

// Standard unitary semantics, gates in program order. Throws TooLarge above
// kMaxCircuitWires wires.
StateVector simulate_circuit(const Circuit& circuit, const StateVector& input);
StateVector simulate_circuit(const Circuit& circuit, InputPreparation prep = InputPreparation::Zero);

// All-|+> register with one CZ per edge.
StateVector graph_state_vector(const GraphState& g);

struct StabilizerReport {
  bool pass = true;
  double worst_deviation = 0.0;  // max |K psi - psi| amplitude
};

// Dense check that each generator fixes the state within 1e-10.
StabilizerReport verify_stabilizers_dense(const StateVector& state,
                                          const std::vector<PauliString>& generators);
// Symbolic check: pairwise commutation and full symplectic rank.
bool verify_stabilizers_symplectic(const std::vector<PauliString>& generators);

enum class StabilizerPath { Dense, Symplectic };
// Dense throws TooLarge above kMaxDenseQubits vertices.
bool verify_stabilizers(const GraphState& g, StabilizerPath path = StabilizerPath::Symplectic);

// Where measurement outcomes come from.
struct OutcomeSource {
  enum class Mode { Forced, Random };
  Mode mode = Mode::Random;
  std::vector<std::uint8_t> forced;  // by measurement order; missing bits are 0
  std::uint64_t seed = 0;

  static OutcomeSource forced_bits(std::vector<std::uint8_t> bits) {
    return {Mode::Forced, std::move(bits), 0};
  }
  static OutcomeSource random(std::uint64_t seed) { return {Mode::Random, {}, seed}; }
};

struct MbqcRun {
  std::vector<int> order;              // vertex ids, measurement order
  std::vector<std::uint8_t> outcomes;  // raw outcomes, parallel to order
  std::vector<std::uint8_t> readout_x;  // per wire byproduct at readout
  std::vector<std::uint8_t> readout_z;
  double branch_probability = 1.0;
  int peak_live_qubits = 0;
};

struct MbqcResult {
  StateVector readout;  // one qubit per wire, byproducts applied
  MbqcRun run;
};

// Measurement order: column by column; within a column CNOT middle cells
// first, then wire rows top to bottom. Readout cells are not measured.
std::vector<int> measurement_order(const GraphState& g);

// Runs the measurement pattern on the lattice's graph state with the given
// logical input. Qubits are brought in lazily, just before a neighbour is
// measured, so only a handful are live at once; TooLarge is raised if more
// than kMaxDenseQubits would be live. Angles adapt to the X frame and
// outcomes are read through the Z frame.
MbqcResult simulate_mbqc(const Lattice& lattice, const StateVector& input,
                         const OutcomeSource& source);

struct EquivalenceOptions {
  std::uint64_t seed = 1;
  int exhaustive_limit = 16;  // measured qubits
  int sampled_histories = 200;
  double tolerance = 1e-9;
};

struct EquivalenceReport {
  bool pass = false;
  bool supported = true;  // false for circuits without gates
  double worst_fidelity = 1.0;
  std::size_t histories = 0;
  bool exhaustive = false;
  std::string circuit_id;
};

// Compares the corrected MBQC readout with the circuit unitary on a seeded
// random input, over every outcome history (up to exhaustive_limit measured
// qubits) or sampled_histories random ones.
EquivalenceReport equivalent(const Circuit& circuit,
                             const PatternCatalogue& catalogue = PatternCatalogue::standard(),
                             const EquivalenceOptions& options = {});

// Corrected readout, checked to be the same for every history tried. Throws
// NonDeterministicResult when two histories disagree beyond tolerance.
StateVector deterministic_readout(const Lattice& lattice, const StateVector& input,
                                  const EquivalenceOptions& options = {});

// Builds the full rows x cols cluster, Z-measures the excised cells with
// seeded outcomes, undoes the Z kicks on their neighbours and returns the
// fidelity with graph_state_vector(build_graph_state(lattice)).
double excision_fidelity(const Lattice& lattice, std::uint64_t seed);

std::string equivalence_report_json(const std::vector<EquivalenceReport>& reports);

}  // namespace etch
