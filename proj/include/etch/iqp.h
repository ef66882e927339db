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

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "etch/circuit.h"
#include "etch/metrics.h"

namespace etch {

// Relative weights of the gate kinds drawn for the diagonal layers.
using GateMix = std::map<GateKind, double>;

// Calibrated so a default batch lands near the published mean graph-state
// size; see README for the calibration run.
inline constexpr double kDefaultDepthFactor = 60.0;

GateMix default_gate_mix();

struct IqpSpec {
  std::uint64_t seed = 1;
  int n_min = 5;
  int n_max = 120;
  double depth_factor = kDefaultDepthFactor;
  GateMix gate_mix = default_gate_mix();

  bool operator==(const IqpSpec&) const = default;
};

struct IqpViolation {
  enum class Kind {
    RangeOutOfBounds,
    EmptyRange,
    NonPositiveDepth,
    NegativeWeight,
    UnsupportedKind,
    MissingNonClifford,
    MissingCnot,
    CnotNeedsTwoWires,
  };
  Kind kind;
  std::string message;
};

std::vector<IqpViolation> validate(const IqpSpec& spec);

class InvalidIqpSpec : public std::invalid_argument {
 public:
  explicit InvalidIqpSpec(const std::vector<IqpViolation>& violations);
};

// n uniform in [n_min, n_max]; an H column; round(depth_factor * n) one-gate
// layers; an H column. The first layers place one gate of each positively
// weighted kind, the rest are drawn by weight. CNOTs join a random adjacent
// pair in a random orientation and rz takes a random non-Clifford angle.
// Throws InvalidIqpSpec.
Circuit generate_iqp(const IqpSpec& spec);

struct BatchRow {
  std::uint64_t seed = 0;
  MetricsRow row;
  std::optional<std::string> error;  // set when this circuit failed
};

// generate -> validate -> layout -> metrics for each spec. Failures become
// row-level errors. Output order follows input order for any thread count.
std::vector<BatchRow> run_batch(const std::vector<IqpSpec>& specs, unsigned threads = 1);

std::string batch_csv(const std::vector<BatchRow>& rows);

struct SummaryStats {
  std::size_t count = 0;
  double mean_graph_state = 0.0;
  double mean_pauli = 0.0;
  double mean_ratio = 0.0;
  double sd_ratio = 0.0;
  double target_probability = 0.0;
};

class InsufficientData : public std::domain_error {
 public:
  explicit InsufficientData(std::size_t count)
      : std::domain_error("InsufficientData: need at least 2 rows with a defined ratio, got " +
                          std::to_string(count)) {}
};

// Statistics over the rows whose ratio is defined (error rows are skipped).
// sd uses the n-1 divisor; target_probability is the normal density at the
// 11:1 target. Throws InsufficientData below two such rows.
SummaryStats summarize(const std::vector<MetricsRow>& rows);
SummaryStats summarize(const std::vector<BatchRow>& rows);

// Normal density at x. The published 4.63E-04 is this density at 11 for
// mean 362.8 and sd 209.0, not a tail probability.
double probability_of_ratio(double x, double mean, double sd);

std::string summary_text(const SummaryStats& stats);

// Manifest: JSON array of {seed, n_min, n_max, depth_factor, gate_mix}, or an
// object with a "specs" array. Omitted fields take the defaults above.
std::vector<IqpSpec> manifest_from_json(const std::string& text);
std::string manifest_to_json(const std::vector<IqpSpec>& specs);
// Seeds first_seed .. first_seed + count - 1 with shared settings.
std::vector<IqpSpec> default_manifest(int count, std::uint64_t first_seed = 1,
                                      const IqpSpec& base = {});

}  // namespace etch
