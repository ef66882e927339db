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
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "etch/circuit.h"
#include "etch/lattice.h"
#include "etch/pattern.h"

namespace etch {

// Exact fraction with den > 0, always reduced.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value) : num_(value) {}  // NOLINT: implicit by design
  static Rational of(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  bool is_integer() const { return den_ == 1; }

  // Integer part followed by one rounded decimal when fractional ("12.5").
  std::string to_string() const;

  bool operator==(const Rational&) const = default;
  std::strong_ordering operator<=>(const Rational& other) const;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

// Empty when the denominator (non-Pauli count) is zero.
using Ratio = std::optional<Rational>;

class UndefinedRatio : public std::domain_error {
 public:
  UndefinedRatio() : std::domain_error("UndefinedRatio: no non-Pauli qubits") {}
};

struct MetricsRow {
  std::string circuit_id;
  std::array<int, 2> specification{0, 0};
  std::int64_t lattice = 0;
  std::int64_t clifford4 = 0;
  std::int64_t cnot = 0;
  std::int64_t zrot4 = 0;
  std::int64_t t4 = 0;
  std::int64_t excised = 0;
  std::int64_t graph_state = 0;
  std::int64_t pauli = 0;
  Ratio ratio;

  std::int64_t non_pauli() const { return zrot4 + t4; }
  bool operator==(const MetricsRow&) const = default;
};

Ratio make_ratio(std::int64_t pauli, std::int64_t non_pauli);

// Pattern counts come from the catalogue classification of each gate; the
// cell counts come from the lattice.
MetricsRow metrics_row(const Circuit& circuit, const Lattice& lattice,
                       const PatternCatalogue& catalogue = PatternCatalogue::standard());

inline const Rational kDefaultTolerance{25};
inline const Rational kDistillationTarget{11};

// ratio <= tolerance. Throws UndefinedRatio for an undefined ratio.
bool meets_target(const Ratio& ratio, const Rational& tolerance = kDefaultTolerance);

class InvalidLevel : public std::invalid_argument {
 public:
  explicit InvalidLevel(int level)
      : std::invalid_argument("InvalidLevel: distillation level must be 1 or 2, got " +
                              std::to_string(level)) {}
};

// 15-to-1 distillation output error to leading order: 35p^3 for one level,
// 35(35p^3)^3 for two concatenated levels.
double tfactory_error(double p, int level);

enum class TFactoryProtocol { FifteenToOne, Concatenated176, Concatenated225 };

struct TFactoryModel {
  TFactoryProtocol protocol = TFactoryProtocol::FifteenToOne;
  int tiles = 15;
  std::optional<std::array<int, 2>> block_dims;
};

TFactoryModel tfactory_model(TFactoryProtocol protocol);
int tfactory_footprint(const TFactoryModel& model);

// Qubits saved per CNOT by counting an 8-qubit CZ pattern instead of the
// 13-qubit CNOT pattern.
inline constexpr int kCzSaving = kCnotQubits - kCzQubits;

// Counting-only substitution: pauli and graph_state drop by 5 per CNOT.
MetricsRow whatif_substitute_cz(const MetricsRow& row);
// floor(pauli / 2) / non_pauli. Throws UndefinedRatio when non_pauli is 0.
Rational whatif_halve_pauli(const MetricsRow& row);

// "—" for undefined, otherwise Rational::to_string().
std::string format_ratio(const Ratio& ratio);
// "362.8 : 1" or "—".
std::string format_ratio_human(const Ratio& ratio);

extern const char* const kMetricsCsvHeader;
std::string metrics_csv_line(const MetricsRow& row);
std::string metrics_csv(const std::vector<MetricsRow>& rows);

}  // namespace etch
