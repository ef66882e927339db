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

#include "etch/metrics.h"

#include <cmath>
#include <numeric>
#include <sstream>

namespace etch {

namespace {

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char ch : text) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

Rational Rational::of(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(num, den);
  Rational r;
  r.num_ = num / g;
  r.den_ = den / g;
  return r;
}

std::strong_ordering Rational::operator<=>(const Rational& other) const {
  // Cross-multiplication in 128 bits cannot overflow for 64-bit operands.
  __int128 lhs = static_cast<__int128>(num_) * other.den_;
  __int128 rhs = static_cast<__int128>(other.num_) * den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  // Round half away from zero to one decimal place.
  __int128 scaled = static_cast<__int128>(num_) * 10;
  __int128 mag = scaled < 0 ? -scaled : scaled;
  __int128 tenths = (2 * mag + den_) / (2 * den_);
  auto whole = static_cast<std::int64_t>(tenths / 10);
  auto frac = static_cast<int>(tenths % 10);
  std::string out = (num_ < 0 ? "-" : "") + std::to_string(whole);
  if (frac != 0) out += "." + std::to_string(frac);
  return out;
}

Ratio make_ratio(std::int64_t pauli, std::int64_t non_pauli) {
  if (non_pauli == 0) return std::nullopt;
  return Rational::of(pauli, non_pauli);
}

MetricsRow metrics_row(const Circuit& circuit, const Lattice& lattice,
                       const PatternCatalogue& catalogue) {
  MetricsRow row;
  row.circuit_id = circuit.id;
  row.specification = specification(lattice);
  row.lattice = static_cast<std::int64_t>(lattice.rows()) * lattice.cols();
  for (const Gate& g : circuit.gates) {
    for (const Pattern& p : catalogue.pattern_for(g)) {
      switch (p.column) {
        case PatternColumn::Clifford4:
          ++row.clifford4;
          break;
        case PatternColumn::Cnot:
          ++row.cnot;
          break;
        case PatternColumn::ArbitraryZRotation4:
          ++row.zrot4;
          break;
        case PatternColumn::T4:
          ++row.t4;
          break;
      }
    }
  }
  row.excised = static_cast<std::int64_t>(excision_count(lattice));
  row.graph_state = row.lattice - row.excised;
  row.pauli = row.graph_state - row.non_pauli();
  row.ratio = make_ratio(row.pauli, row.non_pauli());
  return row;
}

bool meets_target(const Ratio& ratio, const Rational& tolerance) {
  if (!ratio) throw UndefinedRatio();
  return *ratio <= tolerance;
}

double tfactory_error(double p, int level) {
  if (level != 1 && level != 2) throw InvalidLevel(level);
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("physical error rate must lie in [0, 1]");
  }
  double once = 35.0 * p * p * p;
  if (level == 1) return once;
  return 35.0 * once * once * once;
}

TFactoryModel tfactory_model(TFactoryProtocol protocol) {
  switch (protocol) {
    case TFactoryProtocol::FifteenToOne:
      return {protocol, 15, std::nullopt};
    case TFactoryProtocol::Concatenated176:
      return {protocol, 176, std::array<int, 2>{11, 21}};
    case TFactoryProtocol::Concatenated225:
      return {protocol, 225, std::array<int, 2>{15, 15}};
  }
  throw std::invalid_argument("unknown T-factory protocol");
}

int tfactory_footprint(const TFactoryModel& model) {
  return tfactory_model(model.protocol).tiles;
}

MetricsRow whatif_substitute_cz(const MetricsRow& row) {
  MetricsRow out = row;
  out.pauli -= kCzSaving * row.cnot;
  out.graph_state -= kCzSaving * row.cnot;
  out.ratio = make_ratio(out.pauli, out.non_pauli());
  return out;
}

Rational whatif_halve_pauli(const MetricsRow& row) {
  if (row.non_pauli() == 0) throw UndefinedRatio();
  return Rational::of(row.pauli / 2, row.non_pauli());
}

std::string format_ratio(const Ratio& ratio) {
  return ratio ? ratio->to_string() : "—";
}

std::string format_ratio_human(const Ratio& ratio) {
  return ratio ? ratio->to_string() + " : 1" : "—";
}

const char* const kMetricsCsvHeader =
    "circuit id,specification,lattice,Clifford_4,CNOT_6-1-6,arbitrary Z-rotation_4,"
    "T_4/Tdg_4,excised Z-measurements,graph state,Pauli,Pauli:non-Pauli";

std::string metrics_csv_line(const MetricsRow& row) {
  std::ostringstream out;
  out << csv_field(row.circuit_id) << ",\"[" << row.specification[0] << ", "
      << row.specification[1] << "]\"," << row.lattice << ',' << row.clifford4 << ','
      << row.cnot << ',' << row.zrot4 << ',' << row.t4 << ',' << row.excised << ','
      << row.graph_state << ',' << row.pauli << ',' << format_ratio(row.ratio);
  return out.str();
}

std::string metrics_csv(const std::vector<MetricsRow>& rows) {
  std::string out = std::string(kMetricsCsvHeader) + "\n";
  for (const auto& r : rows) out += metrics_csv_line(r) + "\n";
  return out;
}

}  // namespace etch
