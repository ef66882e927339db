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

#include "etch/iqp.h"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <thread>

#include "etch/lattice.h"
#include "etch/rng.h"
#include "json.hpp"

namespace etch {

namespace {

using nlohmann::json;

constexpr int kMaxWires = 10'000;

bool drawable(GateKind kind) {
  switch (kind) {
    case GateKind::H:
    case GateKind::S:
    case GateKind::Sdg:
    case GateKind::Rz:
    case GateKind::T:
    case GateKind::Tdg:
    case GateKind::CNOT:
      return true;
    default:
      return false;
  }
}

double weight_of(const GateMix& mix, GateKind kind) {
  auto it = mix.find(kind);
  return it == mix.end() ? 0.0 : it->second;
}

std::string join_violations(const std::vector<IqpViolation>& violations) {
  std::string out = "invalid IQP spec:";
  for (const auto& v : violations) out += " [" + v.message + "]";
  return out;
}

Angle non_clifford_angle(Rng& rng) {
  for (;;) {
    Angle a = Angle::from_radians(2.0 * std::numbers::pi * uniform_unit(rng));
    if (classify_angle(a) == AngleClass::NonClifford) return a;
  }
}

Gate draw_gate(GateKind kind, int n, Rng& rng) {
  Gate g;
  g.kind = kind;
  if (kind == GateKind::CNOT) {
    int upper = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n - 1)));
    bool downward = (rng() >> 63) != 0;
    g.control = downward ? upper : upper + 1;
    g.target = downward ? upper + 1 : upper;
    return g;
  }
  g.target = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n)));
  if (kind == GateKind::Rz) g.angles.push_back(non_clifford_angle(rng));
  return g;
}

}  // namespace

GateMix default_gate_mix() {
  return {{GateKind::CNOT, 0.45}, {GateKind::S, 0.254}, {GateKind::Sdg, 0.254},
          {GateKind::Rz, 0.014},  {GateKind::T, 0.014}, {GateKind::Tdg, 0.014}};
}

std::vector<IqpViolation> validate(const IqpSpec& spec) {
  using K = IqpViolation::Kind;
  std::vector<IqpViolation> out;
  if (spec.n_min < 1 || spec.n_max > kMaxWires) {
    out.push_back({K::RangeOutOfBounds, "wire range must lie within [1, 10000]"});
  }
  if (spec.n_min > spec.n_max) out.push_back({K::EmptyRange, "n_min exceeds n_max"});
  if (!(spec.depth_factor > 0.0) || !std::isfinite(spec.depth_factor)) {
    out.push_back({K::NonPositiveDepth, "depth_factor must be positive"});
  }
  for (const auto& [kind, w] : spec.gate_mix) {
    if (!drawable(kind)) {
      out.push_back({K::UnsupportedKind,
                     "gate kind '" + std::string(gate_name(kind)) + "' cannot be drawn"});
    }
    if (w < 0.0 || !std::isfinite(w)) {
      out.push_back({K::NegativeWeight,
                     "weight of '" + std::string(gate_name(kind)) + "' must be nonnegative"});
    }
  }
  const GateMix& mix = spec.gate_mix;
  if (weight_of(mix, GateKind::T) <= 0 && weight_of(mix, GateKind::Tdg) <= 0 &&
      weight_of(mix, GateKind::Rz) <= 0) {
    out.push_back({K::MissingNonClifford, "gate_mix needs a positive t, tdg or rz weight"});
  }
  if (weight_of(mix, GateKind::CNOT) <= 0) {
    out.push_back({K::MissingCnot, "gate_mix needs a positive cnot weight"});
  } else if (spec.n_min < 2) {
    out.push_back({K::CnotNeedsTwoWires, "cnot draws need n_min >= 2"});
  }
  return out;
}

InvalidIqpSpec::InvalidIqpSpec(const std::vector<IqpViolation>& violations)
    : std::invalid_argument(join_violations(violations)) {}

Circuit generate_iqp(const IqpSpec& spec) {
  if (auto v = validate(spec); !v.empty()) throw InvalidIqpSpec(v);
  Rng rng(spec.seed);
  const int n = static_cast<int>(uniform_int(rng, spec.n_min, spec.n_max));

  std::vector<GateKind> kinds;
  std::vector<double> cumulative;
  double total = 0.0;
  for (const auto& [kind, w] : spec.gate_mix) {
    if (w <= 0.0) continue;
    kinds.push_back(kind);
    total += w;
    cumulative.push_back(total);
  }

  Circuit c;
  c.id = "iqp-" + std::to_string(spec.seed);
  c.n_wires = n;
  for (int w = 0; w < n; ++w) c.gates.push_back({GateKind::H, w, std::nullopt, {}});
  const auto layers = std::max<std::size_t>(
      kinds.size(), static_cast<std::size_t>(std::llround(spec.depth_factor * n)));
  for (std::size_t layer = 0; layer < layers; ++layer) {
    GateKind kind;
    if (layer < kinds.size()) {
      kind = kinds[layer];
    } else {
      double u = uniform_unit(rng) * total;
      std::size_t k = 0;
      while (k + 1 < kinds.size() && u >= cumulative[k]) ++k;
      kind = kinds[k];
    }
    c.gates.push_back(draw_gate(kind, n, rng));
  }
  for (int w = 0; w < n; ++w) c.gates.push_back({GateKind::H, w, std::nullopt, {}});
  return c;
}

std::vector<BatchRow> run_batch(const std::vector<IqpSpec>& specs, unsigned threads) {
  std::vector<BatchRow> rows(specs.size());
  auto work = [&](std::size_t i) {
    BatchRow& out = rows[i];
    out.seed = specs[i].seed;
    out.row.circuit_id = "iqp-" + std::to_string(specs[i].seed);
    try {
      Circuit c = generate_iqp(specs[i]);
      Lattice l = layout(c);
      out.row = metrics_row(c, l);
    } catch (const std::exception& e) {
      out.error = e.what();
    }
  };
  threads = std::max(1u, threads);
  if (threads == 1 || specs.size() < 2) {
    for (std::size_t i = 0; i < specs.size(); ++i) work(i);
    return rows;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < specs.size(); i = next++) work(i);
    });
  }
  for (auto& th : pool) th.join();
  return rows;
}

std::string batch_csv(const std::vector<BatchRow>& rows) {
  std::string out = std::string(kMetricsCsvHeader) + "\n";
  for (const auto& r : rows) {
    if (r.error) {
      std::string msg = *r.error;
      for (char& ch : msg) {
        if (ch == '"' || ch == '\n') ch = '\'';
      }
      out += r.row.circuit_id + ",\"error: " + msg + "\",,,,,,,,,\n";
    } else {
      out += metrics_csv_line(r.row) + "\n";
    }
  }
  return out;
}

SummaryStats summarize(const std::vector<MetricsRow>& rows) {
  SummaryStats s;
  double sum_ratio = 0.0;
  for (const auto& r : rows) {
    if (!r.ratio) continue;
    ++s.count;
    s.mean_graph_state += static_cast<double>(r.graph_state);
    s.mean_pauli += static_cast<double>(r.pauli);
    sum_ratio += r.ratio->to_double();
  }
  if (s.count < 2) throw InsufficientData(s.count);
  const auto n = static_cast<double>(s.count);
  s.mean_graph_state /= n;
  s.mean_pauli /= n;
  s.mean_ratio = sum_ratio / n;
  double ss = 0.0;
  for (const auto& r : rows) {
    if (!r.ratio) continue;
    double d = r.ratio->to_double() - s.mean_ratio;
    ss += d * d;
  }
  s.sd_ratio = std::sqrt(ss / (n - 1.0));
  s.target_probability =
      s.sd_ratio > 0.0
          ? probability_of_ratio(kDistillationTarget.to_double(), s.mean_ratio, s.sd_ratio)
          : 0.0;
  return s;
}

SummaryStats summarize(const std::vector<BatchRow>& rows) {
  std::vector<MetricsRow> ok;
  for (const auto& r : rows) {
    if (!r.error) ok.push_back(r.row);
  }
  return summarize(ok);
}

double probability_of_ratio(double x, double mean, double sd) {
  if (!(sd > 0.0)) throw std::invalid_argument("sd must be positive");
  const double z = (x - mean) / sd;
  return std::exp(-0.5 * z * z) / (sd * std::sqrt(2.0 * std::numbers::pi));
}

std::string summary_text(const SummaryStats& s) {
  char buf[512];
  std::snprintf(buf, sizeof buf,
                "rows with defined ratio: %zu\n"
                "mean graph state: %.1f\n"
                "mean Pauli: %.1f\n"
                "mean Pauli:non-Pauli: %.1f\n"
                "sd Pauli:non-Pauli: %.1f\n"
                "density at 11:1: %.3E\n",
                s.count, s.mean_graph_state, s.mean_pauli, s.mean_ratio, s.sd_ratio,
                s.target_probability);
  return buf;
}

std::vector<IqpSpec> manifest_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed manifest: ") + e.what());
  }
  const json& list = doc.is_object() ? doc.at("specs") : doc;
  if (!list.is_array()) throw std::invalid_argument("manifest must be a list of specs");
  std::vector<IqpSpec> specs;
  try {
    for (const json& entry : list) {
      IqpSpec s;
      s.seed = entry.value("seed", s.seed);
      s.n_min = entry.value("n_min", s.n_min);
      s.n_max = entry.value("n_max", s.n_max);
      s.depth_factor = entry.value("depth_factor", s.depth_factor);
      if (entry.contains("gate_mix")) {
        s.gate_mix.clear();
        for (const auto& [name, w] : entry["gate_mix"].items()) {
          auto kind = gate_kind_from_name(name);
          if (!kind) throw std::invalid_argument("unknown gate kind '" + name + "' in gate_mix");
          s.gate_mix[*kind] = w.get<double>();
        }
      }
      specs.push_back(std::move(s));
    }
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed manifest entry: ") + e.what());
  }
  return specs;
}

std::string manifest_to_json(const std::vector<IqpSpec>& specs) {
  json out = json::array();
  for (const auto& s : specs) {
    json mix = json::object();
    for (const auto& [kind, w] : s.gate_mix) mix[std::string(gate_name(kind))] = w;
    out.push_back({{"seed", s.seed},
                   {"n_min", s.n_min},
                   {"n_max", s.n_max},
                   {"depth_factor", s.depth_factor},
                   {"gate_mix", mix}});
  }
  return out.dump(2) + "\n";
}

std::vector<IqpSpec> default_manifest(int count, std::uint64_t first_seed, const IqpSpec& base) {
  std::vector<IqpSpec> specs;
  for (int i = 0; i < count; ++i) {
    IqpSpec s = base;
    s.seed = first_seed + static_cast<std::uint64_t>(i);
    specs.push_back(std::move(s));
  }
  return specs;
}

}  // namespace etch
