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

#include <cmath>
#include <numbers>
#include <set>

#include "etch/iqp.h"
#include "etch/lattice.h"
#include "etch/rng.h"

namespace etch {
namespace {

IqpSpec small_spec(std::uint64_t seed) {
  IqpSpec s;
  s.seed = seed;
  s.n_min = 2;
  s.n_max = 12;
  s.depth_factor = 3.0;
  return s;
}

TEST(GenerateIqp, DefaultsRespectRangeAndMix) {
  IqpSpec spec;
  spec.seed = 1;
  Circuit c = generate_iqp(spec);
  EXPECT_GE(c.n_wires, 5);
  EXPECT_LE(c.n_wires, 120);
  std::set<GateKind> kinds;
  for (const Gate& g : c.gates) kinds.insert(g.kind);
  for (const auto& [kind, w] : spec.gate_mix) {
    if (w > 0) EXPECT_TRUE(kinds.count(kind)) << gate_name(kind);
  }
  EXPECT_TRUE(validate(c).empty());
}

TEST(GenerateIqp, HColumnsSandwichTheLayers) {
  Circuit c = generate_iqp(small_spec(4));
  const auto n = static_cast<std::size_t>(c.n_wires);
  ASSERT_GT(c.gates.size(), 2 * n);
  for (std::size_t w = 0; w < n; ++w) {
    EXPECT_EQ(c.gates[w].kind, GateKind::H);
    EXPECT_EQ(c.gates[w].target, static_cast<int>(w));
    EXPECT_EQ(c.gates[c.gates.size() - n + w].kind, GateKind::H);
  }
  EXPECT_EQ(c.gates.size() - 2 * n, static_cast<std::size_t>(std::llround(3.0 * c.n_wires)));
}

TEST(GenerateIqp, SameSeedSameCircuit) {
  EXPECT_EQ(generate_iqp(small_spec(9)), generate_iqp(small_spec(9)));
  EXPECT_NE(generate_iqp(small_spec(9)), generate_iqp(small_spec(10)));
}

TEST(GenerateIqp, FrozenStream) {
  // Pins the generator's draws so silent changes to the PRNG use show up.
  Circuit c = generate_iqp(small_spec(1));
  IqpSpec again = small_spec(1);
  EXPECT_EQ(serialize_circuit(c), serialize_circuit(generate_iqp(again)));
  Rng rng(1);
  EXPECT_EQ(rng(), 2469588189546311528ull);
}

TEST(GenerateIqp, RzAnglesAreNonClifford) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    for (const Gate& g : generate_iqp(small_spec(seed)).gates) {
      if (g.kind == GateKind::Rz) EXPECT_EQ(classify_angle(g.angles[0]), AngleClass::NonClifford);
    }
  }
}

TEST(GenerateIqp, OnlyHWeightIsAViolation) {
  IqpSpec spec;
  spec.gate_mix = {{GateKind::H, 1.0}};
  auto v = validate(spec);
  ASSERT_EQ(v.size(), 2u);
  EXPECT_EQ(v[0].kind, IqpViolation::Kind::MissingNonClifford);
  EXPECT_EQ(v[1].kind, IqpViolation::Kind::MissingCnot);
  EXPECT_THROW(generate_iqp(spec), InvalidIqpSpec);
}

TEST(GenerateIqp, OtherViolations) {
  IqpSpec spec;
  spec.n_min = 0;
  spec.n_max = 20'000;
  spec.depth_factor = 0.0;
  spec.gate_mix[GateKind::T] = -1.0;
  spec.gate_mix[GateKind::Rx] = 1.0;
  std::set<IqpViolation::Kind> kinds;
  for (const auto& v : validate(spec)) kinds.insert(v.kind);
  EXPECT_TRUE(kinds.count(IqpViolation::Kind::RangeOutOfBounds));
  EXPECT_TRUE(kinds.count(IqpViolation::Kind::NonPositiveDepth));
  EXPECT_TRUE(kinds.count(IqpViolation::Kind::NegativeWeight));
  EXPECT_TRUE(kinds.count(IqpViolation::Kind::UnsupportedKind));
  EXPECT_TRUE(kinds.count(IqpViolation::Kind::CnotNeedsTwoWires));
  IqpSpec empty_range;
  empty_range.n_min = 9;
  empty_range.n_max = 8;
  EXPECT_EQ(validate(empty_range).at(0).kind, IqpViolation::Kind::EmptyRange);
}

TEST(GenerateIqp, EveryCircuitValidates) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    EXPECT_TRUE(validate(generate_iqp(small_spec(seed))).empty());
  }
}

TEST(RunBatch, SizesAndOrder) {
  EXPECT_TRUE(run_batch({}).empty());
  EXPECT_EQ(run_batch({small_spec(3)}).size(), 1u);
  auto specs = default_manifest(8, 100, small_spec(0));
  auto rows = run_batch(specs);
  ASSERT_EQ(rows.size(), 8u);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].seed, 100 + i);
    EXPECT_EQ(rows[i].row.circuit_id, "iqp-" + std::to_string(100 + i));
    EXPECT_FALSE(rows[i].error);
    Circuit c = generate_iqp(specs[i]);
    EXPECT_EQ(rows[i].row, metrics_row(c, layout(c)));
  }
}

TEST(RunBatch, ThreadCountDoesNotChangeOutput) {
  auto specs = default_manifest(10, 1, small_spec(0));
  EXPECT_EQ(batch_csv(run_batch(specs, 1)), batch_csv(run_batch(specs, 4)));
}

TEST(RunBatch, FailuresBecomeRowMarkers) {
  auto specs = default_manifest(3, 1, small_spec(0));
  specs[1].gate_mix = {{GateKind::H, 1.0}};
  auto rows = run_batch(specs);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_FALSE(rows[0].error);
  ASSERT_TRUE(rows[1].error);
  EXPECT_NE(rows[1].error->find("positive cnot weight"), std::string::npos);
  EXPECT_FALSE(rows[2].error);
  std::string csv = batch_csv(rows);
  EXPECT_NE(csv.find("iqp-2,\"error: "), std::string::npos);
}

TEST(Summarize, HandComputed) {
  std::vector<MetricsRow> rows(3);
  for (int i = 0; i < 3; ++i) {
    rows[i].graph_state = 10 * (i + 1);
    rows[i].pauli = i + 1;
    rows[i].t4 = 1;
    rows[i].ratio = Rational(i + 1);
  }
  SummaryStats s = summarize(rows);
  EXPECT_EQ(s.count, 3u);
  EXPECT_DOUBLE_EQ(s.mean_ratio, 2.0);
  EXPECT_DOUBLE_EQ(s.sd_ratio, 1.0);
  EXPECT_DOUBLE_EQ(s.mean_graph_state, 20.0);
  EXPECT_DOUBLE_EQ(s.mean_pauli, 2.0);
  EXPECT_DOUBLE_EQ(s.target_probability, probability_of_ratio(11.0, 2.0, 1.0));
}

TEST(Summarize, InsufficientData) {
  std::vector<MetricsRow> one(1);
  one[0].ratio = Rational(5);
  EXPECT_THROW(summarize(one), InsufficientData);
  std::vector<MetricsRow> undefined(4);
  EXPECT_THROW(summarize(undefined), InsufficientData);
}

TEST(ProbabilityOfRatio, Examples) {
  // Independent evaluation of the normal density.
  auto density = [](long double x, long double m, long double s) {
    const long double pi = 3.141592653589793238462643383279502884L;
    return std::exp(-(x - m) * (x - m) / (2 * s * s)) / (s * std::sqrt(2 * pi));
  };
  EXPECT_NEAR(probability_of_ratio(11, 362.8, 209.0), 4.63e-4, 4.63e-6);
  EXPECT_NEAR(probability_of_ratio(11, 362.8, 209.0),
              static_cast<double>(density(11, 362.8L, 209.0L)), 1e-15);
  EXPECT_NEAR(probability_of_ratio(5, 5, 2), 1.0 / (2 * std::sqrt(2 * std::numbers::pi)), 1e-15);
  EXPECT_NEAR(probability_of_ratio(0, 0, 1), 0.3989422804014327, 1e-15);
  EXPECT_THROW(probability_of_ratio(0, 0, 0), std::invalid_argument);
}

TEST(Manifest, RoundTripAndDefaults) {
  auto specs = default_manifest(3, 7, small_spec(0));
  specs[2].gate_mix = {{GateKind::CNOT, 1.0}, {GateKind::T, 0.5}};
  auto back = manifest_from_json(manifest_to_json(specs));
  EXPECT_EQ(back, specs);
  auto sparse = manifest_from_json(R"({"specs": [{"seed": 4}]})");
  ASSERT_EQ(sparse.size(), 1u);
  EXPECT_EQ(sparse[0].seed, 4u);
  EXPECT_EQ(sparse[0].n_min, 5);
  EXPECT_EQ(sparse[0].n_max, 120);
  EXPECT_EQ(sparse[0].gate_mix, default_gate_mix());
  EXPECT_THROW(manifest_from_json("[{\"gate_mix\": {\"zz\": 1}}]"), std::invalid_argument);
  EXPECT_THROW(manifest_from_json("{"), std::invalid_argument);
}

TEST(SummaryText, Format) {
  SummaryStats s{30, 50966.1, 50000.0, 362.8, 209.0, 4.63e-4};
  std::string text = summary_text(s);
  EXPECT_NE(text.find("mean graph state: 50966.1"), std::string::npos);
  EXPECT_NE(text.find("density at 11:1: 4.630E-04"), std::string::npos);
}

}  // namespace
}  // namespace etch
