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
#include <optional>
#include <string>
#include <string_view>

namespace etch {

// Reduced fraction num/den of pi, den > 0.
struct PiFraction {
  std::int64_t num = 0;
  std::int64_t den = 1;

  bool operator==(const PiFraction&) const = default;
};

// A rotation angle in radians. Angles written symbolically ("pi/4") keep the
// exact multiple of pi so Clifford classification does not depend on
// floating-point rounding.
class Angle {
 public:
  Angle() = default;

  static Angle from_radians(double radians);
  static Angle pi_times(std::int64_t num, std::int64_t den = 1);

  // Accepts "pi", "-pi/2", "3pi/4", "3*pi/4", "0" and plain decimal numbers.
  // Throws std::invalid_argument on anything else.
  static Angle parse(std::string_view text);

  double radians() const { return radians_; }
  const std::optional<PiFraction>& exact() const { return exact_; }

  Angle operator-() const;

  // Symbolic form when exact ("pi/4", "-3pi/4", "0"), otherwise the shortest
  // round-trip decimal.
  std::string to_string() const;

  bool operator==(const Angle&) const = default;

 private:
  double radians_ = 0.0;
  std::optional<PiFraction> exact_;
};

}  // namespace etch
