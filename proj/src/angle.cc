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

#include "etch/angle.h"

#include <charconv>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace etch {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

bool parse_int(std::string_view s, std::int64_t& out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace

Angle Angle::from_radians(double radians) {
  if (!std::isfinite(radians)) {
    throw std::invalid_argument("angle must be finite");
  }
  Angle a;
  a.radians_ = radians;
  return a;
}

Angle Angle::pi_times(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("angle denominator is zero");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(num, den);
  if (g == 0) g = 1;
  Angle a;
  a.exact_ = PiFraction{num / g, den / g};
  a.radians_ = std::numbers::pi * static_cast<double>(num / g) /
               static_cast<double>(den / g);
  return a;
}

Angle Angle::parse(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) throw std::invalid_argument("empty angle");

  std::size_t pi_pos = s.find("pi");
  if (pi_pos == std::string_view::npos) {
    double value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
      throw std::invalid_argument("malformed angle '" + std::string(text) + "'");
    }
    if (value == 0.0) return pi_times(0);
    return from_radians(value);
  }

  // [sign][k[*]]pi[/m]
  std::string_view head = s.substr(0, pi_pos);
  std::string_view tail = s.substr(pi_pos + 2);
  std::int64_t num = 1;
  bool negative = false;
  if (!head.empty() && (head.front() == '-' || head.front() == '+')) {
    negative = head.front() == '-';
    head.remove_prefix(1);
  }
  if (!head.empty() && head.back() == '*') head.remove_suffix(1);
  if (!head.empty() && !parse_int(head, num)) {
    throw std::invalid_argument("malformed angle '" + std::string(text) + "'");
  }
  std::int64_t den = 1;
  if (!tail.empty()) {
    if (tail.front() != '/' || !parse_int(tail.substr(1), den) || den <= 0) {
      throw std::invalid_argument("malformed angle '" + std::string(text) + "'");
    }
  }
  return pi_times(negative ? -num : num, den);
}

Angle Angle::operator-() const {
  if (exact_) return pi_times(-exact_->num, exact_->den);
  return from_radians(-radians_);
}

std::string Angle::to_string() const {
  if (exact_) {
    const auto [num, den] = *exact_;
    if (num == 0) return "0";
    std::string out;
    if (num < 0) out += '-';
    std::int64_t mag = num < 0 ? -num : num;
    if (mag != 1) out += std::to_string(mag);
    out += "pi";
    if (den != 1) out += "/" + std::to_string(den);
    return out;
  }
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), radians_);
  return std::string(buf, ptr);
}

}  // namespace etch
