// Copyright 2026 The qslkit Authors
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

#include <cmath>
#include <compare>
#include <limits>
#include <string>
#include <string_view>

#include "qslkit/errors.hpp"

namespace qslkit {

/// Cahill-Glauber phase-space index s on the extended real line. The value
/// -infinity is a token for which 3^s is exactly zero.
class SParameter {
 public:
  static constexpr double kMaxAbs = 600;

  static SParameter neg_inf() { return SParameter(true, 0); }
  static SParameter of(double s) {
    if (!std::isfinite(s) || std::abs(s) > kMaxAbs)
      throw InvalidArgument("s parameter must be finite with |s| <= 600 (use neg_inf() for -infinity)");
    return SParameter(false, s);
  }
  /// Accepts "-inf", "neginf", "-infinity" or a decimal number.
  static SParameter parse(std::string_view text);

  bool is_neg_inf() const { return neg_inf_; }
  double value() const { return neg_inf_ ? -std::numeric_limits<double>::infinity() : s_; }
  double pow3() const { return neg_inf_ ? 0.0 : std::pow(3.0, s_); }
  /// Column label: "neginf" or the shortest decimal of s.
  std::string label() const;

  friend bool operator==(const SParameter& a, const SParameter& b) {
    return a.neg_inf_ == b.neg_inf_ && (a.neg_inf_ || a.s_ == b.s_);
  }
  friend std::partial_ordering operator<=>(const SParameter& a, const SParameter& b) {
    return a.value() <=> b.value();
  }

 private:
  SParameter(bool inf, double s) : neg_inf_(inf), s_(s) {}
  bool neg_inf_;
  double s_;
};

}  // namespace qslkit
