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

#include "qslkit/s_parameter.hpp"

#include <charconv>

#include "qslkit/io.hpp"

namespace qslkit {

SParameter SParameter::parse(std::string_view text) {
  if (text == "-inf" || text == "neginf" || text == "-infinity" || text == "-Infinity") return neg_inf();
  double v = 0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size())
    throw InvalidArgument("cannot parse s parameter '" + std::string(text) + "'");
  return of(v);
}

std::string SParameter::label() const { return neg_inf_ ? std::string("neginf") : io::format_double(s_); }

}  // namespace qslkit
