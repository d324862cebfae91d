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

#include <stdexcept>
#include <string>

namespace qslkit {

/// Bad input to a library function (wrong dimension, out-of-range parameter).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A matrix that fails the density-matrix invariants.
class NotAState : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// Evaluation time outside a schedule's domain.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Two-level spectrum collapsed (Delta = g = 0); eigenbasis undefined.
class DegenerateSpectrum : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Integration or consistency check failed during a computation.
class NumericalFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qslkit
