// Copyright 2026 The qpercept Authors
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

namespace qpercept {

/// Invalid sizes, counts or values supplied by the caller.
class ConfigurationError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Inconsistent wiring: qubit indices out of range, duplicated, or shape mismatches.
class StructuralError : public std::out_of_range {
  public:
    using std::out_of_range::out_of_range;
};

/// A circuit contains a trainable gate the parameter-shift rule cannot differentiate.
class UnsupportedArchitectureError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class TrainingDivergedError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Config text could not be parsed; the message carries line/key context.
class ParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

} // namespace qpercept
