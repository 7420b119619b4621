// Copyright 2026 The purify Authors
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

namespace purify {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Mismatched sizes, arities, or qubit indices.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Tensor product would exceed the register cap.
class RegisterOverflow : public Error {
 public:
  using Error::Error;
};

/// Amplitudes that are non-finite or not normalized.
class StateError : public Error {
 public:
  using Error::Error;
};

/// A gate-flagged operator that fails the unitarity check.
class NonUnitaryError : public Error {
 public:
  using Error::Error;
};

/// Branch state that cannot be balanced by a filter on qubit 1.
class FilterPlanError : public Error {
 public:
  using Error::Error;
};

/// Schmidt data that violates normalization or ordering.
class PairSpecError : public Error {
 public:
  using Error::Error;
};

}  // namespace purify
