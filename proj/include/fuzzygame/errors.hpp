// Copyright 2026 The fuzzygame Authors.
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

#ifndef FUZZYGAME_ERRORS_HPP
#define FUZZYGAME_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fuzzygame {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A value violates a type invariant (negative spread, unordered trapezoid, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// The dominance index is undefined because both facing spreads are zero.
class DegenerateComparison : public Error {
 public:
  using Error::Error;
};

/// An operation was handed a matrix of the wrong dimensions.
class ShapeError : public Error {
 public:
  using Error::Error;
};

class SizeLimitExceeded : public Error {
 public:
  using Error::Error;
};

/// Solver arithmetic reached a state its own invariants rule out.
class InternalConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace fuzzygame

#endif  // FUZZYGAME_ERRORS_HPP
