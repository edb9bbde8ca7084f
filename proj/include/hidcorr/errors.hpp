// Copyright 2026 The hidcorr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <sstream>
#include <stdexcept>
#include <string>

namespace hidcorr {

// Bad arguments or mismatched shapes (CLI exit code 2).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An index or value outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Conditioning on an event of zero probability.
class ConditioningOnNull : public DomainError {
 public:
  using DomainError::DomainError;
};

enum class StateViolation { NotHermitian, TraceNotOne, NotPSD };

inline const char* to_string(StateViolation v) {
  switch (v) {
    case StateViolation::NotHermitian:
      return "NotHermitian";
    case StateViolation::TraceNotOne:
      return "TraceNotOne";
    case StateViolation::NotPSD:
      return "NotPSD";
  }
  return "?";
}

// A matrix that failed density-matrix validation. what() names the violated
// bound and the observed magnitude.
class InvalidDensityMatrix : public DomainError {
 public:
  InvalidDensityMatrix(StateViolation kind, double magnitude, double bound)
      : DomainError(describe(kind, magnitude, bound)),
        kind_(kind),
        magnitude_(magnitude) {}

  StateViolation kind() const noexcept { return kind_; }
  double magnitude() const noexcept { return magnitude_; }

 private:
  static std::string describe(StateViolation kind, double magnitude,
                              double bound) {
    std::ostringstream os;
    os << to_string(kind) << ": magnitude " << magnitude
       << " exceeds bound " << bound;
    return os.str();
  }

  StateViolation kind_;
  double magnitude_;
};

}  // namespace hidcorr
