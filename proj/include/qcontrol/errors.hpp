// Copyright 2026 the qcontrol authors
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

#ifndef QCONTROL_ERRORS_HPP
#define QCONTROL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qcontrol {

/// Bad input: dimension mismatches, violated structural invariants,
/// unparseable or inconsistent spec files. Maps to CLI exit code 1.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

/// A numeric routine failed to produce a usable result (eigensolver
/// breakdown, degenerate null space). Maps to CLI exit code 2.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qcontrol

#endif  // QCONTROL_ERRORS_HPP
