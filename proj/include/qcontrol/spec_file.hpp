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

#ifndef QCONTROL_SPEC_FILE_HPP
#define QCONTROL_SPEC_FILE_HPP

#include <map>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "qcontrol/density.hpp"
#include "qcontrol/dynamics.hpp"
#include "qcontrol/models.hpp"

namespace qcontrol {

/// A parsed system-definition file: the control system plus named states
/// and observables. Matrix entries in the file are real scalars or
/// two-element [re, im] arrays; exactly one of {drift+controls, oscillator}
/// must be present.
struct SystemSpec {
  ControlSystem system;
  std::optional<OscillatorSpec> oscillator;  // set when the shorthand was used
  std::map<std::string, DensityMatrix> states;
  std::map<std::string, HermitianMatrix> observables;
};

SystemSpec parse_system_spec(const nlohmann::json& doc, const std::string& origin);
SystemSpec load_system_spec(const std::string& path);

/// Emits the system with drift/controls explicit and every complex entry as
/// [re, im]; parsing the result reproduces the input matrices bit for bit.
nlohmann::ordered_json system_spec_to_json(const SystemSpec& spec);

/// Pulse file: one header line "T K M", then K lines of M amplitudes.
/// Lines starting with '#' are ignored.
ControlPulse load_pulse(const std::string& path);
void save_pulse(const ControlPulse& pulse, const std::string& path);

/// Complex matrix as nested arrays of [re, im] pairs.
nlohmann::ordered_json matrix_to_json(const ComplexMatrix& m);
/// Accepts real scalars or [re, im] pairs per entry; `what` names the matrix
/// in error messages.
ComplexMatrix matrix_from_json(const nlohmann::json& j, const std::string& what);

}  // namespace qcontrol

#endif  // QCONTROL_SPEC_FILE_HPP
