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

#include "qcontrol/spec_file.hpp"

#include <fstream>
#include <sstream>

namespace qcontrol {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

double number_from_json(const json& j, const std::string& what) {
  if (!j.is_number()) {
    throw ValidationError(what + ": expected a number");
  }
  return j.get<double>();
}

Complex entry_from_json(const json& j, const std::string& what) {
  if (j.is_number()) {
    return Complex(j.get<double>(), 0.0);
  }
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return Complex(j[0].get<double>(), j[1].get<double>());
  }
  throw ValidationError(what + ": entries must be real numbers or [re, im] pairs");
}

RealVector real_vector_from_json(const json& j, const std::string& what) {
  if (!j.is_array()) {
    throw ValidationError(what + ": expected an array of numbers");
  }
  RealVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    v[static_cast<Eigen::Index>(i)] = number_from_json(j[i], what);
  }
  return v;
}

HermitianMatrix hermitian_from_json(const json& j, Eigen::Index dim, const std::string& what) {
  const ComplexMatrix m = matrix_from_json(j, what);
  if (m.rows() != dim) {
    throw ValidationError(what + ": expected a " + std::to_string(dim) + "x" +
                          std::to_string(dim) + " matrix, got " + std::to_string(m.rows()) +
                          "x" + std::to_string(m.cols()));
  }
  try {
    return HermitianMatrix(m);
  } catch (const ValidationError& e) {
    throw ValidationError(what + ": " + e.what());
  }
}

}  // namespace

ComplexMatrix matrix_from_json(const json& j, const std::string& what) {
  if (!j.is_array() || j.empty()) {
    throw ValidationError(what + ": expected a nonempty array of rows");
  }
  const Eigen::Index rows = static_cast<Eigen::Index>(j.size());
  ComplexMatrix m;
  for (Eigen::Index r = 0; r < rows; ++r) {
    const json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array()) {
      throw ValidationError(what + ": row " + std::to_string(r) + " is not an array");
    }
    if (r == 0) {
      m.resize(rows, static_cast<Eigen::Index>(row.size()));
    }
    if (static_cast<Eigen::Index>(row.size()) != m.cols()) {
      throw ValidationError(what + ": ragged rows");
    }
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      m(r, c) = entry_from_json(row[static_cast<std::size_t>(c)],
                                what + "(" + std::to_string(r) + "," + std::to_string(c) + ")");
    }
  }
  if (m.rows() != m.cols()) {
    throw ValidationError(what + ": matrix must be square");
  }
  return m;
}

ordered_json matrix_to_json(const ComplexMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      row.push_back({m(r, c).real(), m(r, c).imag()});
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

SystemSpec parse_system_spec(const json& doc, const std::string& origin) {
  if (!doc.is_object()) {
    throw ValidationError(origin + ": top level must be an object");
  }
  if (!doc.contains("dimension")) {
    throw ValidationError(origin + ": missing required key 'dimension'");
  }
  const Eigen::Index dim = doc["dimension"].get<Eigen::Index>();
  if (dim < 2) {
    throw ValidationError(origin + ": dimension must be at least 2");
  }

  const bool has_matrices = doc.contains("drift") || doc.contains("controls");
  const bool has_oscillator = doc.contains("oscillator");
  if (has_matrices == has_oscillator) {
    throw ValidationError(origin +
                          ": exactly one of {drift+controls, oscillator} must be present");
  }

  std::optional<OscillatorSpec> oscillator;
  std::optional<ControlSystem> system;
  if (has_oscillator) {
    const json& osc = doc["oscillator"];
    if (!osc.is_object() || !osc.contains("energies") || !osc.contains("dipoles")) {
      throw ValidationError(origin + ": oscillator needs 'energies' and 'dipoles'");
    }
    OscillatorSpec spec;
    spec.energies = real_vector_from_json(osc["energies"], origin + ": oscillator.energies");
    spec.dipoles = real_vector_from_json(osc["dipoles"], origin + ": oscillator.dipoles");
    if (osc.contains("signs")) {
      spec.signs = real_vector_from_json(osc["signs"], origin + ": oscillator.signs");
    }
    if (spec.energies.size() != dim) {
      throw ValidationError(origin + ": oscillator.energies length " +
                            std::to_string(spec.energies.size()) +
                            " does not match dimension " + std::to_string(dim));
    }
    system = build_oscillator(spec);
    oscillator = std::move(spec);
  } else {
    if (!doc.contains("drift") || !doc.contains("controls")) {
      throw ValidationError(origin + ": need both 'drift' and 'controls'");
    }
    HermitianMatrix drift = hermitian_from_json(doc["drift"], dim, origin + ": drift");
    const json& ctrls = doc["controls"];
    if (!ctrls.is_array() || ctrls.empty()) {
      throw ValidationError(origin + ": 'controls' must be a nonempty array of matrices");
    }
    std::vector<HermitianMatrix> controls;
    for (std::size_t m = 0; m < ctrls.size(); ++m) {
      controls.push_back(
          hermitian_from_json(ctrls[m], dim, origin + ": controls[" + std::to_string(m) + "]"));
    }
    system.emplace(std::move(drift), std::move(controls));
  }
  if (doc.contains("label")) {
    system->label = doc["label"].get<std::string>();
  }

  SystemSpec spec{std::move(*system), std::move(oscillator), {}, {}};
  if (doc.contains("states")) {
    for (const auto& [name, value] : doc["states"].items()) {
      HermitianMatrix h = hermitian_from_json(value, dim, origin + ": state '" + name + "'");
      try {
        spec.states.emplace(name, DensityMatrix(h));
      } catch (const ValidationError& e) {
        throw ValidationError(origin + ": state '" + name + "': " + e.what());
      }
    }
  }
  if (doc.contains("observables")) {
    for (const auto& [name, value] : doc["observables"].items()) {
      spec.observables.emplace(
          name, hermitian_from_json(value, dim, origin + ": observable '" + name + "'"));
    }
  }
  return spec;
}

SystemSpec load_system_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ValidationError("cannot open spec file '" + path + "'");
  }
  json doc;
  try {
    doc = json::parse(in);  // exception message carries line/column
  } catch (const json::parse_error& e) {
    throw ValidationError(path + ": " + e.what());
  }
  return parse_system_spec(doc, path);
}

ordered_json system_spec_to_json(const SystemSpec& spec) {
  ordered_json doc;
  doc["dimension"] = spec.system.dim;
  doc["label"] = spec.system.label;
  doc["drift"] = matrix_to_json(spec.system.drift.mat());
  ordered_json ctrls = ordered_json::array();
  for (const auto& c : spec.system.controls) {
    ctrls.push_back(matrix_to_json(c.mat()));
  }
  doc["controls"] = std::move(ctrls);
  if (!spec.states.empty()) {
    ordered_json states;
    for (const auto& [name, rho] : spec.states) {
      states[name] = matrix_to_json(rho.mat());
    }
    doc["states"] = std::move(states);
  }
  if (!spec.observables.empty()) {
    ordered_json obs;
    for (const auto& [name, a] : spec.observables) {
      obs[name] = matrix_to_json(a.mat());
    }
    doc["observables"] = std::move(obs);
  }
  return doc;
}

ControlPulse load_pulse(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ValidationError("cannot open pulse file '" + path + "'");
  }
  std::string line;
  const auto next_line = [&]() {
    while (std::getline(in, line)) {
      const auto pos = line.find_first_not_of(" \t\r");
      if (pos == std::string::npos || line[pos] == '#') {
        continue;
      }
      return true;
    }
    return false;
  };

  if (!next_line()) {
    throw ValidationError(path + ": missing pulse header 'T K M'");
  }
  double duration = 0.0;
  Eigen::Index steps = 0, num_controls = 0;
  {
    std::istringstream hdr(line);
    if (!(hdr >> duration >> steps >> num_controls)) {
      throw ValidationError(path + ": malformed pulse header, expected 'T K M'");
    }
  }
  if (steps < 1 || num_controls < 1) {
    throw ValidationError(path + ": pulse header needs K >= 1 and M >= 1");
  }
  Eigen::MatrixXd amps(steps, num_controls);
  for (Eigen::Index k = 0; k < steps; ++k) {
    if (!next_line()) {
      throw ValidationError(path + ": expected " + std::to_string(steps) +
                            " amplitude rows, got " + std::to_string(k));
    }
    std::istringstream row(line);
    for (Eigen::Index m = 0; m < num_controls; ++m) {
      if (!(row >> amps(k, m))) {
        throw ValidationError(path + ": row " + std::to_string(k) + " needs " +
                              std::to_string(num_controls) + " amplitudes");
      }
    }
  }
  return ControlPulse(duration, steps, std::move(amps));
}

void save_pulse(const ControlPulse& pulse, const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw ValidationError("cannot write pulse file '" + path + "'");
  }
  out.precision(17);
  out << pulse.duration << " " << pulse.steps << " " << pulse.num_controls() << "\n";
  for (Eigen::Index k = 0; k < pulse.steps; ++k) {
    for (Eigen::Index m = 0; m < pulse.num_controls(); ++m) {
      out << pulse.amplitudes(k, m) << (m + 1 < pulse.num_controls() ? " " : "");
    }
    out << "\n";
  }
  if (!out) {
    throw ValidationError("failed writing pulse file '" + path + "'");
  }
}

}  // namespace qcontrol
