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

#ifndef QCONTROL_REPORT_HPP
#define QCONTROL_REPORT_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "qcontrol/classify.hpp"
#include "qcontrol/reachability.hpp"
#include "qcontrol/spec_file.hpp"

namespace qcontrol {

/// Everything a command run produced, renderable as human text or as a
/// machine JSON document. Deterministic given (input file, seed): no
/// timestamps, fixed key order, shortest-roundtrip number formatting.
struct AnalysisReport {
  std::string command;
  std::string input_path;
  std::string input_digest;
  std::string system_label;
  std::uint64_t seed = 0;
  double tolerance_scale = 1.0;
  /// Echo of the parsed system (system_spec_to_json); machine reports embed
  /// it so they re-parse to the exact input system.
  nlohmann::ordered_json system_echo;

  struct Algebra {
    Eigen::Index dimension = 0;
    bool contains_identity = false;
    bool tolerance_warning = false;
    AlgebraTag tag = AlgebraTag::other_subalgebra;
    std::optional<InvariantForm> form;
    std::string class_notes;
    ControllabilityVerdict verdict;
  };
  std::optional<Algebra> algebra;

  struct Reach {
    std::string from;
    std::string to;
    ReachabilityVerdict verdict;
  };
  std::optional<Reach> reach;

  struct Optimization {
    std::string observable;
    std::string from;
    double kinematical_bound = 0.0;
    double orbit_bound_value = 0.0;
    double best_value = 0.0;
    double gap = 0.0;
    bool converged = false;
    long long iterations = 0;
    int restarts = 0;
    Eigen::Index steps = 0;
    double duration = 0.0;
    std::string pulse_out;
  };
  std::optional<Optimization> optimization;

  struct Simulation {
    std::string state;
    double unitarity_defect = 0.0;
    std::optional<ComplexMatrix> final_state;
    std::optional<ComplexMatrix> final_unitary;
    std::map<std::string, double> expectations;
  };
  std::optional<Simulation> simulation;

  nlohmann::ordered_json to_json() const;
  std::string to_human() const;
};

/// FNV-1a 64-bit digest of raw bytes, as 16 hex digits.
std::string fnv1a_digest(const std::string& bytes);

}  // namespace qcontrol

#endif  // QCONTROL_REPORT_HPP
