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

#include "qcontrol/report.hpp"

#include <cstdio>
#include <sstream>

#include "qcontrol/version.hpp"

namespace qcontrol {

namespace {

using nlohmann::ordered_json;

std::string yesno(bool b) { return b ? "yes" : "no"; }

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

}  // namespace

std::string fnv1a_digest(const std::string& bytes) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

ordered_json AnalysisReport::to_json() const {
  ordered_json doc;
  doc["tool"] = "qcontrol";
  doc["version"] = kVersion;
  doc["command"] = command;
  doc["input"] = {{"path", input_path}, {"digest", input_digest}};
  doc["system_label"] = system_label;
  doc["seed"] = seed;
  doc["tolerance_scale"] = tolerance_scale;
  if (!system_echo.is_null()) {
    doc["system"] = system_echo;
  }

  if (algebra) {
    ordered_json a;
    a["dimension"] = algebra->dimension;
    a["contains_identity"] = algebra->contains_identity;
    a["tolerance_warning"] = algebra->tolerance_warning;
    a["class"] = to_string(algebra->tag);
    if (algebra->form) {
      ordered_json f;
      f["symmetry"] = to_string(algebra->form->symmetry);
      f["residual"] = algebra->form->residual;
      f["null_space_dim"] = algebra->form->null_space_dim;
      f["matrix"] = matrix_to_json(algebra->form->j);
      if (!algebra->form->notes.empty()) {
        f["notes"] = algebra->form->notes;
      }
      a["form"] = std::move(f);
    } else {
      a["form"] = nullptr;
    }
    if (!algebra->class_notes.empty()) {
      a["notes"] = algebra->class_notes;
    }
    a["verdict"] = {{"complete", algebra->verdict.complete},
                    {"pure_state", algebra->verdict.pure_state},
                    {"notes", algebra->verdict.notes}};
    doc["algebra"] = std::move(a);
  }

  if (reach) {
    ordered_json r;
    r["from"] = reach->from;
    r["to"] = reach->to;
    r["kinematic"] = reach->verdict.kinematic;
    if (reach->verdict.form_necessary) {
      r["form_necessary"] = *reach->verdict.form_necessary;
      r["form_residual_from"] = *reach->verdict.form_residual_from;
      r["form_residual_to"] = *reach->verdict.form_residual_to;
    } else {
      r["form_necessary"] = nullptr;
    }
    if (reach->verdict.orbit_distance) {
      r["orbit_distance"] = *reach->verdict.orbit_distance;
    } else {
      r["orbit_distance"] = nullptr;
    }
    r["verdict"] = to_string(reach->verdict.verdict);
    r["notes"] = reach->verdict.notes;
    doc["reachability"] = std::move(r);
  }

  if (optimization) {
    ordered_json o;
    o["observable"] = optimization->observable;
    o["from"] = optimization->from;
    o["kinematical_bound"] = optimization->kinematical_bound;
    o["orbit_bound"] = optimization->orbit_bound_value;
    o["best_dynamical_value"] = optimization->best_value;
    o["gap"] = optimization->gap;
    o["converged"] = optimization->converged;
    o["iterations"] = optimization->iterations;
    o["restarts"] = optimization->restarts;
    o["steps"] = optimization->steps;
    o["duration"] = optimization->duration;
    if (!optimization->pulse_out.empty()) {
      o["pulse_out"] = optimization->pulse_out;
    }
    doc["optimization"] = std::move(o);
  }

  if (simulation) {
    ordered_json s;
    s["state"] = simulation->state;
    s["unitarity_defect"] = simulation->unitarity_defect;
    if (simulation->final_state) {
      s["final_state"] = matrix_to_json(*simulation->final_state);
    }
    if (simulation->final_unitary) {
      s["final_unitary"] = matrix_to_json(*simulation->final_unitary);
    }
    ordered_json ex;
    for (const auto& [name, value] : simulation->expectations) {
      ex[name] = value;
    }
    s["expectations"] = std::move(ex);
    doc["simulation"] = std::move(s);
  }
  return doc;
}

std::string AnalysisReport::to_human() const {
  std::ostringstream out;
  out << "qcontrol " << command << ": " << system_label << "\n";
  out << "  input: " << input_path << " (digest " << input_digest << ", seed " << seed << ")\n";

  if (algebra) {
    out << "  algebra dimension: " << algebra->dimension
        << " (contains identity: " << yesno(algebra->contains_identity) << ")\n";
    out << "  class: " << to_string(algebra->tag) << "\n";
    if (algebra->form) {
      out << "  invariant form: " << to_string(algebra->form->symmetry) << ", residual "
          << num(algebra->form->residual) << ", null space dim "
          << algebra->form->null_space_dim << "\n";
    } else {
      out << "  invariant form: none\n";
    }
    if (algebra->tolerance_warning) {
      out << "  warning: closure rank decision near tolerance\n";
    }
    if (!algebra->class_notes.empty()) {
      out << "  note: " << algebra->class_notes << "\n";
    }
    out << "  complete controllability: " << yesno(algebra->verdict.complete) << "\n";
    out << "  pure-state controllability: " << yesno(algebra->verdict.pure_state) << "\n";
    out << "  note: " << algebra->verdict.notes << "\n";
  }

  if (reach) {
    out << "  transfer: " << reach->from << " -> " << reach->to << "\n";
    out << "  kinematically admissible: " << yesno(reach->verdict.kinematic) << "\n";
    if (reach->verdict.form_necessary) {
      out << "  form constraint satisfied on both sides: "
          << yesno(*reach->verdict.form_necessary) << " (residuals "
          << num(*reach->verdict.form_residual_from) << " / "
          << num(*reach->verdict.form_residual_to) << ")\n";
    } else {
      out << "  form constraint: not applicable (no invariant form)\n";
    }
    if (reach->verdict.orbit_distance) {
      out << "  orbit search distance: " << num(*reach->verdict.orbit_distance) << "\n";
    } else {
      out << "  orbit search: skipped\n";
    }
    out << "  verdict: " << to_string(reach->verdict.verdict) << "\n";
    out << "  note: " << reach->verdict.notes << "\n";
  }

  if (optimization) {
    out << "  observable: " << optimization->observable << ", initial state: "
        << optimization->from << "\n";
    out << "  kinematical bound: " << num(optimization->kinematical_bound) << "\n";
    out << "  orbit bound:       " << num(optimization->orbit_bound_value) << "\n";
    out << "  best dynamical:    " << num(optimization->best_value) << "\n";
    out << "  gap (bound - best): " << num(optimization->gap) << "\n";
    out << "  converged: " << yesno(optimization->converged) << " after "
        << optimization->iterations << " iterations (" << optimization->restarts
        << " restarts, K=" << optimization->steps << ", T=" << num(optimization->duration)
        << ")\n";
    if (!optimization->pulse_out.empty()) {
      out << "  best pulse written to: " << optimization->pulse_out << "\n";
    }
  }

  if (simulation) {
    if (!simulation->state.empty()) {
      out << "  initial state: " << simulation->state << "\n";
    }
    out << "  unitarity defect: " << num(simulation->unitarity_defect) << "\n";
    if (simulation->final_state) {
      out << "  final state:\n";
      const ComplexMatrix& m = *simulation->final_state;
      for (Eigen::Index r = 0; r < m.rows(); ++r) {
        out << "   ";
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
          out << " (" << num(m(r, c).real()) << (m(r, c).imag() < 0 ? "" : "+")
              << num(m(r, c).imag()) << "i)";
        }
        out << "\n";
      }
    }
    if (simulation->final_unitary) {
      out << "  final unitary:\n";
      const ComplexMatrix& m = *simulation->final_unitary;
      for (Eigen::Index r = 0; r < m.rows(); ++r) {
        out << "   ";
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
          out << " (" << num(m(r, c).real()) << (m(r, c).imag() < 0 ? "" : "+")
              << num(m(r, c).imag()) << "i)";
        }
        out << "\n";
      }
    }
    for (const auto& [name, value] : simulation->expectations) {
      out << "  <" << name << "> = " << num(value) << "\n";
    }
  }
  return out.str();
}

}  // namespace qcontrol
