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

#include <doctest.h>
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

using nlohmann::json;

namespace {

struct CliResult {
  int exit_code;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

CliResult run_cli(const std::string& args) {
  const std::string out_path = "/tmp/qcontrol_cli_out.txt";
  const std::string err_path = "/tmp/qcontrol_cli_err.txt";
  const std::string cmd =
      std::string(QCONTROL_CLI_BIN) + " " + args + " >" + out_path + " 2>" + err_path;
  const int status = std::system(cmd.c_str());
  CliResult res;
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  res.out = slurp(out_path);
  res.err = slurp(err_path);
  return res;
}

std::string data(const char* name) { return std::string(QCONTROL_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("cli classify on the bundled systems") {
  SUBCASE("three-level") {
    const CliResult res = run_cli("classify " + data("three_level.json") + " --format machine");
    REQUIRE(res.exit_code == 0);
    const json doc = json::parse(res.out);
    CHECK(doc["algebra"]["dimension"] == 3);
    CHECK(doc["algebra"]["class"] == "orthogonal_so");
    CHECK(doc["algebra"]["verdict"]["complete"] == false);
    CHECK(doc["algebra"]["verdict"]["pure_state"] == false);
  }
  SUBCASE("four-level") {
    const CliResult res = run_cli("classify " + data("four_level.json") + " --format machine");
    REQUIRE(res.exit_code == 0);
    const json doc = json::parse(res.out);
    CHECK(doc["algebra"]["dimension"] == 10);
    CHECK(doc["algebra"]["class"] == "symplectic_sp");
    CHECK(doc["algebra"]["form"]["symmetry"] == "antisymmetric");
    CHECK(doc["algebra"]["verdict"]["complete"] == false);
    CHECK(doc["algebra"]["verdict"]["pure_state"] == true);
  }
  SUBCASE("two-level") {
    const CliResult res = run_cli("classify " + data("two_level.json") + " --format machine");
    REQUIRE(res.exit_code == 0);
    const json doc = json::parse(res.out);
    CHECK(doc["algebra"]["dimension"] == 3);
    CHECK(doc["algebra"]["class"] == "full_su");
    CHECK(doc["algebra"]["verdict"]["complete"] == true);
  }
  SUBCASE("human format mentions the verdict") {
    const CliResult res = run_cli("classify " + data("three_level.json"));
    REQUIRE(res.exit_code == 0);
    CHECK(res.out.find("orthogonal_so") != std::string::npos);
    CHECK(res.out.find("complete controllability: no") != std::string::npos);
  }
}

TEST_CASE("cli reach") {
  SUBCASE("form obstruction") {
    const CliResult res = run_cli("reach " + data("four_level.json") +
                                  " --from rho0 --to rho1 --format machine");
    REQUIRE(res.exit_code == 0);
    const json doc = json::parse(res.out);
    CHECK(doc["reachability"]["verdict"] == "excluded_by_form");
    CHECK(doc["reachability"]["kinematic"] == true);
    CHECK(doc["reachability"]["orbit_distance"].is_null());
    CHECK(std::abs(doc["reachability"]["form_residual_to"].get<double>() - 0.1) <= 1e-9);
  }
  SUBCASE("identity transfer") {
    const CliResult res = run_cli("reach " + data("four_level.json") +
                                  " --from rho0 --to rho0 --format machine");
    REQUIRE(res.exit_code == 0);
    const json doc = json::parse(res.out);
    CHECK(doc["reachability"]["verdict"] == "reachable_numeric");
  }
  SUBCASE("kinematic exclusion") {
    const CliResult res = run_cli("reach " + data("four_level.json") +
                                  " --from rho0 --to mixed --format machine");
    REQUIRE(res.exit_code == 0);
    const json doc = json::parse(res.out);
    CHECK(doc["reachability"]["verdict"] == "excluded_kinematic");
  }
  SUBCASE("unknown state lists the available names") {
    const CliResult res = run_cli("reach " + data("four_level.json") + " --from rho0 --to nope");
    CHECK(res.exit_code == 1);
    CHECK(res.err.find("rho1") != std::string::npos);
  }
}

TEST_CASE("cli optimize") {
  SUBCASE("two-level gap closes") {
    const CliResult res = run_cli("optimize " + data("two_level.json") +
                                  " --observable excited_projector --from ground"
                                  " --steps 32 --restarts 3 --format machine --seed 2");
    REQUIRE(res.exit_code == 0);
    const json doc = json::parse(res.out);
    CHECK(std::abs(doc["optimization"]["kinematical_bound"].get<double>() - 1.0) <= 1e-9);
    CHECK(doc["optimization"]["gap"].get<double>() <= 1e-3);
  }
  SUBCASE("identity observable is flat") {
    const CliResult res = run_cli("optimize " + data("two_level.json") +
                                  " --observable identity --from ground --restarts 1"
                                  " --format machine");
    REQUIRE(res.exit_code == 0);
    const json doc = json::parse(res.out);
    CHECK(std::abs(doc["optimization"]["best_dynamical_value"].get<double>() - 1.0) <= 1e-9);
    CHECK(std::abs(doc["optimization"]["gap"].get<double>()) <= 1e-9);
  }
  SUBCASE("pulse output file") {
    const std::string pulse_path = "/tmp/qcontrol_cli_pulse.txt";
    const CliResult res = run_cli("optimize " + data("two_level.json") +
                                  " --observable excited_projector --from ground"
                                  " --steps 8 --restarts 1 --max-iters 40 --pulse-out " +
                                  pulse_path);
    REQUIRE(res.exit_code == 0);
    const std::string contents = slurp(pulse_path);
    CHECK(contents.find("10 8 1") == 0);  // header "T K M"
    std::remove(pulse_path.c_str());
  }
}

TEST_CASE("cli simulate") {
  const std::string pulse_path = "/tmp/qcontrol_cli_zero_pulse.txt";
  {
    std::ofstream out(pulse_path);
    out << "2.0 4 1\n0\n0\n0\n0\n";
  }
  SUBCASE("zero pulse fixes diagonal states") {
    const CliResult res = run_cli("simulate " + data("three_level.json") + " --pulse " +
                                  pulse_path + " --state ground --format machine");
    REQUIRE(res.exit_code == 0);
    const json doc = json::parse(res.out);
    CHECK(doc["simulation"]["unitarity_defect"].get<double>() <= 1e-9);
    const auto& st = doc["simulation"]["final_state"];
    CHECK(std::abs(st[0][0][0].get<double>() - 1.0) <= 1e-12);
    CHECK(std::abs(st[1][1][0].get<double>()) <= 1e-12);
    CHECK(std::abs(doc["simulation"]["expectations"]["excited_projector"].get<double>()) <=
          1e-12);
    CHECK(std::abs(doc["simulation"]["expectations"]["identity"].get<double>() - 1.0) <= 1e-12);
  }
  SUBCASE("T = 0 gives the identity") {
    const std::string zero_path = "/tmp/qcontrol_cli_t0_pulse.txt";
    {
      std::ofstream out(zero_path);
      out << "0.0 1 1\n0.7\n";
    }
    const CliResult res = run_cli("simulate " + data("three_level.json") + " --pulse " +
                                  zero_path + " --show-unitary --format machine");
    REQUIRE(res.exit_code == 0);
    const json doc = json::parse(res.out);
    const auto& u = doc["simulation"]["final_unitary"];
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        const double re = u[i][j][0].get<double>();
        const double im = u[i][j][1].get<double>();
        CHECK(std::abs(re - (i == j ? 1.0 : 0.0)) <= 1e-12);
        CHECK(std::abs(im) <= 1e-12);
      }
    }
    std::remove(zero_path.c_str());
  }
  SUBCASE("control count mismatch is a validation error") {
    const std::string wide_path = "/tmp/qcontrol_cli_wide_pulse.txt";
    {
      std::ofstream out(wide_path);
      out << "1.0 2 2\n0 0\n0 0\n";
    }
    const CliResult res =
        run_cli("simulate " + data("three_level.json") + " --pulse " + wide_path);
    CHECK(res.exit_code == 1);
    std::remove(wide_path.c_str());
  }
  std::remove(pulse_path.c_str());
}

TEST_CASE("cli error contract") {
  SUBCASE("parse errors exit 1 with position info") {
    const std::string bad_path = "/tmp/qcontrol_cli_bad.json";
    {
      std::ofstream out(bad_path);
      out << "{ not json\n";
    }
    const CliResult res = run_cli("classify " + bad_path);
    CHECK(res.exit_code == 1);
    CHECK(res.err.find("line") != std::string::npos);
    std::remove(bad_path.c_str());
  }
  SUBCASE("non-Hermitian input names the matrix") {
    const std::string bad_path = "/tmp/qcontrol_cli_nonherm.json";
    {
      std::ofstream out(bad_path);
      out << R"({"dimension": 2, "drift": [[0, 1], [2, 0]], "controls": [[[0, 1], [1, 0]]]})";
    }
    const CliResult res = run_cli("classify " + bad_path);
    CHECK(res.exit_code == 1);
    CHECK(res.err.find("drift") != std::string::npos);
    std::remove(bad_path.c_str());
  }
  SUBCASE("missing file exits 1") {
    CHECK(run_cli("classify /tmp/does_not_exist_qc.json").exit_code == 1);
  }
}

TEST_CASE("cli machine output is byte-identical for a fixed seed") {
  const std::string args = "reach " + data("four_level.json") +
                           " --from rho0 --to rho2 --format machine --seed 9";
  const CliResult first = run_cli(args);
  const CliResult second = run_cli(args);
  REQUIRE(first.exit_code == 0);
  CHECK(first.out == second.out);

  // and a different seed still yields a deterministic verdict
  const CliResult third = run_cli("reach " + data("four_level.json") +
                                  " --from rho0 --to rho2 --format machine --seed 10");
  REQUIRE(third.exit_code == 0);
  CHECK(json::parse(third.out)["reachability"]["verdict"] == "reachable_numeric");
}

TEST_CASE("cli --out writes the same report to a file") {
  const std::string out_path = "/tmp/qcontrol_cli_report.json";
  const CliResult res = run_cli("classify " + data("two_level.json") +
                                " --format machine --out " + out_path);
  REQUIRE(res.exit_code == 0);
  CHECK(slurp(out_path) == res.out);
  std::remove(out_path.c_str());
}
