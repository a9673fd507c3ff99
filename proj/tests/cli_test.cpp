// Copyright 2026 The absep Authors
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

#include "absep/cli.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "json.hpp"

#include "absep/constructors.hpp"
#include "absep/state_io.hpp"

using namespace absep;
using nlohmann::json;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;

  json doc() const { return json::parse(out); }
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::path(testing::TempDir()) / name).string();
}

std::string write_state(const std::string& name, const DensityMatrix& rho) {
  const auto path = temp_path(name);
  write_state_file(path, rho);
  return path;
}

std::string write_text(const std::string& name, const std::string& text) {
  const auto path = temp_path(name);
  std::ofstream(path) << text;
  return path;
}

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(cli, check_maximally_mixed) {
  const auto r = run({"check", write_state("cli_mixed.json", werner(0.0))});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = r.doc();
  EXPECT_EQ(doc["absep_class"], "ABS_INTERIOR");
  EXPECT_EQ(doc["in_maximal_ball"], true);
}

TEST(cli, check_sixteen_seventeenths) {
  const std::vector<double> w = {8.0 / 17, 4.0 / 17, 4.0 / 17, 1.0 / 17};
  const auto r = run({"check", write_state("cli_1617.json", diagonal_state(w, 2))});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.doc()["absep_class"], "ABS_BOUNDARY");
  EXPECT_EQ(r.doc()["in_maximal_ball"], false);
}

TEST(cli, check_bell_state) {
  const auto r = run({"check", write_state("cli_bell.json", werner(1.0))});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.doc()["entanglement_status"], "NPT_ENTANGLED");
  EXPECT_EQ(r.doc()["absep_class"], "NOT_ABS_SEP");
}

TEST(cli, check_exit_codes) {
  EXPECT_EQ(run({"check", write_text("cli_garbage.json", "{oops")}).code, 1);
  EXPECT_EQ(run({"check", temp_path("cli_missing_file.json")}).code, 1);
  const auto bad_trace = run({"check", write_text("cli_trace.json",
      R"({"dA":2,"dB":2,"matrix":[[[0.5,0],[0,0],[0,0],[0,0]],[[0,0],[0.25,0],[0,0],[0,0]],)"
      R"([[0,0],[0,0],[0.25,0],[0,0]],[[0,0],[0,0],[0,0],[0.25,0]]]})")});
  EXPECT_EQ(bad_trace.code, 2);
  EXPECT_NE(bad_trace.err.find("trace"), std::string::npos) << bad_trace.err;
}

TEST(cli, usage_errors_exit_one) {
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({"generate", "banana"}).code, 1);
  EXPECT_EQ(run({"threshold", "--channel", "pdc", "--x", "1"}).code, 1);
  EXPECT_EQ(run({"threshold", "--channel", "dpc", "--x", "1", "--entropy", "0.5"}).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(cli, generate_outside_ball_defaults) {
  const auto r = run({"generate", "outside-ball", "--defaults"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = r.doc();
  EXPECT_NEAR(doc["generation"]["q_star"].get<double>(), 16.0 / 17, 1e-9);
  EXPECT_EQ(doc["generation"]["outside_ball"], true);
  EXPECT_EQ(doc["report"]["absep_class"], "ABS_BOUNDARY");
}

TEST(cli, generate_kappa_family) {
  const auto r = run({"generate", "kappa-family", "--kappa", "2.5", "--lambda4", "0.1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto s = r.doc()["spectrum"].get<std::vector<double>>();
  ASSERT_EQ(s.size(), 4u);
  EXPECT_NEAR(s[0], 0.483114, 1e-6);
  EXPECT_NEAR(s[1], 0.25, 1e-12);
  EXPECT_NEAR(s[2], 0.166886, 1e-6);
  EXPECT_NEAR(s[3], 0.1, 1e-12);
}

TEST(cli, generate_extreme_is_deterministic_and_reloadable) {
  const auto a = temp_path("cli_extreme_a.json");
  const auto b = temp_path("cli_extreme_b.json");
  ASSERT_EQ(run({"generate", "extreme", "--d", "3", "--seed", "7", "--out", a}).code, 0);
  ASSERT_EQ(run({"generate", "extreme", "--d", "3", "--seed", "7", "--out", b}).code, 0);
  EXPECT_EQ(read_text(a), read_text(b));
  const auto check = run({"check", a});
  ASSERT_EQ(check.code, 0);
  EXPECT_EQ(check.doc()["is_extreme_certified"], true);
  const auto other = temp_path("cli_extreme_c.json");
  ASSERT_EQ(run({"generate", "extreme", "--d", "3", "--seed", "8", "--out", other}).code, 0);
  EXPECT_NE(read_text(a), read_text(other));
}

TEST(cli, generate_other_kinds) {
  EXPECT_EQ(run({"generate", "werner", "--q", "0.2"}).doc()["report"]["absep_class"],
            "ABS_INTERIOR");
  EXPECT_EQ(run({"generate", "pure", "--x", "1.5707963267948966"}).doc()["report"]
                ["entanglement_status"],
            "NPT_ENTANGLED");
  EXPECT_EQ(run({"generate", "rank3-psi", "--x", "1.0", "--phi", "0.5"}).doc()["report"]
                ["is_extreme_certified"],
            true);
  const auto d3 = run({"generate", "outside-ball", "--d", "3", "--weights",
                       "0.4,0.15,0.15,0.15,0.15"});
  ASSERT_EQ(d3.code, 0) << d3.err;
  EXPECT_NEAR(std::abs(d3.doc()["report"]["eq1_lhs"].get<double>()), 0.0, 1e-9);
}

TEST(cli, generate_parameter_errors_exit_two) {
  const auto bad_q = run({"generate", "werner", "--q", "1.5"});
  EXPECT_EQ(bad_q.code, 2);
  EXPECT_NE(bad_q.err.find("q"), std::string::npos);
  EXPECT_EQ(run({"generate", "kappa-family", "--kappa", "0.5", "--lambda4", "0.1"}).code, 2);
  EXPECT_EQ(run({"generate", "extreme", "--d", "1"}).code, 2);
  EXPECT_EQ(run({"generate", "outside-ball", "--weights", "0.5,0.5"}).code, 2);
}

TEST(cli, threshold_dpc_entropy) {
  const auto r = run({"threshold", "--channel", "dpc", "--entropy", "0.7715"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NEAR(r.doc()["one_minus_p_sep"].get<double>(), 0.29133, 2e-3);
  EXPECT_NEAR(r.doc()["one_minus_p_abs"].get<double>(), 0.36114, 2e-3);
}

TEST(cli, threshold_adc_interval) {
  const auto r = run({"threshold", "--channel", "adc", "--x", "3.14159"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto iv = r.doc()["absep_intervals"];
  ASSERT_EQ(iv.size(), 1u);
  EXPECT_NEAR(iv[0][0].get<double>(), 0.302, 1e-2);
  EXPECT_NEAR(iv[0][1].get<double>(), 0.6998, 1e-2);
}

TEST(cli, threshold_dpc_maximally_entangled_gap) {
  const auto r = run({"threshold", "--channel", "dpc", "--x", "1.5708"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NEAR(r.doc()["gap"].get<double>(), 0.0, 1e-3);
}

TEST(cli, threshold_requires_angle_or_entropy) {
  EXPECT_NE(run({"threshold", "--channel", "dpc"}).code, 0);
  EXPECT_EQ(run({"threshold", "--channel", "dpc", "--x", "5"}).code, 2);
  EXPECT_EQ(run({"threshold", "--channel", "dpc", "--entropy", "2"}).code, 2);
}

TEST(cli, sweep_werner_csv) {
  const auto path = temp_path("cli_werner.csv");
  const auto r = run({"sweep", "--mode", "werner-pdc", "--res", "100", "--out", path});
  ASSERT_EQ(r.code, 0) << r.err;
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "axis1,axis2,class");
  std::size_t rows = 0;
  double last_abs_q = -1.0;
  double first_ent_q = 2.0;
  while (std::getline(in, line)) {
    ++rows;
    std::stringstream ss(line);
    std::string a, b, c;
    std::getline(ss, a, ',');
    std::getline(ss, b, ',');
    std::getline(ss, c, ',');
    if (std::stod(a) != 0.0) continue;
    const double q = std::stod(b);
    if (c == "ABS") last_abs_q = std::max(last_abs_q, q);
    if (c == "ENT") first_ent_q = std::min(first_ent_q, q);
  }
  EXPECT_EQ(rows, 100u * 100u);
  EXPECT_NEAR(last_abs_q, 1.0 / 3, 0.011);
  EXPECT_NEAR(first_ent_q, 1.0 / 3, 0.011);
  EXPECT_LT(last_abs_q, first_ent_q);
  EXPECT_EQ(r.doc()["counts"]["UND"], 0);
}

TEST(cli, sweep_errors) {
  EXPECT_EQ(run({"sweep", "--mode", "dpc", "--res", "5000", "--out", temp_path("x.csv")}).code,
            2);
  EXPECT_EQ(run({"sweep", "--mode", "dpc", "--res", "5", "--out", "/nonexistent/dir/x.csv"}).code,
            1);
}

TEST(cli, tol_flag_widens_boundary_band) {
  const auto path = write_state("cli_near.json", diagonal_state(std::vector<double>{0.26, 0.25, 0.25, 0.24}, 2));
  EXPECT_EQ(run({"check", path}).doc()["absep_class"], "ABS_INTERIOR");
  EXPECT_EQ(run({"--tol", "1", "check", path}).doc()["absep_class"], "ABS_BOUNDARY");
}

TEST(cli, table1_json) {
  const auto r = run({"table1", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = r.doc();
  ASSERT_EQ(doc.size(), 3u);
  EXPECT_NEAR(doc[0]["gap"].get<double>(), 0.0698, 2e-3);
  EXPECT_NEAR(doc[1]["gap"].get<double>(), 0.21197, 2e-3);
  EXPECT_NEAR(doc[2]["gap"].get<double>(), 0.0, 1e-3);
  for (const auto& row : doc) {
    EXPECT_EQ(row["check"].get<std::string>().rfind("ok", 0), 0u) << row["check"];
  }
}

TEST(cli, table1_text) {
  const auto r = run({"table1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("0.7715"), std::string::npos);
  EXPECT_EQ(r.out.find("DEVIATES"), std::string::npos);
}
