// Copyright 2026 The eamtp Authors
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

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
};

Result run(const std::string& args) {
  const std::string cmd = std::string(EAMTP_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir = fs::temp_directory_path() /
          ("eamtp_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir);
    fs::create_directories(dir);
  }
  void TearDown() override { fs::remove_all(dir); }
  std::string path(const std::string& name) const { return (dir / name).string(); }
  fs::path dir;
};

TEST_F(Cli, ProtocolReportJson) {
  const Result r = run("protocol tp-ew-w --x 0.5 --r 0.5 --q 0.5 --format json");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_NEAR(j["g_tot"].get<double>(), 2.0 / 3.0, 1e-12);
  EXPECT_EQ(j["schema_version"], 1);
}

TEST_F(Cli, ControlledWAllFidelitiesOne) {
  const Result r = run("protocol ctp-w --x 0.3 --r 0.4 --format json");
  ASSERT_EQ(r.code, 0);
  for (const auto& b : nlohmann::json::parse(r.out)["branches"]) {
    EXPECT_NEAR(b["fidelity"].get<double>(), 1.0, 1e-12);
  }
}

TEST_F(Cli, NoiselessProbabilitiesQuarter) {
  const Result r = run("protocol tp-ew-w --r 0 --q 0 --x 0.5 --format json");
  ASSERT_EQ(r.code, 0);
  for (const auto& b : nlohmann::json::parse(r.out)["branches"]) {
    EXPECT_NEAR(b["probability"].get<double>(), 0.25, 1e-12);
  }
}

TEST_F(Cli, InvalidInputExitsOne) {
  EXPECT_EQ(run("protocol nope --x 0.5").code, 1);
  EXPECT_EQ(run("protocol tp-ew-w --x 1.5").code, 1);
  EXPECT_EQ(run("protocol tp-ew-w --r 2").code, 1);
  EXPECT_EQ(run("protocol mr").code, 1);
  EXPECT_EQ(run("sweep tp-ew --r-grid 0.5,0.2").code, 1);
  EXPECT_EQ(run("sweep tp-ew --format xml").code, 1);
  EXPECT_EQ(run("--no-such-flag").code, 1);
  EXPECT_EQ(run("").code, 1);
}

TEST_F(Cli, UnwritableOutputExitsThree) {
  EXPECT_EQ(run("sweep mr --r-grid 0.5 --q-grid 0 --out /nonexistent/dir/x.csv").code, 3);
  EXPECT_EQ(run("sweep mr --config /nonexistent/cfg.json").code, 3);
}

TEST_F(Cli, SweepDiagonalAndMr) {
  Result r = run("sweep tp-ew --r-grid 0:0.1:0.9 --q-grid 0:0.1:0.9");
  ASSERT_EQ(r.code, 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "protocol,r,q,avg_fidelity,conditional_success,unconditional_success");
  int diagonal = 0;
  while (std::getline(in, line)) {
    double rv, qv, fid;
    char name[32];
    ASSERT_EQ(std::sscanf(line.c_str(), "%31[^,],%lf,%lf,%lf", name, &rv, &qv, &fid), 4);
    if (rv == qv) {
      EXPECT_NEAR(fid, 1.0, 1e-9);
      ++diagonal;
    }
  }
  EXPECT_EQ(diagonal, 10);

  r = run("sweep mr --r-grid 0:0.25:1 --q-grid 0");
  ASSERT_EQ(r.code, 0);
  std::istringstream mr(r.out);
  std::getline(mr, line);
  while (std::getline(mr, line)) {
    double rv, qv, fid, g;
    char name[32];
    ASSERT_EQ(std::sscanf(line.c_str(), "%31[^,],%lf,%lf,%lf,%lf", name, &rv, &qv, &fid, &g), 5);
    EXPECT_NEAR(g, (2.0 - rv - rv * rv) / 2.0, 1e-15);
  }
}

TEST_F(Cli, SweepBaselineMatchesClosedForm) {
  const Result r = run("sweep original-w --r-grid 0:0.05:1 --q-grid 0");
  ASSERT_EQ(r.code, 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    double rv, qv, fid;
    char name[32];
    ASSERT_EQ(std::sscanf(line.c_str(), "%31[^,],%lf,%lf,%lf", name, &rv, &qv, &fid), 4);
    EXPECT_NEAR(fid, (8.0 * std::sqrt(1.0 - rv) + 22.0 - 7.0 * rv) / 30.0, 1e-9);
  }
}

TEST_F(Cli, ManifestReproducesOutput) {
  const std::string out = path("ctp.csv");
  ASSERT_EQ(run("sweep ctp-bell --r-grid 0:0.2:1 --q-grid 0,0.5 --workers 2 --out " + out).code, 0);
  const auto manifest = nlohmann::json::parse(slurp(out + ".manifest.json"));
  EXPECT_EQ(manifest["parameters"]["protocol"], "ctp-bell");
  EXPECT_EQ(manifest["parameters"]["seed"], 0);
  EXPECT_EQ(manifest["outputs"]["ctp.csv"].get<std::string>().size(), 64u);

  const std::string again = path("again.csv");
  ASSERT_EQ(run("sweep --config " + out + ".manifest.json --out " + again).code, 0);
  EXPECT_EQ(slurp(out), slurp(again));
  EXPECT_EQ(manifest["outputs"]["ctp.csv"],
            nlohmann::json::parse(slurp(again + ".manifest.json"))["outputs"]["again.csv"]);
}

TEST_F(Cli, FlagsOverrideConfig) {
  const std::string cfg = path("cfg.json");
  std::ofstream(cfg) << R"({"protocol": "mr", "r-grid": "0,0.5", "q-grid": "0", "format": "json"})";
  Result r = run("sweep --config " + cfg);
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["rows"].size(), 2u);
  r = run("sweep --config " + cfg + " --format csv --r-grid 0.25");
  ASSERT_EQ(r.code, 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  std::getline(in, line);
  double rv, qv, fid, g, gu;
  char name[32];
  ASSERT_EQ(std::sscanf(line.c_str(), "%31[^,],%lf,%lf,%lf,%lf,%lf", name, &rv, &qv, &fid, &g, &gu), 6);
  EXPECT_EQ(rv, 0.25);
  EXPECT_EQ(g, 0.84375);
  EXPECT_NEAR(fid, 0.92377380014075938, 1e-12);
  EXPECT_FALSE(std::getline(in, line));
}

TEST_F(Cli, CsvJsonRoundTrip) {
  const Result csv = run("sweep tp-ew-bell --r-grid 0,0.3 --q-grid 0.1,0.6");
  const Result json = run("sweep tp-ew-bell --r-grid 0,0.3 --q-grid 0.1,0.6 --format json");
  ASSERT_EQ(csv.code, 0);
  ASSERT_EQ(json.code, 0);
  const auto doc = nlohmann::json::parse(json.out);
  std::istringstream in(csv.out);
  std::string line;
  std::getline(in, line);
  for (const auto& row : doc["rows"]) {
    std::getline(in, line);
    double vals[5];
    char name[32];
    ASSERT_EQ(std::sscanf(line.c_str(), "%31[^,],%lf,%lf,%lf,%lf,%lf", name, &vals[0], &vals[1],
                          &vals[2], &vals[3], &vals[4]),
              6);
    EXPECT_EQ(row[0].get<std::string>(), name);
    for (int k = 0; k < 5; ++k) EXPECT_EQ(row[k + 1].get<double>(), vals[k]);
  }
}

TEST_F(Cli, DecompositionFlags) {
  const Result r = run("decomposition --r-grid 0,0.5 --delta-steps 8");
  ASSERT_EQ(r.code, 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "r,delta,recoverable_probability,is_row_argmax");
  int flagged = 0;
  while (std::getline(in, line)) {
    double rv, d, v;
    int flag;
    ASSERT_EQ(std::sscanf(line.c_str(), "%lf,%lf,%lf,%d", &rv, &d, &v, &flag), 4);
    if (rv == 0.0) EXPECT_NEAR(v, 1.0, 1e-12);
    if (rv == 0.5 && flag) {
      ++flagged;
      EXPECT_NEAR(v, 0.5, 1e-12);
    }
  }
  EXPECT_EQ(flagged, 5);  // 0, pi/2, pi, 3pi/2, 2pi
  const Result probe = run("decomposition --r-grid 0.3 --probe-unitaries 100 --format json");
  ASSERT_EQ(probe.code, 0);
  const auto doc = nlohmann::json::parse(probe.out);
  EXPECT_LE(doc["unitary_probe"]["rows"][0]["max_recoverable_probability"].get<double>(),
            0.7 + 1e-12);
}

TEST_F(Cli, ValidateAnalyticAndNegativeControl) {
  const Result ok = run("validate analytic");
  ASSERT_EQ(ok.code, 0);
  EXPECT_TRUE(nlohmann::json::parse(ok.out)["passed"].get<bool>());
  const Result bad = run("validate analytic --perturb-formula tp-ew.total_success");
  EXPECT_EQ(bad.code, 2);
  EXPECT_FALSE(nlohmann::json::parse(bad.out)["passed"].get<bool>());
}

TEST_F(Cli, ValidateMcSmall) {
  const Result r = run("validate mc --seed 42 --n 20000");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(run("validate quantum").code, 1);
}

}  // namespace
