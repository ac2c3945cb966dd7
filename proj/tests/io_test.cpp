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

#include "eamtp/io.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "eamtp/error.hpp"

namespace eamtp {
namespace {

TEST(Format, SeventeenDigitsRoundTrip) {
  for (double v : {0.1, 1.0 / 3.0, 0.86923425233195045, 1e-300, 0.0, -2.5}) {
    EXPECT_EQ(parse_double(format_double(v)), v);
  }
  EXPECT_EQ(format_double(0.1), "0.10000000000000001");
  EXPECT_EQ(format_double(std::nan("")), "nan");
  EXPECT_TRUE(std::isnan(parse_double("nan")));
  EXPECT_THROW(parse_double("1.0x"), InvalidInput);
  EXPECT_THROW(parse_double(""), InvalidInput);
}

TEST(SweepCsv, HeaderAndRoundTripThroughJson) {
  const SweepGrid grid{{0.0, 0.5, 1.0}, {0.0, 0.3}};
  const auto rows = sweep_rows(sweep(Protocol::kCtpW, grid));
  std::ostringstream csv;
  write_sweep_csv(csv, rows);
  const std::string text = csv.str();
  EXPECT_EQ(text.substr(0, text.find('\n')), kSweepHeader);

  std::istringstream in(text);
  const auto parsed = read_sweep_csv(in);
  const auto back = sweep_rows_from_json(nlohmann::json::parse(sweep_rows_to_json(parsed).dump()));
  std::ostringstream again;
  write_sweep_csv(again, back);
  EXPECT_EQ(again.str(), text);
  // r = 1 is degenerate for the controlled W protocol.
  EXPECT_NE(text.find("ctp-w,1,0,nan,nan,nan"), std::string::npos);
}

TEST(SweepCsv, RejectsMalformed) {
  std::istringstream bad_header("protocol,r\n");
  EXPECT_THROW(read_sweep_csv(bad_header), InvalidInput);
  std::istringstream short_row(std::string(kSweepHeader) + "\nmr,0,0\n");
  EXPECT_THROW(read_sweep_csv(short_row), InvalidInput);
  EXPECT_THROW(sweep_rows_from_json(nlohmann::json{{"schema_version", 99}}), InvalidInput);
}

TEST(Decomposition, CsvColumns) {
  const auto rows = decomposition_rows({0.0, 0.5}, {0.0, 0.5, 1.5707963267948966});
  std::ostringstream out;
  write_decomposition_csv(out, rows);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, kDecompositionHeader);
  std::getline(in, line);
  EXPECT_EQ(line, "0,0,1,1");
  std::getline(in, line);
  EXPECT_EQ(line, "0,0.5,1,1");
  std::getline(in, line);
  std::getline(in, line);
  double r = 0.0, d = 0.0, v = 0.0;
  int flag = 0;
  ASSERT_EQ(std::sscanf(line.c_str(), "%lf,%lf,%lf,%d", &r, &d, &v, &flag), 4);
  EXPECT_EQ(r, 0.5);
  EXPECT_NEAR(v, 0.5, 1e-15);
  EXPECT_EQ(flag, 1);
  EXPECT_EQ(decomposition_rows_to_json(rows)["rows"].size(), 6u);
}

TEST(Report, JsonFields) {
  const ProtocolReport rep = run_tp_ew_w(std::sqrt(0.5), std::sqrt(0.5), 0.5, 0.5);
  const nlohmann::json j = to_json(rep);
  EXPECT_EQ(j["schema_version"], kSchemaVersion);
  EXPECT_EQ(j["protocol"], "tp-ew-w");
  EXPECT_NEAR(j["g_tot"].get<double>(), 2.0 / 3.0, 1e-14);
  EXPECT_EQ(j["branches"].size(), 4u);
  EXPECT_EQ(j["branches"][0]["output_state"].size(), 2u);
  const nlohmann::json deg = to_json(run_ctp_w(1.0, 0.0, 1.0));
  EXPECT_TRUE(deg["mean_fidelity"].is_null());
  EXPECT_TRUE(deg["degenerate"].get<bool>());
}

TEST(Manifest, Sha256) {
  const auto path = std::filesystem::temp_directory_path() / "eamtp_io_test_abc.txt";
  {
    std::ofstream f(path, std::ios::binary);
    f << "abc";
  }
  EXPECT_EQ(sha256_file(path), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  std::filesystem::remove(path);
  EXPECT_THROW(sha256_file(path), IoError);

  RunManifest m;
  m.command_line = {"sweep", "mr"};
  m.parameters = {{"seed", 0}};
  m.output_sha256["x.csv"] = "00";
  const nlohmann::json j = m.to_json();
  EXPECT_EQ(j["tool_version"], kToolVersion);
  EXPECT_FALSE(j.contains("timestamp"));
}

}  // namespace
}  // namespace eamtp
