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

#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "eamtp/analytics.hpp"
#include "eamtp/protocols.hpp"

namespace eamtp {

inline constexpr int kSchemaVersion = 1;
inline constexpr std::string_view kToolVersion = "0.1.0";

/// %.17g, with "nan" for NaN.
std::string format_double(double v);
/// Inverse of format_double. Throws InvalidInput on malformed text.
double parse_double(std::string_view text);

nlohmann::json to_json(const ComplexMatrix& m);
nlohmann::json to_json(const ProtocolReport& rep);

/// One long-format sweep row. Column order is fixed:
/// protocol,r,q,avg_fidelity,conditional_success,unconditional_success
struct SweepRow {
  std::string protocol;
  double r = 0.0;
  double q = 0.0;
  double avg_fidelity = 0.0;
  double conditional_success = 0.0;
  double unconditional_success = 0.0;
};

inline constexpr std::string_view kSweepHeader =
    "protocol,r,q,avg_fidelity,conditional_success,unconditional_success";

/// Rows in grid order: r outer, q inner.
std::vector<SweepRow> sweep_rows(const SweepResult& res);

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);
std::vector<SweepRow> read_sweep_csv(std::istream& in);
/// NaN cells become null.
nlohmann::json sweep_rows_to_json(const std::vector<SweepRow>& rows);
std::vector<SweepRow> sweep_rows_from_json(const nlohmann::json& doc);

inline constexpr std::string_view kDecompositionHeader = "r,delta,recoverable_probability,is_row_argmax";

struct DecompositionRow {
  double r = 0.0;
  double delta = 0.0;
  double recoverable_probability = 0.0;
  bool is_row_argmax = false;
};

std::vector<DecompositionRow> decomposition_rows(const std::vector<double>& r_values,
                                                 const std::vector<double>& delta_values);
void write_decomposition_csv(std::ostream& out, const std::vector<DecompositionRow>& rows);
nlohmann::json decomposition_rows_to_json(const std::vector<DecompositionRow>& rows);

/// Provenance sidecar written next to every output file.
struct RunManifest {
  std::vector<std::string> command_line;
  nlohmann::json parameters = nlohmann::json::object();
  std::map<std::string, std::string> output_sha256;

  nlohmann::json to_json() const;
};

/// Lower-case hex SHA-256 of a file's bytes. Throws IoError if unreadable.
std::string sha256_file(const std::filesystem::path& path);

}  // namespace eamtp
