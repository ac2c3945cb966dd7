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

#include <openssl/evp.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <memory>
#include <ostream>
#include <sstream>

#include "eamtp/error.hpp"

namespace eamtp {
namespace {

nlohmann::json number_or_null(double v) {
  if (std::isnan(v)) return nullptr;
  return v;
}

double number_from(const nlohmann::json& j) {
  if (j.is_null()) return std::nan("");
  return j.get<double>();
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  std::array<char, 32> buf{};
  std::snprintf(buf.data(), buf.size(), "%.17g", v);
  return buf.data();
}

double parse_double(std::string_view text) {
  if (text == "nan") return std::nan("");
  const std::string s(text);
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size()) {
    throw InvalidInput("malformed number '" + s + "'");
  }
  return v;
}

nlohmann::json to_json(const ComplexMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::json to_json(const ProtocolReport& rep) {
  nlohmann::json j;
  j["schema_version"] = kSchemaVersion;
  j["protocol"] = protocol_name(rep.protocol);
  j["input"] = {{"alpha", {rep.alpha.real(), rep.alpha.imag()}},
                {"beta", {rep.beta.real(), rep.beta.imag()}}};
  j["r"] = rep.r;
  j["q"] = rep.q;
  j["eam_probability"] = rep.eam_probability;
  j["conditional_success"] = number_or_null(rep.conditional_success);
  j["unconditional_success"] = number_or_null(rep.unconditional_success);
  j["g_tot"] = number_or_null(rep.conditional_success);
  j["mean_fidelity"] = number_or_null(rep.mean_fidelity_for_input);
  j["degenerate"] = rep.degenerate;
  j["warnings"] = rep.warnings;
  nlohmann::json branches = nlohmann::json::array();
  for (const BranchOutcome& b : rep.branches) {
    nlohmann::json bj;
    bj["label"] = b.label;
    bj["probability"] = number_or_null(b.conditional_probability);
    bj["wm_success"] = number_or_null(b.wm_success);
    bj["fidelity"] = number_or_null(b.fidelity);
    bj["output_state"] = b.output_state ? to_json(b.output_state->matrix()) : nlohmann::json();
    branches.push_back(std::move(bj));
  }
  j["branches"] = std::move(branches);
  return j;
}

std::vector<SweepRow> sweep_rows(const SweepResult& res) {
  std::vector<SweepRow> rows;
  const std::string name(protocol_name(res.protocol));
  for (std::size_t i = 0; i < res.grid.r_values.size(); ++i) {
    for (std::size_t j = 0; j < res.grid.q_values.size(); ++j) {
      rows.push_back({name, res.grid.r_values[i], res.grid.q_values[j], res.avg_fidelity[i][j],
                      res.conditional_success[i][j], res.unconditional_success[i][j]});
    }
  }
  return rows;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << kSweepHeader << '\n';
  for (const SweepRow& r : rows) {
    out << r.protocol << ',' << format_double(r.r) << ',' << format_double(r.q) << ','
        << format_double(r.avg_fidelity) << ',' << format_double(r.conditional_success) << ','
        << format_double(r.unconditional_success) << '\n';
  }
}

std::vector<SweepRow> read_sweep_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kSweepHeader) {
    throw InvalidInput("sweep CSV header mismatch");
  }
  std::vector<SweepRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto cells = split_csv_line(line);
    if (cells.size() != 6) throw InvalidInput("sweep CSV row needs 6 columns: " + line);
    rows.push_back({cells[0], parse_double(cells[1]), parse_double(cells[2]),
                    parse_double(cells[3]), parse_double(cells[4]), parse_double(cells[5])});
  }
  return rows;
}

nlohmann::json sweep_rows_to_json(const std::vector<SweepRow>& rows) {
  nlohmann::json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["columns"] = split_csv_line(std::string(kSweepHeader));
  nlohmann::json data = nlohmann::json::array();
  for (const SweepRow& r : rows) {
    data.push_back({r.protocol, r.r, r.q, number_or_null(r.avg_fidelity),
                    number_or_null(r.conditional_success), number_or_null(r.unconditional_success)});
  }
  doc["rows"] = std::move(data);
  return doc;
}

std::vector<SweepRow> sweep_rows_from_json(const nlohmann::json& doc) {
  if (doc.value("schema_version", 0) != kSchemaVersion) {
    throw InvalidInput("unsupported sweep schema version");
  }
  std::vector<SweepRow> rows;
  for (const auto& r : doc.at("rows")) {
    if (!r.is_array() || r.size() != 6) throw InvalidInput("sweep JSON row needs 6 entries");
    rows.push_back({r[0].get<std::string>(), number_from(r[1]), number_from(r[2]),
                    number_from(r[3]), number_from(r[4]), number_from(r[5])});
  }
  return rows;
}

std::vector<DecompositionRow> decomposition_rows(const std::vector<double>& r_values,
                                                 const std::vector<double>& delta_values) {
  const auto table = decomposition_sweep(r_values, delta_values);
  const auto flags = row_argmax(table);
  std::vector<DecompositionRow> rows;
  for (std::size_t i = 0; i < r_values.size(); ++i) {
    for (std::size_t j = 0; j < delta_values.size(); ++j) {
      rows.push_back({r_values[i], delta_values[j], table[i][j], flags[i][j]});
    }
  }
  return rows;
}

void write_decomposition_csv(std::ostream& out, const std::vector<DecompositionRow>& rows) {
  out << kDecompositionHeader << '\n';
  for (const DecompositionRow& r : rows) {
    out << format_double(r.r) << ',' << format_double(r.delta) << ','
        << format_double(r.recoverable_probability) << ',' << (r.is_row_argmax ? 1 : 0) << '\n';
  }
}

nlohmann::json decomposition_rows_to_json(const std::vector<DecompositionRow>& rows) {
  nlohmann::json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["columns"] = split_csv_line(std::string(kDecompositionHeader));
  nlohmann::json data = nlohmann::json::array();
  for (const DecompositionRow& r : rows) {
    data.push_back({r.r, r.delta, r.recoverable_probability, r.is_row_argmax});
  }
  doc["rows"] = std::move(data);
  return doc;
}

nlohmann::json RunManifest::to_json() const {
  nlohmann::json j;
  j["schema_version"] = kSchemaVersion;
  j["tool_version"] = kToolVersion;
  j["command_line"] = command_line;
  j["parameters"] = parameters;
  j["outputs"] = output_sha256;
  return j;
}

std::string sha256_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1) {
    throw IoError("sha256 initialisation failed");
  }
  std::array<char, 1 << 16> buf{};
  while (in) {
    in.read(buf.data(), buf.size());
    if (in.gcount() > 0) EVP_DigestUpdate(ctx.get(), buf.data(), static_cast<std::size_t>(in.gcount()));
  }
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  EVP_DigestFinal_ex(ctx.get(), md.data(), &len);
  static constexpr char kHex[] = "0123456789abcdef";
  std::string hex;
  for (unsigned int i = 0; i < len; ++i) {
    hex += kHex[md[i] >> 4];
    hex += kHex[md[i] & 0xF];
  }
  return hex;
}

}  // namespace eamtp
