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

#include "absep/state_io.hpp"

#include <fstream>
#include <sstream>

#include <fmt/core.h>

#include "absep/errors.hpp"

namespace absep {

using nlohmann::json;

json state_to_json(const DensityMatrix& rho, const std::optional<std::string>& label) {
  json rows = json::array();
  const auto& m = rho.matrix();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(std::move(row));
  }
  json doc = {{"dA", rho.dim_a()}, {"dB", rho.dim_b()}, {"matrix", std::move(rows)}};
  if (label) doc["label"] = *label;
  return doc;
}

std::string serialize_state(const DensityMatrix& rho, const std::optional<std::string>& label) {
  return state_to_json(rho, label).dump(2) + "\n";
}

StateFile parse_state(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(fmt::format("invalid JSON: {}", e.what()));
  }
  if (!doc.is_object()) throw ParseError("state file must be a JSON object");
  for (const char* key : {"dA", "dB", "matrix"}) {
    if (!doc.contains(key)) throw ParseError(fmt::format("state file is missing \"{}\"", key));
  }
  if (!doc["dA"].is_number_unsigned() || !doc["dB"].is_number_unsigned()) {
    throw ParseError("\"dA\" and \"dB\" must be non-negative integers");
  }
  const auto dim_a = doc["dA"].get<std::size_t>();
  const auto dim_b = doc["dB"].get<std::size_t>();
  if (dim_a != 2) throw DomainError(fmt::format("dA must be 2, got {}", dim_a));
  if (dim_b < 2 || 2 * dim_b > tol::kMaxDimension) {
    throw DomainError(fmt::format("dB = {} outside [2, {}]", dim_b, tol::kMaxDimension / 2));
  }

  const json& rows = doc["matrix"];
  const std::size_t n = 2 * dim_b;
  if (!rows.is_array() || rows.size() != n) {
    throw ParseError(fmt::format("\"matrix\" must be an array of {} rows", n));
  }
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const json& row = rows[i];
    if (!row.is_array() || row.size() != n) {
      throw ParseError(fmt::format("matrix row {} must have {} entries", i, n));
    }
    for (std::size_t j = 0; j < n; ++j) {
      const json& entry = row[j];
      if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
          !entry[1].is_number()) {
        throw ParseError(fmt::format("matrix entry ({}, {}) must be [re, im]", i, j));
      }
      m(i, j) = Complex(entry[0].get<double>(), entry[1].get<double>());
    }
  }

  std::optional<std::string> label;
  if (doc.contains("label")) {
    if (!doc["label"].is_string()) throw ParseError("\"label\" must be a string");
    label = doc["label"].get<std::string>();
  }
  return {DensityMatrix(std::move(m), dim_b), std::move(label)};
}

StateFile read_state_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(fmt::format("cannot read {}", path.string()));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_state(buffer.str());
}

void write_state_file(const std::filesystem::path& path, const DensityMatrix& rho,
                      const std::optional<std::string>& label) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error(fmt::format("cannot write {}", path.string()));
  out << serialize_state(rho, label);
  if (!out) throw std::runtime_error(fmt::format("failed writing {}", path.string()));
}

json report_to_json(const ClassificationReport& r) {
  return {
      {"dims", {r.dim_a, r.dim_b}},
      {"rank", r.rank},
      {"eq1_lhs", r.eq1_lhs},
      {"purity", r.purity},
      {"in_maximal_ball", r.in_maximal_ball},
      {"pt_min_eig", r.pt_min_eig},
      {"entanglement_status", std::string(to_string(r.entanglement_status))},
      {"absep_class", std::string(to_string(r.absep_class))},
      {"is_extreme_certified", r.is_extreme_certified},
      {"spectrum", r.spectrum},
  };
}

json intervals_to_json(const std::vector<Interval>& intervals) {
  json out = json::array();
  for (const auto& iv : intervals) out.push_back({iv.lo, iv.hi});
  return out;
}

}  // namespace absep
