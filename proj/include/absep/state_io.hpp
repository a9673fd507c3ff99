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

// JSON state files and report serialisation.
//
// State file layout:
//   {"dA": 2, "dB": d, "matrix": [[[re, im], ...], ...], "label": "..."}
// with a 2d x 2d row-major matrix. Doubles are written in shortest
// round-trip form, so write-then-read is bit-exact.

#ifndef ABSEP_STATE_IO_HPP
#define ABSEP_STATE_IO_HPP

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"

#include "absep/criteria.hpp"
#include "absep/linalg.hpp"
#include "absep/roots.hpp"

namespace absep {

/// Malformed JSON or a structurally wrong state file.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

struct StateFile {
  DensityMatrix state;
  std::optional<std::string> label;
};

nlohmann::json state_to_json(const DensityMatrix& rho,
                             const std::optional<std::string>& label = std::nullopt);
std::string serialize_state(const DensityMatrix& rho,
                            const std::optional<std::string>& label = std::nullopt);

/// Throws ParseError for syntax / structure problems and DomainError when the
/// matrix violates a density-matrix invariant.
StateFile parse_state(std::string_view text);

StateFile read_state_file(const std::filesystem::path& path);
void write_state_file(const std::filesystem::path& path, const DensityMatrix& rho,
                      const std::optional<std::string>& label = std::nullopt);

nlohmann::json report_to_json(const ClassificationReport& report);
nlohmann::json intervals_to_json(const std::vector<Interval>& intervals);

}  // namespace absep

#endif  // ABSEP_STATE_IO_HPP
