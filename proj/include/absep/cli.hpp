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

// Command-line front end. `run_cli` is the whole program minus process
// plumbing so tests can drive it in-process.

#ifndef ABSEP_CLI_HPP
#define ABSEP_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace absep::cli {

enum ExitCode : int {
  kSuccess = 0,
  kParseError = 1,
  kDomainError = 2,
  kNumericalError = 3,
};

/// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace absep::cli

#endif  // ABSEP_CLI_HPP
