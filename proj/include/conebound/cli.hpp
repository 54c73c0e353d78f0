// Copyright 2026 The conebound Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace conebound {

// Process exit codes of the command-line tool. Stable; scripts depend on them.
enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailed = 1,
  kExitUsage = 2,  // also unreadable or malformed input files
  kExitValidation = 3,
  kExitBudget = 4,
  kExitMissingHidden = 5,
  kExitRejectionCap = 6,
  kExitInternal = 70,
};

// Entry point behind the `conebound` executable. args[0] is the program name.
// Results go to `out`; failures are reported on `err` as a single JSON
// object {"error": {"code", "exit", "message", ...}}.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace conebound
