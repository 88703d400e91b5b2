// Copyright 2026 The qamhls Authors
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

#ifndef QAMHLS_CLI_H_
#define QAMHLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace qamhls {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitNotConverged = 3;

// Runs the command line (args excludes the program name). Reports go to
// `out` unless --out names a file; diagnostics go to `err`.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace qamhls

#endif  // QAMHLS_CLI_H_
