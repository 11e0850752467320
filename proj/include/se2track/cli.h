// Copyright 2026 The se2track Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SE2TRACK_CLI_H_
#define SE2TRACK_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace se2track {

// Exit codes: 0 success, 1 parse/validation failure, 2 numerical
// divergence, 3 verify-check failure.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitDivergence = 2;
inline constexpr int kExitCheckFailed = 3;

// Runs the command line (without argv[0]):
//   run <scenario> [--out <dir>] [--dt <s>] [--duration <s>] [--seed <n>]
//   verify <scenario> --check <name> --tol <x>
//   examples [--dir <scenario dir>]
// Output goes to `out` and `err`; returns the process exit code.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace se2track

#endif  // SE2TRACK_CLI_H_
