// Copyright 2026 The lowdeg Authors
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

// The `lowdeg` command line, callable in-process so tests can drive it
// without spawning a shell.

#ifndef LOWDEG_CLI_HPP_
#define LOWDEG_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace lowdeg::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitResourceCap = 3;

/// Environment variable that overrides the oracle's point-count cap.
inline constexpr const char* kOracleCapEnv = "LOWDEG_ORACLE_CAP";

/// `args` excludes the program name. Files named by flags are written
/// atomically; when no output file is given the primary result goes to
/// `out`. Diagnostics go to `err`. Returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace lowdeg::cli

#endif  // LOWDEG_CLI_HPP_
