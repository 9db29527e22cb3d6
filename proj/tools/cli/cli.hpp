// Copyright 2026 The hornrmt Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef HORNRMT_TOOLS_CLI_HPP
#define HORNRMT_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace hornrmt::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNumerical = 1;
inline constexpr int kExitUsage = 2;

/// Runs the hornrmt command line. `args` excludes the program name. Returns
/// 0 on success, 2 for argument or domain errors, 1 for numerical failures
/// and failed --verify checks.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hornrmt::cli

#endif  // HORNRMT_TOOLS_CLI_HPP
