// Copyright 2026 The fixposit Authors
// SPDX-License-Identifier: Apache-2.0
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

#ifndef FIXPOSIT_CLI_HPP_
#define FIXPOSIT_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace fixposit {

inline constexpr const char* kToolName = "fixposit";
inline constexpr const char* kToolVersion = "0.1.0";

/// Exit codes of run_cli.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;  // well-formed flags with an invalid value
inline constexpr int kExitUsage = 2;    // unknown flags, missing or conflicting options

/// Runs the command line `args` (without the program name), writing reports
/// to `out` and diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fixposit

#endif  // FIXPOSIT_CLI_HPP_
