/* Copyright 2026 The seldkit Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef SELD_CLI_H_
#define SELD_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace seld {

// Exit codes.
constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitUsage = 2;

// Runs the `seldkit` command line. `args` excludes the program name.
// Machine-readable results go to `out`, diagnostics to `err`; structured logs
// go to stderr through the shared logger.
int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Embedded invariant suite behind `seldkit selftest`. Prints one PASS/FAIL
// line per check and returns the number of failures.
int RunSelfTest(std::ostream& out);

}  // namespace seld

#endif  // SELD_CLI_H_
