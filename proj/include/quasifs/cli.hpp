/*
   Copyright 2026 The quasifs Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace quasifs {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    exit_ok = 0,
    exit_axiom = 1,
    exit_integral = 2,
    exit_usage = 3,
    exit_inconsistent = 4,
};

/// Runs one `quasifs` subcommand. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace quasifs
