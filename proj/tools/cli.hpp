/*
    Licensed under the Apache License, Version 2.0 (the "License");
    you may not use this file except in compliance with the License.
    You may obtain a copy of the License at

        https://www.apache.org/licenses/LICENSE-2.0

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

namespace odrl::cli {

/// Runs the `odrl` command line. `args` excludes the program name. The
/// structured result (or error object) goes to `out`, diagnostics to `err`.
/// Returns 0 (valid / no conflict), 1 (violation / conflict) or 2 (error).
int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}// namespace odrl::cli
