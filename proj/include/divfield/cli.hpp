/*
   Copyright 2026 The divfield Authors

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

#ifndef DIVFIELD_CLI_HPP
#define DIVFIELD_CLI_HPP

#include <iosfwd>
#include <span>
#include <string>

namespace divfield::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitInternalError = 3;

/// Runs one command line (without the program name). All output goes to out
/// and diagnostics to err; the return value is the process exit code.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace divfield::cli

#endif  // DIVFIELD_CLI_HPP
