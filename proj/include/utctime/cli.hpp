// Copyright 2026 The utctime Authors
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

// Command-line front end. Checked mode (the default) validates inputs
// and maps error kinds to exit codes; --plain runs the total conversion
// algorithms with no validity judgment and exits 0.
//
// Exit codes: 0 success; 1 InvalidDate, InvalidTime, InvalidLeapTable
// or ParseError; 2 OutOfRange. Errors are a single stderr line of the
// form `error: <kind>: <detail>`.

#ifndef UTCTIME_CLI_HPP_
#define UTCTIME_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace utctime::cli {

// Dispatches one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace utctime::cli

#endif  // UTCTIME_CLI_HPP_
