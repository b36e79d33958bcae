// Copyright 2026 The lingds Authors
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
//
// Command line front end, callable in-process for testing. Exit codes:
// 0 success, 1 unreadable input, 2 validation errors, 3 internal error.

#ifndef LINGDS_CLI_H_
#define LINGDS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace lingds::cli {

// Runs the command line given argv-style arguments (program name
// excluded). Writes results to `out` and diagnostics to `err`.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace lingds::cli

#endif  // LINGDS_CLI_H_
