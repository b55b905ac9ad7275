// Copyright 2026 The quditsim Authors
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

#ifndef QUDITSIM_TOOLS_CLI_HPP_
#define QUDITSIM_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace quditsim::cli {

// Runs the command-line tool on `args` (program name excluded), writing
// results to `out` and diagnostics to `err`.
//
// Exit codes: 0 success, 1 runtime failure (e.g. a failing verify check or
// an invalid label), 2 usage error.
//
// All output for a given argument list is byte-identical across runs, with
// one documented exception: the elapsed-time fields of `bench`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quditsim::cli

#endif  // QUDITSIM_TOOLS_CLI_HPP_
