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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace quditsim {

struct CheckResult {
    std::string id;      // "<suite>/<case>"
    bool pass = false;
    std::string detail;  // worst deviation or failure description
};

struct VerifyOptions {
    std::uint64_t seed = 20260819;
    /// Worker threads for fanning out cases; 0 = pick from hardware. Each
    /// case derives its randomness from (seed, case id), so results do not
    /// depend on scheduling, and they are always reported sorted by id.
    int workers = 0;
};

/// Suite names accepted by run_verify, in report order.
const std::vector<std::string>& verify_suite_names();

/// Runs one named suite, or every suite for "all". Results sorted by id.
std::vector<CheckResult> run_verify(const std::string& suite, const VerifyOptions& options = {});

}  // namespace quditsim
