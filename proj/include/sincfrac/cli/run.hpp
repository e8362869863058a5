/*
   Copyright 2026, the sincfrac authors.

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

#include "sincfrac/cli/emit.hpp"
#include "sincfrac/cli/scenario.hpp"

namespace sincfrac::cli {

constexpr int kExitOk = 0;
constexpr int kExitNumeric = 1;
constexpr int kExitConfig = 2;

/// Computed artifact of a scenario, before serialization.
struct Outcome {
    Table table;
    Plot plot;
    std::size_t flagged = 0;  // rows or points that failed or hit a singularity
};

/// Runs the computation. Per-point numeric failures are flagged in the
/// outcome rather than thrown.
Outcome compute(const ScenarioConfig& cfg);

/// Computes and writes the artifacts. Returns 0, or 1 when any point was
/// flagged or an output could not be written.
int run_scenario(const ScenarioConfig& cfg, std::ostream& out, std::ostream& err);

/// Full entry point: parse, run, map errors to exit codes.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sincfrac::cli
