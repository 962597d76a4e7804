// Copyright 2026 The statent Authors
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

#pragma once

// End-to-end commands: state input -> canonical frame -> joint measurement ->
// inversion -> (LP | shot simulation) -> Report.

#include <optional>
#include <string>
#include <vector>

#include "statent/report.hpp"

namespace statent {

/// Reduces any accepted state input to a qubit Bloch vector.
StateSummary resolve_state(const StateSpec &spec);

Report cmd_witness(const RunConfig &config);
Report cmd_separability(const RunConfig &config);
Report cmd_sample(const RunConfig &config);

/// Dispatches witness, separability, or sample. Sweep is tabular; use cmd_sweep.
Report run_command(Command command, const RunConfig &config);

struct SweepRow {
    double s_norm = 0.0;
    double eta = 0.0;
    double ratio = 0.0;
    double min_entry = 0.0;
    bool nonclassical = false;
    std::optional<bool> lp_feasible;
    std::optional<SeparabilityRegime> lp_regime;
};

struct SweepResult {
    /// Ordered by s_norm, then eta.
    std::vector<SweepRow> rows;
    std::vector<std::string> warnings;
};

/// Rows are computed on worker threads; ordering does not depend on scheduling.
SweepResult cmd_sweep(const RunConfig &config);

/// Columns: s_norm,eta,ratio,min_entry,nonclassical,lp_feasible,lp_regime.
std::string sweep_to_csv(const SweepResult &result);

} // namespace statent
