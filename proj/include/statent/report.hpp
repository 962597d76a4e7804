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

/**
 * @file
 * Run configuration and report types shared by the C API and the CLI.
 *
 * Reports serialize to a JSON tree with the field names documented in
 * README.md. Doubles are written in shortest round-trip form, so
 * report_from_json(report_to_json(r)) reproduces r exactly.
 */

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "statent/bloch.hpp"
#include "statent/inversion.hpp"
#include "statent/separability.hpp"
#include "statent/shot_sim.hpp"

namespace statent {

enum class Command { Witness, Separability, Sweep, Sample };

std::string_view to_string(Command c);
Command command_from_string(std::string_view name);

struct BlochInput {
    Vec3 s = Vec3::Zero();
};

struct DensityInput {
    Eigen::MatrixXcd rho;
    /// Canonical basis indices spanning the projected qubit (d > 2 only).
    std::size_t first = 0;
    std::size_t second = 1;
};

struct PureInput {
    /// Normalized before use.
    Eigen::VectorXcd amplitudes;
    std::optional<Eigen::VectorXcd> perp;
};

using StateSpec = std::variant<std::monostate, BlochInput, DensityInput, PureInput>;

struct GridConfig {
    unsigned rings = 24;
    unsigned angles = 48;
};

/// Axis values are lo + (hi - lo) k / steps for k = 1..steps.
struct SweepAxis {
    double lo = 0.0;
    double hi = 1.0;
    unsigned steps = 100;

    std::vector<double> values() const;
};

struct SweepConfig {
    SweepAxis s_norm;
    SweepAxis eta;
    bool with_lp = true;
};

struct RunConfig {
    StateSpec state;
    std::optional<double> eta;
    GridConfig grid;
    std::optional<std::uint64_t> shots;
    std::optional<std::uint64_t> seed;
    double sigma = kDefaultCertificationSigma;
    SweepConfig sweep;
};

/// Throws InvalidInput when the config cannot drive `command`.
void validate(const RunConfig &config, Command command);

struct StateSummary {
    std::string kind;
    std::size_t dimension = 2;
    BlochVector bloch;
    /// Trace of the projected block (density input with d > 2).
    std::optional<double> subspace_weight;
};

struct SamplingBlock {
    double eta = 1.0;
    ShotRecord record;
    EstimatedQuasi estimate;
    Significance significance;
};

struct Report {
    Command command = Command::Witness;
    RunConfig config;
    StateSummary state;
    std::optional<WitnessReport> witness;
    std::optional<SeparabilityVerdict> separability;
    std::optional<double> grid_max_correlation;
    std::optional<SamplingBlock> sampling;
    std::vector<std::string> warnings;
};

std::string report_to_json(const Report &report, int indent = 2);
Report report_from_json(std::string_view text);
std::string report_to_text(const Report &report);

std::string config_to_json(const RunConfig &config, int indent = 2);
RunConfig config_from_json(std::string_view text);

/// Shortest round-trip decimal form of a double.
std::string format_double(double v);

} // namespace statent
