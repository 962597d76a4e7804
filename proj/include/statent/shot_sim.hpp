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
 * Finite-sample simulation of the joint measurement and a z-score
 * certification of negativity from counts.
 *
 * Draws are inverse-CDF over kOutcomes using Rng (mt19937_64 with a fixed
 * 53-bit uniform conversion), so a seed reproduces the same counts on every
 * platform.
 */

#include <array>
#include <cstddef>
#include <cstdint>

#include <Eigen/Dense>

#include "statent/inversion.hpp"
#include "statent/joint_measurement.hpp"

namespace statent {

inline constexpr double kDefaultCertificationSigma = 5.0;

struct ShotRecord {
    std::array<std::uint64_t, 4> counts{};
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;
};

struct EstimatedQuasi {
    std::array<double, 4> estimate{};
    std::array<double, 4> standard_error{};
    Eigen::Matrix4d covariance = Eigen::Matrix4d::Zero();
};

struct Significance {
    double min_entry = 0.0;
    std::size_t argmin = 0;
    double standard_error = 0.0;
    /// -min_entry / standard_error; NaN when degenerate.
    double z_score = 0.0;
    double threshold_sigma = kDefaultCertificationSigma;
    bool certified = false;
    /// Zero standard error at the minimum (e.g. all counts in one outcome).
    bool degenerate = false;
};

/// Multinomial draw of n_shots outcomes. Rejects n_shots = 0.
ShotRecord sample_counts(const JointDistribution &p, std::uint64_t n_shots, std::uint64_t seed);

/// Inverts the empirical frequencies; covariance K (diag(f) - f f^T) K^T / N
/// with plug-in frequencies f.
EstimatedQuasi estimate_quasi(const ShotRecord &record, const InversionKernel &kernel);

/// Same propagation with the true distribution in place of the frequencies.
Eigen::Matrix4d exact_covariance(const JointDistribution &p, const InversionKernel &kernel,
                                 std::uint64_t n_shots);

Significance negativity_significance(const EstimatedQuasi &est,
                                     double threshold_sigma = kDefaultCertificationSigma);

} // namespace statent
