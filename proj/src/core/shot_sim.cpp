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

#include "statent/shot_sim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "statent/error.hpp"
#include "statent/random.hpp"

namespace statent {

namespace {

Eigen::Matrix4d propagate(const Eigen::Vector4d &f, const InversionKernel &kernel, double n) {
    const Eigen::Matrix4d sigma = Eigen::Matrix4d(f.asDiagonal()) - f * f.transpose();
    const Eigen::Matrix4d k = kernel.joint_matrix();
    return k * sigma * k.transpose() / n;
}

} // namespace

ShotRecord sample_counts(const JointDistribution &p, std::uint64_t n_shots, std::uint64_t seed) {
    if (n_shots == 0) {
        throw InvalidInput("shot count must be at least 1");
    }
    const double c0 = p[0];
    const double c1 = c0 + p[1];
    const double c2 = c1 + p[2];
    Rng rng(seed);
    ShotRecord rec;
    rec.shots = n_shots;
    rec.seed = seed;
    for (std::uint64_t i = 0; i < n_shots; ++i) {
        const double u = rng.uniform();
        const std::size_t k = u < c0 ? 0 : u < c1 ? 1 : u < c2 ? 2 : 3;
        ++rec.counts[k];
    }
    return rec;
}

EstimatedQuasi estimate_quasi(const ShotRecord &record, const InversionKernel &kernel) {
    if (record.shots == 0) {
        throw InvalidInput("shot record is empty");
    }
    std::uint64_t total = 0;
    for (auto c : record.counts) {
        total += c;
    }
    if (total != record.shots) {
        throw InvalidInput("shot record counts do not sum to the shot total");
    }
    const double n = static_cast<double>(record.shots);
    std::array<double, 4> f;
    for (std::size_t i = 0; i < 4; ++i) {
        f[i] = static_cast<double>(record.counts[i]) / n;
    }
    EstimatedQuasi est;
    est.estimate = invert_joint(kernel, JointDistribution::make(f)).entries();
    est.covariance = propagate(Eigen::Vector4d(f[0], f[1], f[2], f[3]), kernel, n);
    for (std::size_t i = 0; i < 4; ++i) {
        est.standard_error[i] = std::sqrt(std::max(0.0, est.covariance(i, i)));
    }
    return est;
}

Eigen::Matrix4d exact_covariance(const JointDistribution &p, const InversionKernel &kernel,
                                 std::uint64_t n_shots) {
    if (n_shots == 0) {
        throw InvalidInput("shot count must be at least 1");
    }
    return propagate(Eigen::Vector4d(p[0], p[1], p[2], p[3]), kernel, static_cast<double>(n_shots));
}

Significance negativity_significance(const EstimatedQuasi &est, double threshold_sigma) {
    if (!(threshold_sigma > 0.0)) {
        throw InvalidInput("certification threshold must be positive");
    }
    Significance s;
    s.threshold_sigma = threshold_sigma;
    const auto it = std::min_element(est.estimate.begin(), est.estimate.end());
    s.argmin = static_cast<std::size_t>(it - est.estimate.begin());
    s.min_entry = *it;
    s.standard_error = est.standard_error[s.argmin];
    // Relative floor: rounding in the covariance propagation leaves ~1e-17.
    if (!(s.standard_error > 1e-15)) {
        s.degenerate = true;
        s.z_score = std::numeric_limits<double>::quiet_NaN();
        s.certified = false;
        return s;
    }
    s.z_score = -s.min_entry / s.standard_error;
    s.certified = s.min_entry < 0.0 && s.z_score > threshold_sigma;
    return s;
}

} // namespace statent
