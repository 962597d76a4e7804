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
 * Marginal-inversion kernels, the retrieved quasi-joint distribution, and the
 * negativity witness built on top of them.
 */

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

#include <Eigen/Dense>

#include "statent/bloch.hpp"
#include "statent/joint_measurement.hpp"

namespace statent {

/// A quasi entry below -kNegativityTolerance counts as negative.
inline constexpr double kNegativityTolerance = 1e-12;
/// Default strength is this fraction of min(1, sqrt(3)|s|).
inline constexpr double kDefaultEtaFraction = 0.9;

/**
 * mu(a, a') = (1 + (sqrt(3)/eta) a a') / 2, shared by X and Y.
 *
 * Defined for every eta > 0 even though a physical POVM needs eta <= 1
 * (eta = sqrt(3) gives the identity kernel). Columns sum to one, so the map
 * preserves normalization.
 */
class InversionKernel {
  public:
    explicit InversionKernel(double eta);

    double eta() const { return eta_; }
    /// sqrt(3) / eta.
    double gain() const { return gain_; }
    double operator()(int a, int a_prime) const;

    /// Rows a, columns a', both in the order (+1, -1).
    Eigen::Matrix2d matrix() const;
    /// mu(x,x') mu(y,y') over kOutcomes x kOutcomes.
    Eigen::Matrix4d joint_matrix() const;

    /// Applies the kernel to a two-component vector (order (+1, -1)).
    std::array<double, 2> apply(const std::array<double, 2> &v) const;

  private:
    double eta_;
    double gain_;
};

using SignedPair = std::array<double, 2>;

SignedPair invert_marginal(const InversionKernel &kernel, const BinaryDistribution &observed);

/// Normalized joint over kOutcomes whose entries may be negative.
class QuasiDistribution {
  public:
    static QuasiDistribution make(const std::array<double, 4> &p);

    const std::array<double, 4> &entries() const { return p_; }
    double operator[](std::size_t i) const { return p_[i]; }
    double at(int x, int y) const { return p_[outcome_index(x, y)]; }
    SignedPair marginal_x() const;
    SignedPair marginal_y() const;

  private:
    explicit QuasiDistribution(const std::array<double, 4> &p) : p_(p) {}
    std::array<double, 4> p_;
};

/// Applies mu(x,x') mu(y,y') to the observed joint, one axis at a time.
QuasiDistribution invert_joint(const InversionKernel &kernel, const JointDistribution &observed);

/// (1 + x s_x + y s_y + xy s_z sqrt(3)/eta) / 4, computed directly from s.
QuasiDistribution retrieved_joint_closed_form(const BlochVector &s, double eta);

struct Negativity {
    double min_entry;
    std::size_t argmin;
    bool nonclassical;
};

Negativity negativity(const QuasiDistribution &q, double tolerance = kNegativityTolerance);

/// kDefaultEtaFraction * min(1, sqrt(3)|s|). Zero for |s| = 0.
double default_eta(double s_norm);

enum class WitnessStatus {
    Nonclassical,
    /// s = 0: no measurement strength produces negativity.
    TrivialException,
    /// An explicit eta >= sqrt(3)|s| was requested.
    EtaNotBelowThreshold,
    /// s != 0 but (eta/sqrt(3))|s| vanishes against 1 in double precision.
    BelowNumericalResolution,
};

std::string_view to_string(WitnessStatus status);

struct WitnessReport {
    BlochVector input;
    Rotation3 rotation;
    BlochVector canonical;
    /// Empty only for s = 0 without an explicit override.
    std::optional<double> eta;
    JointDistribution observed;
    QuasiDistribution quasi;
    double min_entry;
    bool nonclassical;
    /// sqrt(3)|s| / eta; zero when eta is empty.
    double threshold_ratio;
    WitnessStatus status;
};

/**
 * Rotates s to canonical axes, picks eta (default_eta unless overridden),
 * and runs measurement -> inversion -> negativity.
 *
 * Throws InvalidInput for an override outside (0, 1]. An override that does
 * not produce negativity is reported through the status, not thrown.
 */
WitnessReport find_witness(const BlochVector &s, std::optional<double> eta_override = std::nullopt);

} // namespace statent
