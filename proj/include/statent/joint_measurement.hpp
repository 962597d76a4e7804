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
 * The four-outcome joint POVM on a qubit and the statistics it produces.
 *
 * Outcomes are always ordered (+1,+1), (+1,-1), (-1,+1), (-1,-1). Each effect
 * has the form (I + eta(x,y).sigma) / 4. The wired-in family is
 * eta(x,y) = (eta / sqrt(3)) (x, y, xy); at eta = 1 it samples the SU(2)
 * Husimi function of the state on four points (no Husimi machinery is built
 * here).
 */

#include <array>
#include <cstddef>
#include <optional>

#include <Eigen/Dense>

#include "statent/bloch.hpp"

namespace statent {

struct Outcome {
    int x;
    int y;
};

inline constexpr std::array<Outcome, 4> kOutcomes{{{+1, +1}, {+1, -1}, {-1, +1}, {-1, -1}}};

/// Index of (x, y) in kOutcomes. x and y must be +1 or -1.
std::size_t outcome_index(int x, int y);

/// Index of a in the binary order (+1, -1).
std::size_t binary_index(int a);

/// Entries in [-kProbabilityClamp, 0) are clamped to zero; lower is an error.
inline constexpr double kProbabilityClamp = 1e-15;
inline constexpr double kNormalizationTolerance = 1e-12;

/// Bloch-space vectors eta(x,y) generating a four-outcome POVM.
class EtaVectors {
  public:
    /// eta(x,y) = (eta / sqrt(3)) (x, y, xy), 0 < eta <= 1.
    static EtaVectors symmetric_family(double eta);
    /// Arbitrary family; checks |eta(x,y)| <= 1 and sum eta(x,y) = 0.
    static EtaVectors from_vectors(const std::array<Vec3, 4> &vectors,
                                   std::optional<double> strength = std::nullopt);

    const std::array<Vec3, 4> &vectors() const { return v_; }
    const Vec3 &at(int x, int y) const { return v_[outcome_index(x, y)]; }
    /// Set for the symmetric family; may be empty for custom families.
    std::optional<double> strength() const { return strength_; }

  private:
    EtaVectors(const std::array<Vec3, 4> &v, std::optional<double> strength)
        : v_(v), strength_(strength) {}
    std::array<Vec3, 4> v_;
    std::optional<double> strength_;
};

class JointPovm {
  public:
    static JointPovm from_eta_vectors(const EtaVectors &eta);

    const std::array<Eigen::Matrix2cd, 4> &effects() const { return effects_; }
    const EtaVectors &eta_vectors() const { return eta_; }

  private:
    JointPovm(const EtaVectors &eta, const std::array<Eigen::Matrix2cd, 4> &effects)
        : eta_(eta), effects_(effects) {}
    EtaVectors eta_;
    std::array<Eigen::Matrix2cd, 4> effects_;
};

/// Symmetric-family POVM. Rejects eta outside (0, 1].
JointPovm build_povm(double eta);

/// Nonnegative, normalized distribution over the four joint outcomes.
class JointDistribution {
  public:
    static JointDistribution make(const std::array<double, 4> &p);

    const std::array<double, 4> &entries() const { return p_; }
    double operator[](std::size_t i) const { return p_[i]; }
    double at(int x, int y) const { return p_[outcome_index(x, y)]; }

  private:
    explicit JointDistribution(const std::array<double, 4> &p) : p_(p) {}
    std::array<double, 4> p_;
};

/// Two-outcome distribution in the order (+1, -1).
using BinaryDistribution = std::array<double, 2>;

struct MarginalPair {
    BinaryDistribution x;
    BinaryDistribution y;
};

/// Closed form p(x,y) = (1 + eta(x,y).s) / 4.
JointDistribution observed_joint(const BlochVector &s, const JointPovm &povm);

/// Born rule tr(rho E(x,y)) with explicit 2x2 matrices.
JointDistribution born_statistics(const DensityMatrix2 &rho, const JointPovm &povm);

MarginalPair observed_marginals(const JointDistribution &p);

/// Statistics of sigma_x and sigma_y measured directly on the state.
MarginalPair exact_marginals(const BlochVector &s);

} // namespace statent
