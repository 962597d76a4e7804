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
 * Qubit states as Bloch vectors, the 2x2 density-matrix bijection, rotations
 * onto the canonical z axis, and the reduction of higher-dimensional states to
 * an effective qubit.
 */

#include <complex>
#include <optional>

#include <Eigen/Dense>

namespace statent {

using Complex = std::complex<double>;
using Vec3 = Eigen::Vector3d;

/// Numerical slack used by every qubit-level validity check.
inline constexpr double kStateTolerance = 1e-12;
/// Orthogonality slack for user-supplied basis vectors.
inline constexpr double kOrthogonalityTolerance = 1e-10;

namespace pauli {
const Eigen::Matrix2cd &identity();
const Eigen::Matrix2cd &x();
const Eigen::Matrix2cd &y();
const Eigen::Matrix2cd &z();
} // namespace pauli

/**
 * Real 3-vector s with |s| <= 1 parameterizing rho = (I + s.sigma) / 2.
 *
 * Norms in (1, 1 + kStateTolerance] are renormalized to exactly 1; anything
 * larger (or non-finite) is rejected.
 */
class BlochVector {
  public:
    BlochVector() = default;

    static BlochVector make(double x, double y, double z);
    static BlochVector make(const Vec3 &v);

    double x() const { return v_.x(); }
    double y() const { return v_.y(); }
    double z() const { return v_.z(); }
    double norm() const { return v_.norm(); }
    const Vec3 &vec() const { return v_; }

  private:
    explicit BlochVector(const Vec3 &v) : v_(v) {}
    Vec3 v_ = Vec3::Zero();
};

/// Validated 2x2 density matrix: Hermitian, unit trace, positive semidefinite.
class DensityMatrix2 {
  public:
    static DensityMatrix2 make(const Eigen::Matrix2cd &m);
    const Eigen::Matrix2cd &matrix() const { return m_; }

  private:
    explicit DensityMatrix2(const Eigen::Matrix2cd &m) : m_(m) {}
    Eigen::Matrix2cd m_;
};

/// Proper rotation of Bloch vectors (orthogonal, det = +1).
class Rotation3 {
  public:
    static Rotation3 identity();
    static Rotation3 make(const Eigen::Matrix3d &r);

    const Eigen::Matrix3d &matrix() const { return r_; }
    Vec3 apply(const Vec3 &v) const { return r_ * v; }

  private:
    explicit Rotation3(const Eigen::Matrix3d &r) : r_(r) {}
    Eigen::Matrix3d r_;
};

/// Unit-norm state vector in dimension d >= 2.
class PureStateVector {
  public:
    static PureStateVector make(const Eigen::VectorXcd &amplitudes);
    /// Normalizes first; rejects the zero vector.
    static PureStateVector normalized(const Eigen::VectorXcd &amplitudes);

    Eigen::Index dim() const { return a_.size(); }
    const Eigen::VectorXcd &amplitudes() const { return a_; }

  private:
    explicit PureStateVector(Eigen::VectorXcd a) : a_(std::move(a)) {}
    Eigen::VectorXcd a_;
};

DensityMatrix2 bloch_to_density(const BlochVector &s);

/// s_a = tr(rho sigma_a).
BlochVector density_to_bloch(const DensityMatrix2 &rho);

struct CanonicalFrame {
    Rotation3 rotation;
    /// Always (0, 0, |s|).
    BlochVector canonical;
};

/**
 * Rotation taking s onto the +z axis.
 *
 * Uses the axis s x z (Rodrigues form). The antiparallel case is a pi
 * rotation about x, and s = 0 maps to the identity.
 */
CanonicalFrame canonical_rotation(const BlochVector &s);

/// Gram-Schmidt of the first canonical basis vector not parallel to psi.
PureStateVector default_orthogonal_complement(const PureStateVector &psi);

/**
 * Bloch vector of psi in the effective qubit basis {psi, psi_perp}.
 *
 * When psi_perp is absent, default_orthogonal_complement is used. The result
 * is (0, 0, 1) for every valid input.
 */
BlochVector embed_pure_state(const PureStateVector &psi,
                             const std::optional<PureStateVector> &psi_perp = std::nullopt);

struct SubspaceProjection {
    BlochVector bloch;
    /// Trace of rho restricted to the subspace.
    double weight = 0.0;
};

/**
 * Restricts a d x d density matrix to span{first, second} and renormalizes.
 *
 * Throws InvalidInput if rho is not a density matrix, the pair is not
 * orthonormal, or the state has no support on the subspace.
 */
SubspaceProjection project_mixed_to_qubit(const Eigen::MatrixXcd &rho,
                                          const Eigen::VectorXcd &first,
                                          const Eigen::VectorXcd &second);

} // namespace statent
