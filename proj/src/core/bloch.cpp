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

#include "statent/bloch.hpp"

#include <cmath>
#include <string>

#include "statent/error.hpp"

namespace statent {

namespace pauli {
const Eigen::Matrix2cd &identity() {
    static const Eigen::Matrix2cd m = Eigen::Matrix2cd::Identity();
    return m;
}
const Eigen::Matrix2cd &x() {
    static const Eigen::Matrix2cd m = (Eigen::Matrix2cd() << 0, 1, 1, 0).finished();
    return m;
}
const Eigen::Matrix2cd &y() {
    static const Eigen::Matrix2cd m =
        (Eigen::Matrix2cd() << 0, Complex(0, -1), Complex(0, 1), 0).finished();
    return m;
}
const Eigen::Matrix2cd &z() {
    static const Eigen::Matrix2cd m = (Eigen::Matrix2cd() << 1, 0, 0, -1).finished();
    return m;
}
} // namespace pauli

namespace {

void require_density_matrix(const Eigen::MatrixXcd &m, const char *what) {
    if (m.rows() != m.cols() || m.rows() < 2) {
        throw InvalidInput(std::string(what) + ": must be a square matrix of dimension >= 2");
    }
    if (!m.allFinite()) {
        throw InvalidInput(std::string(what) + ": non-finite entry");
    }
    if ((m - m.adjoint()).cwiseAbs().maxCoeff() > kStateTolerance) {
        throw InvalidInput(std::string(what) + ": not Hermitian");
    }
    const Complex tr = m.trace();
    if (std::abs(tr.real() - 1.0) > kStateTolerance || std::abs(tr.imag()) > kStateTolerance) {
        throw InvalidInput(std::string(what) + ": trace differs from 1");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -kStateTolerance) {
        throw InvalidInput(std::string(what) + ": negative eigenvalue");
    }
}

} // namespace

BlochVector BlochVector::make(double x, double y, double z) { return make(Vec3(x, y, z)); }

BlochVector BlochVector::make(const Vec3 &v) {
    if (!v.allFinite()) {
        throw InvalidInput("Bloch vector has a non-finite component");
    }
    const double n = v.norm();
    if (n > 1.0 + kStateTolerance) {
        throw InvalidInput("Bloch vector outside the unit ball (|s| = " + std::to_string(n) + ")");
    }
    if (n > 1.0) {
        return BlochVector(v / n);
    }
    return BlochVector(v);
}

DensityMatrix2 DensityMatrix2::make(const Eigen::Matrix2cd &m) {
    require_density_matrix(m, "density matrix");
    return DensityMatrix2(m);
}

Rotation3 Rotation3::identity() { return Rotation3(Eigen::Matrix3d::Identity()); }

Rotation3 Rotation3::make(const Eigen::Matrix3d &r) {
    if ((r.transpose() * r - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() > kStateTolerance) {
        throw InvalidInput("rotation matrix is not orthogonal");
    }
    if (std::abs(r.determinant() - 1.0) > kStateTolerance) {
        throw InvalidInput("rotation matrix is not proper (det != 1)");
    }
    return Rotation3(r);
}

PureStateVector PureStateVector::make(const Eigen::VectorXcd &amplitudes) {
    if (amplitudes.size() < 2) {
        throw InvalidInput("pure state dimension must be at least 2");
    }
    if (!amplitudes.allFinite()) {
        throw InvalidInput("pure state has a non-finite amplitude");
    }
    if (std::abs(amplitudes.norm() - 1.0) > kStateTolerance) {
        throw InvalidInput("pure state is not normalized");
    }
    return PureStateVector(amplitudes);
}

PureStateVector PureStateVector::normalized(const Eigen::VectorXcd &amplitudes) {
    const double n = amplitudes.norm();
    if (!(n > 0.0) || !std::isfinite(n)) {
        throw InvalidInput("pure state amplitudes must be finite and not all zero");
    }
    return make(amplitudes / n);
}

DensityMatrix2 bloch_to_density(const BlochVector &s) {
    Eigen::Matrix2cd m =
        0.5 * (pauli::identity() + s.x() * pauli::x() + s.y() * pauli::y() + s.z() * pauli::z());
    return DensityMatrix2::make(m);
}

BlochVector density_to_bloch(const DensityMatrix2 &rho) {
    const auto &m = rho.matrix();
    return BlochVector::make((m * pauli::x()).trace().real(), (m * pauli::y()).trace().real(),
                             (m * pauli::z()).trace().real());
}

CanonicalFrame canonical_rotation(const BlochVector &s) {
    const double n = s.norm();
    if (n == 0.0) {
        return {Rotation3::identity(), BlochVector()};
    }
    const Vec3 u = s.vec() / n;
    const Vec3 axis = u.cross(Vec3::UnitZ());
    const double c = u.z();

    Eigen::Matrix3d r;
    if (axis.norm() < 1e-15 && c < 0.0) {
        r = Eigen::Vector3d(1.0, -1.0, -1.0).asDiagonal();
    } else {
        // R = I + [v]x + [v]x^2 / (1 + c), with v = u x z unnormalized.
        Eigen::Matrix3d k;
        k << 0.0, -axis.z(), axis.y(), axis.z(), 0.0, -axis.x(), -axis.y(), axis.x(), 0.0;
        // 1 / (1 + c) = (1 - c) / |v|^2 avoids cancellation near c = -1.
        const double damp = c >= 0.0 ? 1.0 / (1.0 + c) : (1.0 - c) / axis.squaredNorm();
        r = Eigen::Matrix3d::Identity() + k + (k * k) * damp;
    }
    return {Rotation3::make(r), BlochVector::make(0.0, 0.0, n)};
}

PureStateVector default_orthogonal_complement(const PureStateVector &psi) {
    const auto &a = psi.amplitudes();
    for (Eigen::Index k = 0; k < a.size(); ++k) {
        Eigen::VectorXcd e = Eigen::VectorXcd::Zero(a.size());
        e(k) = 1.0;
        Eigen::VectorXcd r = e - a * a.dot(e);
        // Residual norm^2 = 1 - |psi_k|^2; anything this small is parallel.
        if (r.norm() > 1e-8) {
            return PureStateVector::normalized(r);
        }
    }
    throw InvalidInput("no orthogonal complement found");
}

BlochVector embed_pure_state(const PureStateVector &psi,
                             const std::optional<PureStateVector> &psi_perp) {
    const PureStateVector perp = psi_perp ? *psi_perp : default_orthogonal_complement(psi);
    if (perp.dim() != psi.dim()) {
        throw InvalidInput("psi and psi_perp have different dimensions");
    }
    if (std::abs(psi.amplitudes().dot(perp.amplitudes())) > kOrthogonalityTolerance) {
        throw InvalidInput("psi_perp is not orthogonal to psi");
    }
    // Coordinates of psi in the basis {psi, psi_perp}.
    const Eigen::Vector2cd c(psi.amplitudes().dot(psi.amplitudes()),
                             perp.amplitudes().dot(psi.amplitudes()));
    const Eigen::Matrix2cd rho = c * c.adjoint();
    return density_to_bloch(DensityMatrix2::make(rho));
}

SubspaceProjection project_mixed_to_qubit(const Eigen::MatrixXcd &rho,
                                          const Eigen::VectorXcd &first,
                                          const Eigen::VectorXcd &second) {
    require_density_matrix(rho, "density matrix");
    if (first.size() != rho.rows() || second.size() != rho.rows()) {
        throw InvalidInput("subspace basis dimension does not match the density matrix");
    }
    if (std::abs(first.norm() - 1.0) > kOrthogonalityTolerance ||
        std::abs(second.norm() - 1.0) > kOrthogonalityTolerance ||
        std::abs(first.dot(second)) > kOrthogonalityTolerance) {
        throw InvalidInput("subspace basis is not orthonormal");
    }
    Eigen::Matrix<Complex, Eigen::Dynamic, 2> basis(rho.rows(), 2);
    basis.col(0) = first;
    basis.col(1) = second;
    Eigen::Matrix2cd block = basis.adjoint() * rho * basis;
    const double weight = block.trace().real();
    if (weight < kStateTolerance) {
        throw InvalidInput("state has no support on the chosen two-dimensional subspace");
    }
    block /= weight;
    // Symmetrize away rounding so the block validates as a density matrix.
    block = 0.5 * (block + block.adjoint()).eval();
    return {density_to_bloch(DensityMatrix2::make(block)), weight};
}

} // namespace statent
