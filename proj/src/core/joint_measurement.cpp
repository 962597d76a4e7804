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

#include "statent/joint_measurement.hpp"

#include <cmath>
#include <string>

#include "statent/error.hpp"

namespace statent {

namespace {

void require_sign(int a) {
    if (a != 1 && a != -1) {
        throw InvalidInput("outcome labels must be +1 or -1, got " + std::to_string(a));
    }
}

} // namespace

std::size_t outcome_index(int x, int y) {
    require_sign(x);
    require_sign(y);
    return (x == 1 ? 0u : 2u) + (y == 1 ? 0u : 1u);
}

std::size_t binary_index(int a) {
    require_sign(a);
    return a == 1 ? 0u : 1u;
}

EtaVectors EtaVectors::symmetric_family(double eta) {
    if (!(eta > 0.0 && eta <= 1.0)) {
        throw InvalidInput("measurement strength eta must lie in (0, 1]");
    }
    const double scale = eta / std::sqrt(3.0);
    std::array<Vec3, 4> v;
    for (std::size_t i = 0; i < kOutcomes.size(); ++i) {
        const auto [x, y] = kOutcomes[i];
        v[i] = scale * Vec3(x, y, x * y);
    }
    return EtaVectors(v, eta);
}

EtaVectors EtaVectors::from_vectors(const std::array<Vec3, 4> &vectors,
                                    std::optional<double> strength) {
    Vec3 sum = Vec3::Zero();
    for (const auto &v : vectors) {
        if (!v.allFinite() || v.norm() > 1.0 + kStateTolerance) {
            throw InvalidInput("POVM vector eta(x,y) must satisfy |eta(x,y)| <= 1");
        }
        sum += v;
    }
    if (sum.cwiseAbs().maxCoeff() > kNormalizationTolerance) {
        throw InvalidInput("POVM vectors eta(x,y) must sum to zero");
    }
    return EtaVectors(vectors, strength);
}

JointPovm JointPovm::from_eta_vectors(const EtaVectors &eta) {
    std::array<Eigen::Matrix2cd, 4> effects;
    Eigen::Matrix2cd total = Eigen::Matrix2cd::Zero();
    for (std::size_t i = 0; i < 4; ++i) {
        const Vec3 &n = eta.vectors()[i];
        effects[i] = 0.25 * (pauli::identity() + n.x() * pauli::x() + n.y() * pauli::y() +
                             n.z() * pauli::z());
        Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(effects[i], Eigen::EigenvaluesOnly);
        if (es.eigenvalues().minCoeff() < -kStateTolerance) {
            throw InvalidInput("POVM effect is not positive semidefinite");
        }
        total += effects[i];
    }
    if ((total - pauli::identity()).cwiseAbs().maxCoeff() > kNormalizationTolerance) {
        throw InvalidInput("POVM effects do not sum to the identity");
    }
    return JointPovm(eta, effects);
}

JointPovm build_povm(double eta) {
    return JointPovm::from_eta_vectors(EtaVectors::symmetric_family(eta));
}

JointDistribution JointDistribution::make(const std::array<double, 4> &p) {
    std::array<double, 4> q = p;
    double sum = 0.0;
    for (double &v : q) {
        if (!std::isfinite(v) || v < -kProbabilityClamp) {
            throw InvalidInput("joint distribution has a negative or non-finite entry");
        }
        if (v < 0.0) {
            v = 0.0;
        }
        sum += v;
    }
    if (std::abs(sum - 1.0) > kNormalizationTolerance) {
        throw InvalidInput("joint distribution does not sum to 1");
    }
    return JointDistribution(q);
}

JointDistribution observed_joint(const BlochVector &s, const JointPovm &povm) {
    std::array<double, 4> p;
    for (std::size_t i = 0; i < 4; ++i) {
        p[i] = 0.25 * (1.0 + povm.eta_vectors().vectors()[i].dot(s.vec()));
    }
    return JointDistribution::make(p);
}

JointDistribution born_statistics(const DensityMatrix2 &rho, const JointPovm &povm) {
    std::array<double, 4> p;
    for (std::size_t i = 0; i < 4; ++i) {
        p[i] = (rho.matrix() * povm.effects()[i]).trace().real();
    }
    return JointDistribution::make(p);
}

MarginalPair observed_marginals(const JointDistribution &p) {
    MarginalPair m{{0.0, 0.0}, {0.0, 0.0}};
    for (std::size_t i = 0; i < 4; ++i) {
        const auto [x, y] = kOutcomes[i];
        m.x[binary_index(x)] += p[i];
        m.y[binary_index(y)] += p[i];
    }
    return m;
}

MarginalPair exact_marginals(const BlochVector &s) {
    return {{0.5 * (1.0 + s.x()), 0.5 * (1.0 - s.x())},
            {0.5 * (1.0 + s.y()), 0.5 * (1.0 - s.y())}};
}

} // namespace statent
