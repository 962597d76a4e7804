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

#include "statent/inversion.hpp"

#include <algorithm>
#include <cmath>

#include "statent/error.hpp"

namespace statent {

namespace {
const double kSqrt3 = std::sqrt(3.0);
} // namespace

InversionKernel::InversionKernel(double eta) : eta_(eta), gain_(kSqrt3 / eta) {
    if (!(eta > 0.0) || !std::isfinite(eta)) {
        throw InvalidInput("inversion kernel requires a finite eta > 0");
    }
}

double InversionKernel::operator()(int a, int a_prime) const {
    binary_index(a);
    binary_index(a_prime);
    return 0.5 * (1.0 + gain_ * a * a_prime);
}

Eigen::Matrix2d InversionKernel::matrix() const {
    Eigen::Matrix2d m;
    m << (*this)(1, 1), (*this)(1, -1), (*this)(-1, 1), (*this)(-1, -1);
    return m;
}

Eigen::Matrix4d InversionKernel::joint_matrix() const {
    Eigen::Matrix4d k;
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            k(i, j) = (*this)(kOutcomes[i].x, kOutcomes[j].x) * (*this)(kOutcomes[i].y, kOutcomes[j].y);
        }
    }
    return k;
}

std::array<double, 2> InversionKernel::apply(const std::array<double, 2> &v) const {
    // sum_a' mu(a,a') v(a') = (v+ + v-)/2 + a (gain/2)(v+ - v-)
    const double mean = 0.5 * (v[0] + v[1]);
    const double moment = 0.5 * gain_ * (v[0] - v[1]);
    return {mean + moment, mean - moment};
}

SignedPair invert_marginal(const InversionKernel &kernel, const BinaryDistribution &observed) {
    return kernel.apply(observed);
}

QuasiDistribution QuasiDistribution::make(const std::array<double, 4> &p) {
    double sum = 0.0;
    for (double v : p) {
        if (!std::isfinite(v)) {
            throw InvalidInput("quasi-distribution has a non-finite entry");
        }
        sum += v;
    }
    if (std::abs(sum - 1.0) > kNormalizationTolerance) {
        throw InvalidInput("quasi-distribution does not sum to 1");
    }
    return QuasiDistribution(p);
}

SignedPair QuasiDistribution::marginal_x() const {
    return {p_[0] + p_[1], p_[2] + p_[3]};
}

SignedPair QuasiDistribution::marginal_y() const {
    return {p_[0] + p_[2], p_[1] + p_[3]};
}

QuasiDistribution invert_joint(const InversionKernel &kernel, const JointDistribution &observed) {
    // Entries laid out as P[x][y]; kOutcomes order is row-major in (x, y).
    const auto &p = observed.entries();
    // Along y for each x.
    const auto row_plus = kernel.apply({p[0], p[1]});
    const auto row_minus = kernel.apply({p[2], p[3]});
    // Along x for each y.
    const auto col_plus = kernel.apply({row_plus[0], row_minus[0]});
    const auto col_minus = kernel.apply({row_plus[1], row_minus[1]});
    return QuasiDistribution::make({col_plus[0], col_minus[0], col_plus[1], col_minus[1]});
}

QuasiDistribution retrieved_joint_closed_form(const BlochVector &s, double eta) {
    const InversionKernel kernel(eta);
    std::array<double, 4> q;
    for (std::size_t i = 0; i < 4; ++i) {
        const auto [x, y] = kOutcomes[i];
        q[i] = 0.25 * (1.0 + x * s.x() + y * s.y() + x * y * s.z() * kernel.gain());
    }
    return QuasiDistribution::make(q);
}

Negativity negativity(const QuasiDistribution &q, double tolerance) {
    const auto &e = q.entries();
    const auto it = std::min_element(e.begin(), e.end());
    const double m = *it;
    return {m, static_cast<std::size_t>(it - e.begin()), m < -tolerance};
}

double default_eta(double s_norm) {
    return kDefaultEtaFraction * std::min(1.0, kSqrt3 * s_norm);
}

std::string_view to_string(WitnessStatus status) {
    switch (status) {
    case WitnessStatus::Nonclassical:
        return "nonclassical";
    case WitnessStatus::TrivialException:
        return "trivial_exception";
    case WitnessStatus::EtaNotBelowThreshold:
        return "eta_not_below_threshold";
    case WitnessStatus::BelowNumericalResolution:
        return "below_numerical_resolution";
    }
    return "unknown";
}

WitnessReport find_witness(const BlochVector &s, std::optional<double> eta_override) {
    if (eta_override && !(*eta_override > 0.0 && *eta_override <= 1.0)) {
        throw InvalidInput("eta override must lie in (0, 1]");
    }
    const CanonicalFrame frame = canonical_rotation(s);
    const double s_norm = frame.canonical.z();

    std::optional<double> eta = eta_override;
    if (!eta && s_norm > 0.0) {
        eta = default_eta(s_norm);
    }
    // At s = 0 every strength gives the same uniform statistics; eta = 1 is
    // used only to drive the pipeline.
    const double eta_used = eta.value_or(1.0);

    const JointPovm povm = build_povm(eta_used);
    const JointDistribution observed = observed_joint(frame.canonical, povm);
    const QuasiDistribution quasi = invert_joint(InversionKernel(eta_used), observed);
    const Negativity neg = negativity(quasi);

    WitnessStatus status = WitnessStatus::Nonclassical;
    const double ratio = eta ? kSqrt3 * s_norm / *eta : 0.0;
    if (!neg.nonclassical) {
        if (s_norm == 0.0) {
            status = WitnessStatus::TrivialException;
        } else if (ratio > 1.0 + 1e-9) {
            status = WitnessStatus::BelowNumericalResolution;
        } else {
            status = WitnessStatus::EtaNotBelowThreshold;
        }
    }
    return WitnessReport{s,     frame.rotation, frame.canonical, eta,   observed,
                         quasi, neg.min_entry,  neg.nonclassical, ratio, status};
}

} // namespace statent
