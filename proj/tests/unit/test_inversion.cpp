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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "statent/error.hpp"
#include "statent/inversion.hpp"
#include "statent/random.hpp"

using namespace statent;
using Catch::Matchers::WithinAbs;

namespace {

constexpr double kEps = 1e-12;
const double kSqrt3 = std::sqrt(3.0);

Vec3 random_in_ball(Rng &rng) {
    Vec3 v;
    do {
        v = Vec3(2 * rng.uniform() - 1, 2 * rng.uniform() - 1, 2 * rng.uniform() - 1);
    } while (v.squaredNorm() > 1.0);
    return v;
}

Vec3 random_direction(Rng &rng) {
    Vec3 v;
    do {
        v = random_in_ball(rng);
    } while (v.norm() < 1e-3);
    return v / v.norm();
}

// Explicit 4x4 Kronecker form of mu (x) mu, independent of InversionKernel.
std::array<double, 4> kron_invert(double eta, const std::array<double, 4> &p) {
    const int sign[2] = {1, -1};
    double mu[2][2];
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            mu[a][b] = 0.5 * (1 + kSqrt3 / eta * sign[a] * sign[b]);
        }
    }
    std::array<double, 4> out{};
    for (int x = 0; x < 2; ++x) {
        for (int y = 0; y < 2; ++y) {
            for (int xp = 0; xp < 2; ++xp) {
                for (int yp = 0; yp < 2; ++yp) {
                    out[2 * x + y] += mu[x][xp] * mu[y][yp] * p[2 * xp + yp];
                }
            }
        }
    }
    return out;
}

} // namespace

TEST_CASE("kernel is column-stochastic and identity at eta = sqrt(3)") {
    for (double eta : {0.05, 0.3, 1.0, 2.5}) {
        const InversionKernel k(eta);
        for (int ap : {1, -1}) {
            CHECK_THAT(k(1, ap) + k(-1, ap), WithinAbs(1.0, 1e-15));
        }
    }
    const InversionKernel id(kSqrt3);
    CHECK_THAT(id(1, 1), WithinAbs(1.0, kEps));
    CHECK_THAT(id(1, -1), WithinAbs(0.0, kEps));
    const auto out = invert_marginal(id, {0.3, 0.7});
    CHECK_THAT(out[0], WithinAbs(0.3, kEps));
    CHECK_THAT(out[1], WithinAbs(0.7, kEps));
    CHECK_THROWS_AS(InversionKernel(0.0), InvalidInput);
    CHECK_THROWS_AS(InversionKernel(-1.0), InvalidInput);
}

TEST_CASE("invert_marginal examples") {
    auto out = invert_marginal(InversionKernel(0.8), {0.6154700538379252, 0.3845299461620748});
    CHECK_THAT(out[0], WithinAbs(0.75, kEps));
    CHECK_THAT(out[1], WithinAbs(0.25, kEps));
    out = invert_marginal(InversionKernel(1.0), {0.5, 0.5});
    CHECK(out == SignedPair{0.5, 0.5});
}

TEST_CASE("invert_joint examples") {
    for (double eta : {0.2, 0.7, 1.0}) {
        const auto q = invert_joint(InversionKernel(eta), observed_joint(BlochVector(), build_povm(eta)));
        for (double v : q.entries()) {
            CHECK(v == 0.25);
        }
    }
    auto q = invert_joint(InversionKernel(1.0), observed_joint(BlochVector::make(0, 0, 1), build_povm(1.0)));
    CHECK_THAT(q.at(1, 1), WithinAbs(0.6830127018922193, kEps));
    CHECK_THAT(q.at(-1, -1), WithinAbs(0.6830127018922193, kEps));
    CHECK_THAT(q.at(1, -1), WithinAbs((1 - kSqrt3) / 4, kEps));
    CHECK_THAT(q.at(-1, 1), WithinAbs(-0.18301270189221933, kEps));

    q = invert_joint(InversionKernel(1.0), observed_joint(BlochVector::make(0, 0, 0.5), build_povm(1.0)));
    CHECK_THAT(q.at(1, -1), WithinAbs(0.033493649053890, kEps));
    CHECK_FALSE(negativity(q).nonclassical);
}

TEST_CASE("negativity examples") {
    auto n = negativity(QuasiDistribution::make({0.25, 0.25, 0.25, 0.25}));
    CHECK(n.min_entry == 0.25);
    CHECK_FALSE(n.nonclassical);

    n = negativity(retrieved_joint_closed_form(BlochVector::make(0, 0, 1), 1.0));
    CHECK_THAT(n.min_entry, WithinAbs(-0.18301270189221933, kEps));
    CHECK(n.nonclassical);

    const auto q = invert_joint(InversionKernel(0.6), observed_joint(BlochVector::make(0, 0, 0.5), build_povm(0.6)));
    n = negativity(q);
    CHECK_THAT(n.min_entry, WithinAbs(-0.11084391824351608, kEps));
    CHECK(n.nonclassical);
}

TEST_CASE("find_witness examples") {
    auto w = find_witness(BlochVector());
    CHECK_FALSE(w.nonclassical);
    CHECK_FALSE(w.eta.has_value());
    CHECK(w.status == WitnessStatus::TrivialException);

    w = find_witness(BlochVector::make(0, 1, 0));
    REQUIRE(w.eta.has_value());
    CHECK(*w.eta == 0.9);
    CHECK_THAT(w.min_entry, WithinAbs(-0.2311252243246881, kEps));
    CHECK(w.nonclassical);

    w = find_witness(BlochVector::make(0.3, 0, 0));
    CHECK_THAT(*w.eta, WithinAbs(0.46765371804359684, kEps));
    CHECK_THAT(w.min_entry, WithinAbs(0.25 * (1 - 1 / 0.9), kEps));
    CHECK(w.nonclassical);
    CHECK(w.status == WitnessStatus::Nonclassical);
}

TEST_CASE("find_witness override handling") {
    CHECK_THROWS_AS(find_witness(BlochVector::make(0, 0, 1), 0.0), InvalidInput);
    CHECK_THROWS_AS(find_witness(BlochVector::make(0, 0, 1), 1.5), InvalidInput);
    const auto w = find_witness(BlochVector::make(0, 0, 0.2), 1.0);
    CHECK_FALSE(w.nonclassical);
    CHECK(w.status == WitnessStatus::EtaNotBelowThreshold);
}

TEST_CASE("tiny Bloch vectors are flagged as below numerical resolution") {
    const auto w = find_witness(BlochVector::make(0, 0, 1e-10));
    CHECK_FALSE(w.nonclassical);
    CHECK(w.status == WitnessStatus::BelowNumericalResolution);
    // Still resolved comfortably above that scale.
    CHECK(find_witness(BlochVector::make(0, 0, 1e-5)).nonclassical);
}

TEST_CASE("marginal inversion is exact on an (|s|, eta) grid") {
    Rng rng(17);
    for (int is = 0; is <= 10; ++is) {
        for (int ie = 1; ie <= 10; ++ie) {
            const double eta = ie / 10.0;
            const auto s = BlochVector::make(is / 10.0 * random_direction(rng));
            const auto p = observed_joint(s, build_povm(eta));
            const auto m = observed_marginals(p);
            const auto exact = exact_marginals(s);
            const InversionKernel k(eta);
            const auto rx = invert_marginal(k, m.x);
            const auto ry = invert_marginal(k, m.y);
            for (int a = 0; a < 2; ++a) {
                CHECK_THAT(rx[a], WithinAbs(exact.x[a], kEps));
                CHECK_THAT(ry[a], WithinAbs(exact.y[a], kEps));
            }
        }
    }
}

TEST_CASE("double-kernel inversion agrees with closed form and Kronecker oracle") {
    Rng rng(99);
    for (int i = 0; i < 1000; ++i) {
        const auto s = BlochVector::make(random_in_ball(rng));
        const double eta = 1.0 - rng.uniform();
        const auto p = observed_joint(s, build_povm(eta));
        const auto q = invert_joint(InversionKernel(eta), p);
        const auto closed = retrieved_joint_closed_form(s, eta);
        const auto oracle = kron_invert(eta, p.entries());
        const double scale = std::max(1.0, 3.0 / (eta * eta));
        double total = 0.0;
        for (std::size_t k = 0; k < 4; ++k) {
            CHECK_THAT(q[k], WithinAbs(closed[k], kEps * scale));
            CHECK_THAT(q[k], WithinAbs(oracle[k], kEps * scale));
            total += q[k];
        }
        CHECK_THAT(total, WithinAbs(1.0, kEps));
        const auto exact = exact_marginals(s);
        CHECK_THAT(q.marginal_x()[0], WithinAbs(exact.x[0], kEps));
        CHECK_THAT(q.marginal_x()[1], WithinAbs(exact.x[1], kEps));
        CHECK_THAT(q.marginal_y()[0], WithinAbs(exact.y[0], kEps));
        CHECK_THAT(q.marginal_y()[1], WithinAbs(exact.y[1], kEps));
    }
}

TEST_CASE("kernel joint matrix matches the Kronecker oracle") {
    const InversionKernel k(0.37);
    Eigen::Matrix4d m = k.joint_matrix();
    for (int col = 0; col < 4; ++col) {
        std::array<double, 4> e{};
        e[col] = 1.0;
        const auto oracle = kron_invert(0.37, e);
        for (int row = 0; row < 4; ++row) {
            CHECK_THAT(m(row, col), WithinAbs(oracle[row], kEps));
        }
    }
}

TEST_CASE("threshold equivalence on a 100 x 100 grid") {
    for (int i = 1; i <= 100; ++i) {
        for (int j = 1; j <= 100; ++j) {
            const double s = i / 100.0;
            const double eta = j / 100.0;
            const auto w = find_witness(BlochVector::make(0, 0, s), eta);
            CHECK(w.nonclassical == (kSqrt3 * s > eta));
        }
    }
    // Boundary cells sqrt(3)|s| = eta give a zero minimum.
    for (int i = 1; i <= 57; ++i) {
        const double s = i / 100.0;
        const double eta = kSqrt3 * s;
        const auto w = find_witness(BlochVector::make(0, 0, s), eta);
        CHECK(std::abs(w.min_entry) < kEps);
    }
}

TEST_CASE("minimum quasi entry is rotation invariant") {
    Rng rng(8);
    for (double norm : {0.1, 0.45, 0.8, 1.0}) {
        for (double eta : {0.2, 0.6, 1.0}) {
            const double reference = find_witness(BlochVector::make(0, 0, norm), eta).min_entry;
            for (int k = 0; k < 100; ++k) {
                const auto s = BlochVector::make(norm * random_direction(rng));
                CHECK_THAT(find_witness(s, eta).min_entry, WithinAbs(reference, kEps));
            }
        }
    }
}

TEST_CASE("inverting separable statistics never goes negative") {
    Rng rng(4242);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(rng.uniform() * 8);
        std::vector<double> w(n);
        std::vector<Vec3> lam(n);
        double total = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            w[j] = rng.exponential();
            total += w[j];
            lam[j] = random_in_ball(rng);
        }
        const double eta = 1.0 - rng.uniform();
        // Observed separable statistics built directly from the product form.
        std::array<double, 4> p{};
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < 4; ++k) {
                const auto [x, y] = kOutcomes[k];
                p[k] += w[j] / total * 0.25 * (1 + x * eta / kSqrt3 * lam[j].x()) *
                        (1 + y * eta / kSqrt3 * lam[j].y());
            }
        }
        const auto q = invert_joint(InversionKernel(eta), JointDistribution::make(p));
        CHECK(negativity(q).min_entry >= -kEps);
    }
}
