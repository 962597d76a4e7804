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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "statent/bloch.hpp"
#include "statent/inversion.hpp"
#include "statent/joint_measurement.hpp"
#include "statent/random.hpp"
#include "statent/separability.hpp"
#include "statent/shot_sim.hpp"

using namespace statent;

namespace {

const double kSqrt3 = std::sqrt(3.0);

struct Verdict {
    bool pass = true;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void fail(Verdict &o, const std::string &why) {
    if (o.pass) {
        o.detail = why;
    }
    o.pass = false;
}

Vec3 random_ball(Rng &rng) {
    while (true) {
        Vec3 v(2 * rng.uniform() - 1, 2 * rng.uniform() - 1, 2 * rng.uniform() - 1);
        if (v.norm() <= 1.0) {
            return v;
        }
    }
}

Verdict negativity_reproduction() {
    Verdict o;
    const auto t0 = Clock::now();
    const auto q = retrieved_joint_closed_form(BlochVector::make(0, 0, 1), 1.0);
    const auto via_kernel = invert_joint(InversionKernel(1.0), observed_joint(BlochVector::make(0, 0, 1), build_povm(1.0)));
    const double elapsed = seconds_since(t0);
    const double expected = (1 - kSqrt3) / 4;
    for (std::size_t k : {std::size_t{1}, std::size_t{2}}) {
        if (std::abs(q[k] - expected) > 1e-12 || std::abs(via_kernel[k] - expected) > 1e-12) {
            fail(o, "p(+-1,-+1) off by " + std::to_string(std::abs(via_kernel[k] - expected)));
        }
    }
    if (elapsed >= 1e-3) {
        fail(o, "runtime " + std::to_string(elapsed) + " s");
    }
    o.detail = o.pass ? "p(1,-1) = " + std::to_string(via_kernel[1]) : o.detail;
    return o;
}

Verdict threshold_law() {
    Verdict o;
    const auto t0 = Clock::now();
    int boundary = 0;
    for (int i = 1; i <= 100; ++i) {
        for (int j = 1; j <= 100; ++j) {
            const double s = i / 100.0;
            const double eta = j / 100.0;
            const auto w = find_witness(BlochVector::make(0, 0, s), eta);
            const bool predicate = kSqrt3 * s > eta;
            if (w.nonclassical != predicate) {
                fail(o, "flag mismatch at s=" + std::to_string(s) + " eta=" + std::to_string(eta));
            }
        }
    }
    // Boundary cells: eta = sqrt(3) |s| inside the grid.
    for (int i = 1; i <= 100; ++i) {
        const double s = i / 100.0;
        const double eta = kSqrt3 * s;
        if (eta > 1.0) {
            break;
        }
        const auto w = find_witness(BlochVector::make(0, 0, s), eta);
        ++boundary;
        if (std::abs(w.min_entry) >= 1e-12 || w.nonclassical) {
            fail(o, "boundary cell s=" + std::to_string(s) + " min=" + std::to_string(w.min_entry));
        }
    }
    const double elapsed = seconds_since(t0);
    if (elapsed >= 1.0) {
        fail(o, "runtime " + std::to_string(elapsed) + " s");
    }
    if (o.pass) {
        o.detail = "10000 cells, " + std::to_string(boundary) + " boundary cells";
    }
    return o;
}

Verdict trivial_exception() {
    Verdict o;
    for (int j = 1; j <= 1000; ++j) {
        const double eta = j / 1000.0;
        const auto w = find_witness(BlochVector::make(0, 0, 0), eta);
        for (double v : w.quasi.entries()) {
            if (v != 0.25) {
                fail(o, "non-uniform entry at eta=" + std::to_string(eta));
            }
        }
        if (w.nonclassical) {
            fail(o, "flagged nonclassical at eta=" + std::to_string(eta));
        }
    }
    const auto dflt = find_witness(BlochVector::make(0, 0, 0));
    if (dflt.nonclassical || dflt.status != WitnessStatus::TrivialException) {
        fail(o, "default eta run not reported as the trivial exception");
    }
    if (o.pass) {
        o.detail = "1000 eta values, all exactly 1/4";
    }
    return o;
}

Verdict marginal_fidelity() {
    Verdict o;
    Rng rng(4);
    double worst = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const auto s = BlochVector::make(random_ball(rng));
        const double eta = rng.uniform_open_zero();
        const auto q = invert_joint(InversionKernel(eta), observed_joint(s, build_povm(eta)));
        const auto exact = exact_marginals(s);
        const auto mx = q.marginal_x();
        const auto my = q.marginal_y();
        for (std::size_t k = 0; k < 2; ++k) {
            worst = std::max({worst, std::abs(mx[k] - exact.x[k]), std::abs(my[k] - exact.y[k])});
        }
    }
    if (worst > 1e-12) {
        fail(o, "max marginal error " + std::to_string(worst));
    }
    if (o.pass) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "max marginal error %.2e", worst);
        o.detail = buf;
    }
    return o;
}

Verdict classical_roundtrip() {
    Verdict o;
    const auto t0 = Clock::now();
    Rng rng(5);
    double worst = 1.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const auto model = sample_hidden_variable_model(rng, 1 + trial % 16);
        const double eta = rng.uniform_open_zero();
        const auto q = invert_joint(InversionKernel(eta), separable_statistics(model, ResponseFunction(eta)));
        worst = std::min(worst, negativity(q).min_entry);
    }
    const double elapsed = seconds_since(t0);
    if (worst < -1e-12) {
        fail(o, "min entry " + std::to_string(worst));
    }
    if (elapsed >= 1.0) {
        fail(o, "runtime " + std::to_string(elapsed) + " s");
    }
    if (o.pass) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "min entry over 1000 models %.3e", worst);
        o.detail = buf;
    }
    return o;
}

Verdict separability_soundness() {
    Verdict o;
    const auto t0 = Clock::now();
    const auto grid = default_grid();
    const double bound = max_achievable_correlation(grid);
    if (std::abs(bound - 0.5) > 0.01) {
        fail(o, "grid correlation bound " + std::to_string(bound));
    }
    int infeasible_unit = 0;
    int feasible_low = 0;
    int beyond = 0;
    for (int i = 1; i <= 100; ++i) {
        for (int j = 1; j <= 100; ++j) {
            const double s = i / 100.0;
            const double eta = j / 100.0;
            const double c = kSqrt3 * s / eta;
            const auto observed = observed_joint(BlochVector::make(0, 0, s), build_povm(eta));
            const ResponseFunction response(eta);
            const auto v = separability_feasibility(observed, response, grid);
            if (c > 1.0) {
                ++infeasible_unit;
                if (v.feasible || v.regime != SeparabilityRegime::NonseparableUnitBound) {
                    fail(o, "cell s=" + std::to_string(s) + " eta=" + std::to_string(eta) + " not unit-bound infeasible");
                }
            } else if (c > 0.5) {
                ++beyond;
                if (v.feasible || v.regime != SeparabilityRegime::NonseparableBeyondSufficientCondition) {
                    fail(o, "cell s=" + std::to_string(s) + " eta=" + std::to_string(eta) + " not labeled beyond");
                }
            } else if (c <= 0.45) {
                ++feasible_low;
                if (!v.feasible || !v.witness) {
                    fail(o, "cell s=" + std::to_string(s) + " eta=" + std::to_string(eta) + " infeasible");
                    continue;
                }
                const auto fit = separable_statistics(*v.witness, response);
                for (std::size_t k = 0; k < 4; ++k) {
                    if (std::abs(fit[k] - observed[k]) >= 1e-8) {
                        fail(o, "witness residual at s=" + std::to_string(s) + " eta=" + std::to_string(eta));
                    }
                }
            }
        }
    }
    const double elapsed = seconds_since(t0);
    if (elapsed >= 30.0) {
        fail(o, "runtime " + std::to_string(elapsed) + " s");
    }
    if (o.pass) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "%d unit-bound, %d beyond, %d feasible cells; bound %.6f; %.1f s",
                      infeasible_unit, beyond, feasible_low, bound, elapsed);
        o.detail = buf;
    }
    return o;
}

Verdict oracle_equivalence() {
    Verdict o;
    Rng rng(7);
    double worst = 0.0;
    for (int trial = 0; trial < 500; ++trial) {
        const auto model = sample_hidden_variable_model(rng, 1 + trial % 12);
        // Inverting rounded statistics amplifies errors by (sqrt(3)/eta)^2.
        const double eta = 0.05 + 0.95 * rng.uniform_open_zero();
        const auto direct = inverted_separable_statistics(model);
        const auto composed = invert_joint(InversionKernel(eta), separable_statistics(model, ResponseFunction(eta)));
        for (std::size_t k = 0; k < 4; ++k) {
            worst = std::max(worst, std::abs(direct[k] - composed[k]));
        }
    }
    if (worst > 1e-12) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "max deviation %.2e", worst);
        fail(o, buf);
    }
    if (o.pass) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "max deviation %.2e", worst);
        o.detail = buf;
    }
    return o;
}

Verdict statistical_certification() {
    Verdict o;
    const auto t0 = Clock::now();
    const InversionKernel kernel(1.0);
    const auto strong = observed_joint(BlochVector::make(0, 0, 1), build_povm(1.0));
    const auto weak = observed_joint(BlochVector::make(0, 0, 0.1), build_povm(1.0));
    int strong_hits = 0;
    int weak_hits = 0;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        strong_hits += negativity_significance(estimate_quasi(sample_counts(strong, 1000000, seed), kernel)).certified;
        weak_hits += negativity_significance(estimate_quasi(sample_counts(weak, 1000000, seed), kernel)).certified;
    }
    const double elapsed = seconds_since(t0);
    if (strong_hits < 99) {
        fail(o, "certified in " + std::to_string(strong_hits) + "/100 seeds");
    }
    if (weak_hits > 1) {
        fail(o, "false certification in " + std::to_string(weak_hits) + "/100 seeds");
    }
    if (elapsed >= 60.0) {
        fail(o, "runtime " + std::to_string(elapsed) + " s");
    }
    if (o.pass) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "%d/100 certified, %d/100 false; %.1f s", strong_hits, weak_hits, elapsed);
        o.detail = buf;
    }
    return o;
}

Verdict pure_state_universality() {
    Verdict o;
    Rng rng(9);
    for (int trial = 0; trial < 100; ++trial) {
        const Eigen::Index d = 2 + trial % 7;
        Eigen::VectorXcd psi(d);
        for (Eigen::Index k = 0; k < d; ++k) {
            // Gaussian amplitudes give a uniformly random direction.
            const double r = std::sqrt(-2 * std::log(rng.uniform_open_zero()));
            const double a = 2 * M_PI * rng.uniform();
            const double r2 = std::sqrt(-2 * std::log(rng.uniform_open_zero()));
            const double a2 = 2 * M_PI * rng.uniform();
            psi(k) = Complex(r * std::cos(a), r2 * std::cos(a2));
        }
        psi.normalize();
        const auto s = embed_pure_state(PureStateVector::make(psi));
        if (std::abs(s.norm() - 1.0) > 1e-12) {
            fail(o, "|s| = " + std::to_string(s.norm()) + " in d=" + std::to_string(d));
        }
        if (!find_witness(s).nonclassical) {
            fail(o, "not nonclassical in d=" + std::to_string(d));
        }
    }
    if (o.pass) {
        o.detail = "100 states, d = 2..8";
    }
    return o;
}

} // namespace

int main() {
    const std::vector<std::pair<const char *, std::function<Verdict()>>> criteria = {
        {"negativity reproduction", negativity_reproduction},
        {"threshold law", threshold_law},
        {"trivial exception", trivial_exception},
        {"marginal fidelity", marginal_fidelity},
        {"classical roundtrip", classical_roundtrip},
        {"separability soundness", separability_soundness},
        {"oracle equivalence", oracle_equivalence},
        {"statistical certification", statistical_certification},
        {"pure-state universality", pure_state_universality},
    };
    int failures = 0;
    int index = 0;
    for (const auto &[name, run] : criteria) {
        ++index;
        Verdict o;
        try {
            o = run();
        } catch (const std::exception &e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        failures += o.pass ? 0 : 1;
        std::printf("%s %d %s: %s\n", o.pass ? "PASS" : "FAIL", index, name, o.detail.c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
