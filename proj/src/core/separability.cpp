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

#include "statent/separability.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "statent/error.hpp"
#include "statent/simplex.hpp"

namespace statent {

namespace {
const double kSqrt3 = std::sqrt(3.0);
} // namespace

HiddenVariableGrid HiddenVariableGrid::rings(unsigned rings, unsigned angles) {
    if (rings > 0 && angles == 0) {
        throw InvalidInput("grid with rings needs at least one angle");
    }
    std::vector<Eigen::Vector2d> pts;
    pts.reserve(1 + static_cast<std::size_t>(rings) * angles);
    pts.emplace_back(0.0, 0.0);
    for (unsigned i = 1; i <= rings; ++i) {
        const double r = static_cast<double>(i) / rings;
        for (unsigned k = 0; k < angles; ++k) {
            const double theta = 2.0 * std::numbers::pi * k / angles;
            pts.emplace_back(r * std::cos(theta), r * std::sin(theta));
        }
    }
    return HiddenVariableGrid(std::move(pts));
}

HiddenVariableGrid HiddenVariableGrid::from_points(std::vector<Eigen::Vector2d> points) {
    if (points.empty()) {
        throw InvalidInput("hidden-variable grid is empty");
    }
    for (const auto &p : points) {
        if (!p.allFinite() || p.norm() > 1.0 + kStateTolerance) {
            throw InvalidInput("hidden-variable grid point outside the unit disk");
        }
    }
    return HiddenVariableGrid(std::move(points));
}

HiddenVariableGrid default_grid() { return HiddenVariableGrid::rings(24, 48); }

HiddenVariableModel HiddenVariableModel::make(std::vector<Component> components) {
    if (components.empty()) {
        throw InvalidInput("hidden-variable model has no components");
    }
    double total = 0.0;
    for (const auto &c : components) {
        if (!std::isfinite(c.weight) || c.weight < 0.0) {
            throw InvalidInput("hidden-variable weights must be nonnegative");
        }
        if (!c.lambda.allFinite() || c.lambda.norm() > 1.0 + kStateTolerance) {
            throw InvalidInput("hidden-variable vector outside the unit ball");
        }
        total += c.weight;
    }
    if (std::abs(total - 1.0) > kNormalizationTolerance) {
        throw InvalidInput("hidden-variable weights do not sum to 1");
    }
    return HiddenVariableModel(std::move(components));
}

HiddenVariableModel sample_hidden_variable_model(Rng &rng, std::size_t components) {
    if (components == 0) {
        throw InvalidInput("hidden-variable model needs at least one component");
    }
    std::vector<HiddenVariableModel::Component> c(components);
    double total = 0.0;
    for (auto &comp : c) {
        comp.weight = rng.exponential();
        total += comp.weight;
        do {
            comp.lambda = Vec3(2.0 * rng.uniform() - 1.0, 2.0 * rng.uniform() - 1.0,
                               2.0 * rng.uniform() - 1.0);
        } while (comp.lambda.squaredNorm() > 1.0);
    }
    for (auto &comp : c) {
        comp.weight /= total;
    }
    return HiddenVariableModel::make(std::move(c));
}

ResponseFunction::ResponseFunction(double eta) : eta_(eta), scale_(eta / kSqrt3) {
    if (!(eta > 0.0 && eta <= 1.0)) {
        throw InvalidInput("response strength eta must lie in (0, 1]");
    }
}

double ResponseFunction::operator()(int a, double lambda_component) const {
    binary_index(a);
    return 0.5 * (1.0 + a * scale_ * lambda_component);
}

JointDistribution separable_statistics(const HiddenVariableModel &model,
                                       const ResponseFunction &response) {
    std::array<double, 4> p{};
    for (const auto &c : model.components()) {
        for (std::size_t i = 0; i < 4; ++i) {
            const auto [x, y] = kOutcomes[i];
            p[i] += c.weight * response(x, c.lambda.x()) * response(y, c.lambda.y());
        }
    }
    return JointDistribution::make(p);
}

QuasiDistribution inverted_separable_statistics(const HiddenVariableModel &model) {
    std::array<double, 4> p{};
    for (const auto &c : model.components()) {
        for (std::size_t i = 0; i < 4; ++i) {
            const auto [x, y] = kOutcomes[i];
            p[i] += 0.25 * c.weight * (1.0 + x * c.lambda.x()) * (1.0 + y * c.lambda.y());
        }
    }
    return QuasiDistribution::make(p);
}

std::string_view to_string(SeparabilityRegime regime) {
    switch (regime) {
    case SeparabilityRegime::Separable:
        return "separable";
    case SeparabilityRegime::NonseparableUnitBound:
        return "nonseparable_unit_bound";
    case SeparabilityRegime::NonseparableBeyondSufficientCondition:
        return "nonseparable_beyond_sufficient_condition";
    case SeparabilityRegime::NonseparableOther:
        return "nonseparable_other";
    }
    return "unknown";
}

SeparabilityVerdict separability_feasibility(const JointDistribution &observed,
                                             const ResponseFunction &response,
                                             const HiddenVariableGrid &grid) {
    const auto &pts = grid.points();
    const auto n = static_cast<Eigen::Index>(pts.size());

    // Row 0 normalizes; rows 1..3 match three outcomes (the fourth follows).
    LinearProgram lp{Eigen::MatrixXd(4, n), Eigen::VectorXd(4), Eigen::VectorXd::Zero(n)};
    lp.b(0) = 1.0;
    for (Eigen::Index g = 0; g < n; ++g) {
        lp.a(0, g) = 1.0;
        lp.c(g) = pts[g].squaredNorm();
        for (std::size_t i = 0; i < 3; ++i) {
            const auto [x, y] = kOutcomes[i];
            lp.a(static_cast<Eigen::Index>(i) + 1, g) = response(x, pts[g].x()) * response(y, pts[g].y());
        }
    }
    for (std::size_t i = 0; i < 3; ++i) {
        lp.b(static_cast<Eigen::Index>(i) + 1) = observed[i];
    }

    SeparabilityVerdict v;
    double exy = 0.0;
    double ex = 0.0;
    double ey = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
        const auto [x, y] = kOutcomes[i];
        exy += x * y * observed[i];
        ex += x * observed[i];
        ey += y * observed[i];
    }
    const double eta = response.eta();
    v.correlation_target = 3.0 * exy / (eta * eta);
    v.marginal_targets = Eigen::Vector2d(kSqrt3 * ex / eta, kSqrt3 * ey / eta);

    SimplexOptions options;
    options.feasibility_tolerance = kLpFeasibilityTolerance;
    const LpResult r = solve_lp(lp, options);
    v.infeasibility_margin = r.infeasibility;
    v.lp_iterations = r.iterations;
    v.feasible = r.status == LpStatus::Optimal;

    if (v.feasible) {
        std::vector<HiddenVariableModel::Component> comps;
        double total = 0.0;
        for (Eigen::Index g = 0; g < n; ++g) {
            if (r.x(g) > 0.0) {
                comps.push_back({r.x(g), Vec3(pts[g].x(), pts[g].y(), 0.0)});
                total += r.x(g);
            }
        }
        for (auto &c : comps) {
            c.weight /= total;
        }
        v.witness = HiddenVariableModel::make(std::move(comps));
        const JointDistribution fit = separable_statistics(*v.witness, response);
        for (std::size_t i = 0; i < 4; ++i) {
            v.witness_residual = std::max(v.witness_residual, std::abs(fit[i] - observed[i]));
        }
        v.regime = SeparabilityRegime::Separable;
    } else if (v.correlation_target > 1.0) {
        v.regime = SeparabilityRegime::NonseparableUnitBound;
    } else if (v.correlation_target > 0.5) {
        v.regime = SeparabilityRegime::NonseparableBeyondSufficientCondition;
    } else {
        v.regime = SeparabilityRegime::NonseparableOther;
    }
    return v;
}

double max_achievable_correlation(const HiddenVariableGrid &grid) {
    const auto &pts = grid.points();
    const auto n = static_cast<Eigen::Index>(pts.size());
    LinearProgram lp{Eigen::MatrixXd(3, n), Eigen::Vector3d(1.0, 0.0, 0.0), Eigen::VectorXd(n)};
    for (Eigen::Index g = 0; g < n; ++g) {
        lp.a(0, g) = 1.0;
        lp.c(g) = pts[g].squaredNorm();
        lp.a(1, g) = pts[g].x();
        lp.a(2, g) = pts[g].y();
        lp.c(g) = -pts[g].x() * pts[g].y();
    }
    const LpResult r = solve_lp(lp);
    if (r.status == LpStatus::Infeasible) {
        throw InvalidInput("grid cannot produce zero first moments (no point mixture centered at 0)");
    }
    if (r.status != LpStatus::Optimal) {
        throw SolverFailure("correlation bound LP did not reach an optimum");
    }
    return -r.objective;
}

} // namespace statent
