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
 * Hidden-variable (separable) explanations of the observed joint statistics.
 *
 * A model is a distribution p_j over vectors lambda_j in the unit ball, with
 * outcome probabilities fixed to the linear response
 * A(a | lambda) = (1 + a (eta/sqrt(3)) lambda_a) / 2 for a = x, y. Only the
 * x and y components enter, so the feasibility program searches over a
 * discretized unit disk.
 *
 * Leaving the response unrestricted would make every distribution
 * separable, so only this response family is supported.
 */

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "statent/bloch.hpp"
#include "statent/inversion.hpp"
#include "statent/joint_measurement.hpp"
#include "statent/random.hpp"

namespace statent {

inline constexpr double kLpFeasibilityTolerance = 1e-9;
/// Grids whose best achievable correlation is below this are flagged.
inline constexpr double kGridCorrelationWarning = 0.45;

class HiddenVariableGrid {
  public:
    /// Center plus `rings` concentric circles of radius k/rings, each with
    /// `angles` equally spaced points starting on the +x axis.
    static HiddenVariableGrid rings(unsigned rings, unsigned angles);
    /// Arbitrary points; each must lie in the closed unit disk.
    static HiddenVariableGrid from_points(std::vector<Eigen::Vector2d> points);

    const std::vector<Eigen::Vector2d> &points() const { return points_; }
    std::size_t size() const { return points_.size(); }

  private:
    explicit HiddenVariableGrid(std::vector<Eigen::Vector2d> p) : points_(std::move(p)) {}
    std::vector<Eigen::Vector2d> points_;
};

/// 24 radii x 48 angles + center: 1153 points.
HiddenVariableGrid default_grid();

class HiddenVariableModel {
  public:
    struct Component {
        double weight;
        Vec3 lambda;
    };

    /// Weights >= 0 summing to 1 within 1e-12, |lambda| <= 1 + 1e-12.
    static HiddenVariableModel make(std::vector<Component> components);

    const std::vector<Component> &components() const { return c_; }

  private:
    explicit HiddenVariableModel(std::vector<Component> c) : c_(std::move(c)) {}
    std::vector<Component> c_;
};

/// Weights flat on the simplex, lambdas uniform in the unit ball.
HiddenVariableModel sample_hidden_variable_model(Rng &rng, std::size_t components);

class ResponseFunction {
  public:
    /// eta in (0, 1].
    explicit ResponseFunction(double eta);

    double eta() const { return eta_; }
    /// Probability of outcome a given the matching component of lambda.
    double operator()(int a, double lambda_component) const;

  private:
    double eta_;
    double scale_;
};

/// sum_j p_j A(x|lambda_j) A(y|lambda_j).
JointDistribution separable_statistics(const HiddenVariableModel &model,
                                       const ResponseFunction &response);

/// sum_j p_j (1 + x lambda_jx)(1 + y lambda_jy) / 4, computed directly.
QuasiDistribution inverted_separable_statistics(const HiddenVariableModel &model);

enum class SeparabilityRegime {
    Separable,
    /// Correlation target c > 1: violates sum p_j lambda_x lambda_y <= 1.
    NonseparableUnitBound,
    /// 1/2 < c <= 1: excluded by the tight disk bound 1/2 only.
    NonseparableBeyondSufficientCondition,
    /// Infeasible for another reason (marginal targets, coarse grid).
    NonseparableOther,
};

std::string_view to_string(SeparabilityRegime regime);

struct SeparabilityVerdict {
    bool feasible = false;
    /// Present iff feasible; built from the support of the LP solution.
    std::optional<HiddenVariableModel> witness;
    /// Phase-one optimum; at most kLpFeasibilityTolerance when feasible.
    double infeasibility_margin = 0.0;
    /// Required sum p_j lambda_x lambda_y = 3 E[xy] / eta^2.
    double correlation_target = 0.0;
    /// Required sum p_j lambda_x and sum p_j lambda_y.
    Eigen::Vector2d marginal_targets = Eigen::Vector2d::Zero();
    /// max |separable_statistics(witness) - observed|; 0 when infeasible.
    double witness_residual = 0.0;
    SeparabilityRegime regime = SeparabilityRegime::NonseparableOther;
    std::size_t lp_iterations = 0;
};

/**
 * Searches for weights w_g >= 0 on the grid with sum w_g = 1 and
 * sum_g w_g A(x|lambda_g) A(y|lambda_g) = observed(x, y).
 * Among feasible weights the one minimizing sum_g w_g |lambda_g|^2 is
 * returned, so maximally mixed statistics give the single point at 0.
 *
 * Throws SolverFailure if the simplex does not converge.
 */
SeparabilityVerdict separability_feasibility(const JointDistribution &observed,
                                             const ResponseFunction &response,
                                             const HiddenVariableGrid &grid);

/// max sum w_g lambda_x lambda_y with zero first moments over the grid.
double max_achievable_correlation(const HiddenVariableGrid &grid);

} // namespace statent
