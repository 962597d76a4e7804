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

// Dense two-phase tableau simplex for small equality-form programs:
//
//   minimize c.x  subject to  A x = b,  x >= 0.
//
// Sized for a handful of rows and a few thousand columns.

#include <cstddef>

#include <Eigen/Dense>

namespace statent {

struct LinearProgram {
    Eigen::MatrixXd a;
    Eigen::VectorXd b;
    Eigen::VectorXd c;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct SimplexOptions {
    /// Phase-one optimum above this means infeasible.
    double feasibility_tolerance = 1e-9;
    double pivot_tolerance = 1e-12;
    double optimality_tolerance = 1e-12;
    /// 0 selects 50 * (rows + columns).
    std::size_t max_iterations = 0;
};

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    Eigen::VectorXd x;
    double objective = 0.0;
    /// Phase-one optimum: sum of artificial variables (0 when feasible).
    double infeasibility = 0.0;
    std::size_t iterations = 0;
};

/// Throws SolverFailure when the iteration limit is hit.
LpResult solve_lp(const LinearProgram &lp, const SimplexOptions &options = {});

} // namespace statent
