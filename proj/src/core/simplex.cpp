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

#include "statent/simplex.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "statent/error.hpp"

namespace statent {

namespace {

class Tableau {
  public:
    Tableau(const LinearProgram &lp, const SimplexOptions &options)
        : m_(lp.a.rows()), n_(lp.a.cols()), opt_(options),
          t_(Eigen::MatrixXd::Zero(m_ + 1, n_ + m_ + 1)), basis_(m_), blocked_(n_ + m_, false) {
        for (Eigen::Index i = 0; i < m_; ++i) {
            const double sign = lp.b(i) < 0.0 ? -1.0 : 1.0;
            t_.row(i).head(n_) = sign * lp.a.row(i);
            t_(i, n_ + i) = 1.0;
            t_(i, rhs()) = sign * lp.b(i);
            basis_[i] = n_ + i;
        }
        limit_ = opt_.max_iterations ? opt_.max_iterations
                                     : static_cast<std::size_t>(50 * (m_ + n_ + m_));
    }

    Eigen::Index rhs() const { return n_ + m_; }

    /// Phase one: minimize the sum of artificials.
    double phase_one() {
        t_.row(m_).setZero();
        for (Eigen::Index i = 0; i < m_; ++i) {
            t_.row(m_).head(n_) -= t_.row(i).head(n_);
            t_(m_, rhs()) -= t_(i, rhs());
        }
        if (!iterate()) {
            // Phase one is bounded below by zero; unbounded means numerical trouble.
            throw SolverFailure("simplex phase one reported an unbounded direction");
        }
        double infeasibility = 0.0;
        for (Eigen::Index i = 0; i < m_; ++i) {
            if (basis_[i] >= n_) {
                infeasibility += t_(i, rhs());
            }
        }
        return infeasibility;
    }

    /// Pivots zero-level artificials out of the basis where possible.
    void drive_out_artificials() {
        for (Eigen::Index i = 0; i < m_; ++i) {
            if (basis_[i] < n_) {
                continue;
            }
            Eigen::Index best = -1;
            double best_abs = opt_.pivot_tolerance;
            for (Eigen::Index j = 0; j < n_; ++j) {
                if (std::abs(t_(i, j)) > best_abs) {
                    best_abs = std::abs(t_(i, j));
                    best = j;
                }
            }
            if (best >= 0) {
                pivot(i, best);
            }
            // Otherwise the row is redundant; its artificial stays basic at zero.
        }
        for (Eigen::Index j = n_; j < n_ + m_; ++j) {
            blocked_[j] = true;
        }
    }

    /// Phase two with the true objective. Returns false when unbounded.
    bool phase_two(const Eigen::VectorXd &c) {
        t_.row(m_).setZero();
        t_.row(m_).head(n_) = c.transpose();
        for (Eigen::Index i = 0; i < m_; ++i) {
            const double cb = basis_[i] < n_ ? c(basis_[i]) : 0.0;
            if (cb != 0.0) {
                t_.row(m_) -= cb * t_.row(i);
            }
        }
        return iterate();
    }

    Eigen::VectorXd solution() const {
        Eigen::VectorXd x = Eigen::VectorXd::Zero(n_);
        for (Eigen::Index i = 0; i < m_; ++i) {
            if (basis_[i] < n_) {
                x(basis_[i]) = std::max(0.0, t_(i, rhs()));
            }
        }
        return x;
    }

    std::size_t iterations() const { return iterations_; }

  private:
    // Dantzig pricing, falling back to Bland's rule after a run of
    // degenerate pivots.
    bool iterate() {
        std::size_t degenerate_run = 0;
        for (;;) {
            if (iterations_ >= limit_) {
                throw SolverFailure("simplex iteration limit reached (" + std::to_string(limit_) +
                                    " pivots, " + std::to_string(m_) + " rows, " +
                                    std::to_string(n_) + " columns)");
            }
            const bool bland = degenerate_run > 20;
            Eigen::Index enter = -1;
            double most_negative = -opt_.optimality_tolerance;
            for (Eigen::Index j = 0; j < n_ + m_; ++j) {
                if (blocked_[j]) {
                    continue;
                }
                const double d = t_(m_, j);
                if (d < most_negative) {
                    enter = j;
                    if (bland) {
                        break;
                    }
                    most_negative = d;
                }
            }
            if (enter < 0) {
                return true;
            }
            Eigen::Index leave = -1;
            double best_ratio = std::numeric_limits<double>::infinity();
            for (Eigen::Index i = 0; i < m_; ++i) {
                const double a = t_(i, enter);
                if (a > opt_.pivot_tolerance) {
                    const double ratio = t_(i, rhs()) / a;
                    if (ratio < best_ratio ||
                        (ratio == best_ratio && leave >= 0 && basis_[i] < basis_[leave])) {
                        best_ratio = ratio;
                        leave = i;
                    }
                }
            }
            if (leave < 0) {
                return false;
            }
            degenerate_run = best_ratio <= 0.0 ? degenerate_run + 1 : 0;
            pivot(leave, enter);
            ++iterations_;
        }
    }

    void pivot(Eigen::Index row, Eigen::Index col) {
        t_.row(row) /= t_(row, col);
        for (Eigen::Index i = 0; i <= m_; ++i) {
            if (i != row) {
                const double f = t_(i, col);
                if (f != 0.0) {
                    t_.row(i) -= f * t_.row(row);
                }
            }
        }
        basis_[row] = col;
    }

    Eigen::Index m_;
    Eigen::Index n_;
    SimplexOptions opt_;
    Eigen::MatrixXd t_;
    std::vector<Eigen::Index> basis_;
    std::vector<bool> blocked_;
    std::size_t limit_ = 0;
    std::size_t iterations_ = 0;
};

} // namespace

LpResult solve_lp(const LinearProgram &lp, const SimplexOptions &options) {
    if (lp.a.rows() != lp.b.size() || lp.a.cols() != lp.c.size()) {
        throw InvalidInput("linear program dimensions are inconsistent");
    }
    if (lp.a.cols() == 0) {
        throw InvalidInput("linear program has no variables");
    }
    Tableau tableau(lp, options);
    LpResult result;
    result.infeasibility = tableau.phase_one();
    if (result.infeasibility > options.feasibility_tolerance) {
        result.status = LpStatus::Infeasible;
        result.iterations = tableau.iterations();
        return result;
    }
    tableau.drive_out_artificials();
    const bool bounded = tableau.phase_two(lp.c);
    result.iterations = tableau.iterations();
    result.x = tableau.solution();
    if (!bounded) {
        result.status = LpStatus::Unbounded;
        return result;
    }
    result.status = LpStatus::Optimal;
    result.objective = lp.c.dot(result.x);
    return result;
}

} // namespace statent
