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

#include "statent/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "statent/error.hpp"

namespace statent {

namespace {

Eigen::VectorXcd basis_vector(Eigen::Index dim, std::size_t k) {
    Eigen::VectorXcd e = Eigen::VectorXcd::Zero(dim);
    e(static_cast<Eigen::Index>(k)) = 1.0;
    return e;
}

HiddenVariableGrid grid_from(const GridConfig &g) { return HiddenVariableGrid::rings(g.rings, g.angles); }

std::string grid_warning(double max_corr) {
    return "hidden-variable grid reaches a maximum correlation of only " + format_double(max_corr) +
           " (< " + format_double(kGridCorrelationWarning) + "); infeasible verdicts may reflect the grid";
}

Report start_report(Command command, const RunConfig &config) {
    validate(config, command);
    Report r;
    r.command = command;
    r.config = config;
    r.state = resolve_state(config.state);
    r.witness = find_witness(r.state.bloch, config.eta);
    switch (r.witness->status) {
    case WitnessStatus::TrivialException:
        r.warnings.push_back("s = 0: the maximally mixed state admits no negativity witness");
        break;
    case WitnessStatus::EtaNotBelowThreshold:
        r.warnings.push_back("requested eta is not below sqrt(3)|s|; no negativity at this strength");
        break;
    case WitnessStatus::BelowNumericalResolution:
        r.warnings.push_back("|s| too small for double precision to resolve the negativity");
        break;
    case WitnessStatus::Nonclassical:
        break;
    }
    return r;
}

double eta_used(const WitnessReport &w) { return w.eta.value_or(1.0); }

} // namespace

StateSummary resolve_state(const StateSpec &spec) {
    StateSummary s;
    if (const auto *b = std::get_if<BlochInput>(&spec)) {
        s.kind = "bloch";
        s.bloch = BlochVector::make(b->s);
        return s;
    }
    if (const auto *d = std::get_if<DensityInput>(&spec)) {
        s.kind = "density";
        const Eigen::Index dim = d->rho.rows();
        if (d->rho.cols() != dim || dim < 2) {
            throw InvalidInput("density matrix must be square with dimension >= 2");
        }
        s.dimension = static_cast<std::size_t>(dim);
        if (dim == 2) {
            s.bloch = density_to_bloch(DensityMatrix2::make(d->rho));
            return s;
        }
        if (d->first == d->second || d->first >= s.dimension || d->second >= s.dimension) {
            throw InvalidInput("subspace indices must be distinct and below the dimension");
        }
        const auto proj =
            project_mixed_to_qubit(d->rho, basis_vector(dim, d->first), basis_vector(dim, d->second));
        s.bloch = proj.bloch;
        s.subspace_weight = proj.weight;
        return s;
    }
    if (const auto *p = std::get_if<PureInput>(&spec)) {
        s.kind = "pure";
        const PureStateVector psi = PureStateVector::normalized(p->amplitudes);
        s.dimension = static_cast<std::size_t>(psi.dim());
        std::optional<PureStateVector> perp;
        if (p->perp) {
            perp = PureStateVector::normalized(*p->perp);
        }
        s.bloch = embed_pure_state(psi, perp);
        return s;
    }
    throw InvalidInput("no state specification given");
}

Report cmd_witness(const RunConfig &config) { return start_report(Command::Witness, config); }

Report cmd_separability(const RunConfig &config) {
    Report r = start_report(Command::Separability, config);
    const HiddenVariableGrid grid = grid_from(config.grid);
    r.separability =
        separability_feasibility(r.witness->observed, ResponseFunction(eta_used(*r.witness)), grid);
    r.grid_max_correlation = max_achievable_correlation(grid);
    if (*r.grid_max_correlation < kGridCorrelationWarning) {
        r.warnings.push_back(grid_warning(*r.grid_max_correlation));
    }
    return r;
}

Report cmd_sample(const RunConfig &config) {
    Report r = start_report(Command::Sample, config);
    SamplingBlock block;
    block.eta = eta_used(*r.witness);
    block.record = sample_counts(r.witness->observed, *config.shots, *config.seed);
    block.estimate = estimate_quasi(block.record, InversionKernel(block.eta));
    block.significance = negativity_significance(block.estimate, config.sigma);
    if (block.significance.degenerate) {
        r.warnings.push_back("degenerate counts: zero standard error at the minimum entry");
    }
    r.sampling = block;
    return r;
}

Report run_command(Command command, const RunConfig &config) {
    switch (command) {
    case Command::Witness:
        return cmd_witness(config);
    case Command::Separability:
        return cmd_separability(config);
    case Command::Sample:
        return cmd_sample(config);
    case Command::Sweep:
        break;
    }
    throw InvalidInput("sweep produces a table, not a report");
}

SweepResult cmd_sweep(const RunConfig &config) {
    validate(config, Command::Sweep);
    const std::vector<double> norms = config.sweep.s_norm.values();
    const std::vector<double> etas = config.sweep.eta.values();

    SweepResult result;
    result.rows.resize(norms.size() * etas.size());
    std::optional<HiddenVariableGrid> grid;
    if (config.sweep.with_lp) {
        grid = grid_from(config.grid);
        const double max_corr = max_achievable_correlation(*grid);
        if (max_corr < kGridCorrelationWarning) {
            result.warnings.push_back(grid_warning(max_corr));
        }
    }

    const auto evaluate = [&](std::size_t idx) {
        SweepRow &row = result.rows[idx];
        row.s_norm = norms[idx / etas.size()];
        row.eta = etas[idx % etas.size()];
        const WitnessReport w = find_witness(BlochVector::make(0.0, 0.0, row.s_norm), row.eta);
        row.ratio = w.threshold_ratio;
        row.min_entry = w.min_entry;
        row.nonclassical = w.nonclassical;
        if (grid) {
            const auto v = separability_feasibility(w.observed, ResponseFunction(row.eta), *grid);
            row.lp_feasible = v.feasible;
            row.lp_regime = v.regime;
        }
    };

    const std::size_t n = result.rows.size();
    const std::size_t workers =
        std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::max<std::size_t>(n, 1));
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < workers; ++t) {
            pool.emplace_back([&, t] {
                try {
                    for (std::size_t i = t; i < n; i += workers) {
                        evaluate(i);
                    }
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) {
                        failure = std::current_exception();
                    }
                }
            });
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return result;
}

std::string sweep_to_csv(const SweepResult &result) {
    std::ostringstream out;
    out << "s_norm,eta,ratio,min_entry,nonclassical,lp_feasible,lp_regime\n";
    for (const auto &r : result.rows) {
        out << format_double(r.s_norm) << ',' << format_double(r.eta) << ',' << format_double(r.ratio) << ','
            << format_double(r.min_entry) << ',' << (r.nonclassical ? "true" : "false") << ','
            << (r.lp_feasible ? (*r.lp_feasible ? "true" : "false") : "") << ','
            << (r.lp_regime ? std::string(to_string(*r.lp_regime)) : std::string()) << '\n';
    }
    return out.str();
}

} // namespace statent
