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

#include "statent/statent.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <memory>
#include <string>

#include "statent/error.hpp"
#include "statent/pipeline.hpp"
#include "statent/version.hpp"

struct statent_config {
    statent::RunConfig config;
    std::size_t subspace_first = 0;
    std::size_t subspace_second = 1;
};

struct statent_report {
    statent::Report report;
};

namespace {

thread_local std::string g_last_error;

statent_status fail(statent_status status, const std::string &message) {
    g_last_error = message;
    return status;
}

// Maps exceptions from the core onto status codes.
template <class F> statent_status guarded(F &&f) {
    try {
        g_last_error.clear();
        f();
        return STATENT_OK;
    } catch (const statent::InvalidInput &e) {
        return fail(STATENT_ERR_INVALID_INPUT, e.what());
    } catch (const statent::SolverFailure &e) {
        return fail(STATENT_ERR_SOLVER, e.what());
    } catch (const std::bad_alloc &) {
        return fail(STATENT_ERR_INTERNAL, "out of memory");
    } catch (const std::exception &e) {
        return fail(STATENT_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(STATENT_ERR_INTERNAL, "unknown error");
    }
}

void require(const void *p, const char *name) {
    if (p == nullptr) {
        throw statent::InvalidInput(std::string(name) + " must not be NULL");
    }
}

char *duplicate(const std::string &s) {
    char *out = static_cast<char *>(std::malloc(s.size() + 1));
    if (out == nullptr) {
        throw std::bad_alloc();
    }
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void require_no_state(const statent_config *c) {
    if (!std::holds_alternative<std::monostate>(c->config.state)) {
        throw statent::InvalidInput(
            "state already specified; --bloch, --density and --pure are mutually exclusive");
    }
}

Eigen::VectorXcd complex_vector(const double *re, const double *im, std::size_t n) {
    require(re, "real part");
    Eigen::VectorXcd v(static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i) {
        v(static_cast<Eigen::Index>(i)) = statent::Complex(re[i], im ? im[i] : 0.0);
    }
    return v;
}

statent::Command to_command(statent_command c) {
    switch (c) {
    case STATENT_CMD_WITNESS:
        return statent::Command::Witness;
    case STATENT_CMD_SEPARABILITY:
        return statent::Command::Separability;
    case STATENT_CMD_SWEEP:
        return statent::Command::Sweep;
    case STATENT_CMD_SAMPLE:
        return statent::Command::Sample;
    }
    throw statent::InvalidInput("unknown command");
}

} // namespace

extern "C" {

const char *statent_version(void) { return statent::kVersionString; }

const char *statent_last_error(void) { return g_last_error.c_str(); }

void statent_string_free(char *s) { std::free(s); }

statent_status statent_config_create(statent_config **out) {
    return guarded([&] {
        require(out, "out");
        *out = new statent_config();
    });
}

void statent_config_destroy(statent_config *config) { delete config; }

statent_status statent_config_set_bloch(statent_config *config, double x, double y, double z) {
    return guarded([&] {
        require(config, "config");
        require_no_state(config);
        config->config.state = statent::BlochInput{statent::Vec3(x, y, z)};
    });
}

statent_status statent_config_set_density(statent_config *config, const double *real,
                                          const double *imag, size_t dim) {
    return guarded([&] {
        require(config, "config");
        require_no_state(config);
        if (dim < 2) {
            throw statent::InvalidInput("density matrix dimension must be at least 2");
        }
        const Eigen::VectorXcd flat = complex_vector(real, imag, dim * dim);
        statent::DensityInput d;
        d.rho = Eigen::MatrixXcd(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
        for (std::size_t r = 0; r < dim; ++r) {
            for (std::size_t c = 0; c < dim; ++c) {
                d.rho(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                    flat(static_cast<Eigen::Index>(r * dim + c));
            }
        }
        d.first = config->subspace_first;
        d.second = config->subspace_second;
        config->config.state = std::move(d);
    });
}

statent_status statent_config_set_pure(statent_config *config, const double *real, const double *imag,
                                       size_t dim) {
    return guarded([&] {
        require(config, "config");
        require_no_state(config);
        if (dim < 2) {
            throw statent::InvalidInput("pure state dimension must be at least 2");
        }
        config->config.state = statent::PureInput{complex_vector(real, imag, dim), std::nullopt};
    });
}

statent_status statent_config_set_pure_perp(statent_config *config, const double *real,
                                            const double *imag, size_t dim) {
    return guarded([&] {
        require(config, "config");
        auto *p = std::get_if<statent::PureInput>(&config->config.state);
        if (p == nullptr) {
            throw statent::InvalidInput("an orthogonal partner requires a pure-state input");
        }
        if (static_cast<Eigen::Index>(dim) != p->amplitudes.size()) {
            throw statent::InvalidInput("orthogonal partner dimension does not match the pure state");
        }
        p->perp = complex_vector(real, imag, dim);
    });
}

statent_status statent_config_set_subspace(statent_config *config, size_t first, size_t second) {
    return guarded([&] {
        require(config, "config");
        if (first == second) {
            throw statent::InvalidInput("subspace indices must be distinct");
        }
        config->subspace_first = first;
        config->subspace_second = second;
        if (auto *d = std::get_if<statent::DensityInput>(&config->config.state)) {
            d->first = first;
            d->second = second;
        }
    });
}

statent_status statent_config_set_eta(statent_config *config, double eta) {
    return guarded([&] {
        require(config, "config");
        if (!(eta > 0.0 && eta <= 1.0)) {
            throw statent::InvalidInput("eta must lie in (0, 1]");
        }
        config->config.eta = eta;
    });
}

statent_status statent_config_set_grid(statent_config *config, unsigned rings, unsigned angles) {
    return guarded([&] {
        require(config, "config");
        if (rings > 0 && angles == 0) {
            throw statent::InvalidInput("grid needs at least one angle per ring");
        }
        config->config.grid = {rings, angles};
    });
}

statent_status statent_config_set_shots(statent_config *config, uint64_t shots, uint64_t seed) {
    return guarded([&] {
        require(config, "config");
        if (shots == 0) {
            throw statent::InvalidInput("shot count must be at least 1");
        }
        config->config.shots = shots;
        config->config.seed = seed;
    });
}

statent_status statent_config_set_sigma(statent_config *config, double sigma) {
    return guarded([&] {
        require(config, "config");
        if (!(sigma > 0.0)) {
            throw statent::InvalidInput("certification threshold must be positive");
        }
        config->config.sigma = sigma;
    });
}

statent_status statent_config_set_sweep(statent_config *config, double s_lo, double s_hi, unsigned s_steps,
                                        double eta_lo, double eta_hi, unsigned eta_steps, int with_lp) {
    return guarded([&] {
        require(config, "config");
        config->config.sweep = {{s_lo, s_hi, s_steps}, {eta_lo, eta_hi, eta_steps}, with_lp != 0};
        statent::validate(config->config, statent::Command::Sweep);
    });
}

statent_status statent_config_to_json(const statent_config *config, char **out) {
    return guarded([&] {
        require(config, "config");
        require(out, "out");
        *out = duplicate(statent::config_to_json(config->config));
    });
}

statent_status statent_config_from_json(const char *json, statent_config **out) {
    return guarded([&] {
        require(json, "json");
        require(out, "out");
        auto c = std::make_unique<statent_config>();
        c->config = statent::config_from_json(json);
        if (const auto *d = std::get_if<statent::DensityInput>(&c->config.state)) {
            c->subspace_first = d->first;
            c->subspace_second = d->second;
        }
        *out = c.release();
    });
}

statent_status statent_run(statent_command command, const statent_config *config, statent_report **out) {
    return guarded([&] {
        require(config, "config");
        require(out, "out");
        *out = new statent_report{statent::run_command(to_command(command), config->config)};
    });
}

statent_status statent_run_sweep_csv(const statent_config *config, char **csv, char **warnings) {
    return guarded([&] {
        require(config, "config");
        require(csv, "csv");
        const statent::SweepResult result = statent::cmd_sweep(config->config);
        std::string w;
        for (const auto &line : result.warnings) {
            w += line + "\n";
        }
        char *table = duplicate(statent::sweep_to_csv(result));
        if (warnings != nullptr) {
            try {
                *warnings = duplicate(w);
            } catch (...) {
                std::free(table);
                throw;
            }
        }
        *csv = table;
    });
}

statent_status statent_replay(const char *report_json, statent_report **out) {
    return guarded([&] {
        require(report_json, "report_json");
        require(out, "out");
        const statent::Report recorded = statent::report_from_json(report_json);
        *out = new statent_report{statent::run_command(recorded.command, recorded.config)};
    });
}

void statent_report_destroy(statent_report *report) { delete report; }

statent_status statent_report_to_json(const statent_report *report, char **out) {
    return guarded([&] {
        require(report, "report");
        require(out, "out");
        *out = duplicate(statent::report_to_json(report->report));
    });
}

statent_status statent_report_to_text(const statent_report *report, char **out) {
    return guarded([&] {
        require(report, "report");
        require(out, "out");
        *out = duplicate(statent::report_to_text(report->report));
    });
}

statent_status statent_report_from_json(const char *json, statent_report **out) {
    return guarded([&] {
        require(json, "json");
        require(out, "out");
        *out = new statent_report{statent::report_from_json(json)};
    });
}

statent_status statent_report_nonclassical(const statent_report *report, int *out) {
    return guarded([&] {
        require(report, "report");
        require(out, "out");
        require(report->report.witness ? &*report->report.witness : nullptr, "witness block");
        *out = report->report.witness->nonclassical ? 1 : 0;
    });
}

statent_status statent_report_min_entry(const statent_report *report, double *out) {
    return guarded([&] {
        require(report, "report");
        require(out, "out");
        require(report->report.witness ? &*report->report.witness : nullptr, "witness block");
        *out = report->report.witness->min_entry;
    });
}

statent_status statent_report_quasi(const statent_report *report, double out[4]) {
    return guarded([&] {
        require(report, "report");
        require(out, "out");
        require(report->report.witness ? &*report->report.witness : nullptr, "witness block");
        for (std::size_t i = 0; i < 4; ++i) {
            out[i] = report->report.witness->quasi[i];
        }
    });
}

statent_status statent_report_separable(const statent_report *report, int *out) {
    return guarded([&] {
        require(report, "report");
        require(out, "out");
        if (!report->report.separability) {
            throw statent::InvalidInput("report has no separability verdict");
        }
        *out = report->report.separability->feasible ? 1 : 0;
    });
}

statent_status statent_report_certified(const statent_report *report, int *out, double *z_score) {
    return guarded([&] {
        require(report, "report");
        require(out, "out");
        if (!report->report.sampling) {
            throw statent::InvalidInput("report has no sampling block");
        }
        *out = report->report.sampling->significance.certified ? 1 : 0;
        if (z_score != nullptr) {
            *z_score = report->report.sampling->significance.z_score;
        }
    });
}

size_t statent_report_warning_count(const statent_report *report) {
    return report ? report->report.warnings.size() : 0;
}

statent_status statent_observed_joint(const double s[3], double eta, double out[4]) {
    return guarded([&] {
        require(s, "s");
        require(out, "out");
        const auto p = statent::observed_joint(statent::BlochVector::make(s[0], s[1], s[2]),
                                               statent::build_povm(eta));
        for (std::size_t i = 0; i < 4; ++i) {
            out[i] = p[i];
        }
    });
}

statent_status statent_invert_joint(double eta, const double observed[4], double out[4]) {
    return guarded([&] {
        require(observed, "observed");
        require(out, "out");
        const auto p = statent::JointDistribution::make({observed[0], observed[1], observed[2], observed[3]});
        const auto q = statent::invert_joint(statent::InversionKernel(eta), p);
        for (std::size_t i = 0; i < 4; ++i) {
            out[i] = q[i];
        }
    });
}

} // extern "C"
