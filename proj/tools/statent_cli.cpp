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

// statent command-line driver. Talks to the library only through the C API.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "statent/statent.h"

namespace {

constexpr int kExitInvalid = STATENT_ERR_INVALID_INPUT;

struct CliError {
    int code;
    std::string message;
};

void check(statent_status status) {
    if (status != STATENT_OK) {
        throw CliError{static_cast<int>(status), statent_last_error()};
    }
}

struct ConfigDeleter {
    void operator()(statent_config *c) const { statent_config_destroy(c); }
};
struct ReportDeleter {
    void operator()(statent_report *r) const { statent_report_destroy(r); }
};
struct StringDeleter {
    void operator()(char *s) const { statent_string_free(s); }
};
using ConfigPtr = std::unique_ptr<statent_config, ConfigDeleter>;
using ReportPtr = std::unique_ptr<statent_report, ReportDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

struct ComplexList {
    std::vector<double> re;
    std::vector<double> im;
};

// Parses "a" or "a+bi" / "a-bi" / "bi" (j accepted for i).
void parse_complex(const std::string &token, double &re, double &im) {
    const auto fail = [&] { throw CliError{kExitInvalid, "cannot parse complex entry '" + token + "'"}; };
    if (token.empty()) {
        fail();
    }
    const char last = token.back();
    const bool imaginary = last == 'i' || last == 'j';
    if (!imaginary) {
        std::size_t used = 0;
        try {
            re = std::stod(token, &used);
        } catch (...) {
            fail();
        }
        if (used != token.size()) {
            fail();
        }
        im = 0.0;
        return;
    }
    std::string body = token.substr(0, token.size() - 1);
    // Split at the last sign that is not part of an exponent and not leading.
    std::size_t split = std::string::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    const auto number = [&](const std::string &s) {
        if (s == "+" || s.empty()) {
            return 1.0;
        }
        if (s == "-") {
            return -1.0;
        }
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(s, &used);
        } catch (...) {
            fail();
        }
        if (used != s.size()) {
            fail();
        }
        return v;
    };
    if (split == std::string::npos) {
        re = 0.0;
        im = number(body);
    } else {
        re = number(body.substr(0, split));
        im = number(body.substr(split));
    }
}

ComplexList parse_complex_list(const std::string &text) {
    ComplexList out;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
        token.erase(0, token.find_first_not_of(" \t"));
        token.erase(token.find_last_not_of(" \t") + 1);
        double re = 0.0;
        double im = 0.0;
        parse_complex(token, re, im);
        out.re.push_back(re);
        out.im.push_back(im);
    }
    if (out.re.empty()) {
        throw CliError{kExitInvalid, "empty amplitude list"};
    }
    return out;
}

struct StateOptions {
    std::vector<double> bloch;
    std::string density;
    std::string pure;
    std::string perp;
    std::optional<std::size_t> dim;
    std::vector<std::size_t> subspace;
};

struct OutputOptions {
    std::string format = "text";
    std::string output;
};

struct CommonOptions {
    StateOptions state;
    OutputOptions out;
    std::optional<double> eta;
    unsigned rings = 24;
    unsigned angles = 48;
};

void add_state_options(CLI::App *cmd, StateOptions &s) {
    auto *bloch = cmd->add_option("--bloch", s.bloch, "Bloch vector x,y,z")->delimiter(',')->expected(3);
    auto *density = cmd->add_option("--density", s.density,
                                    "Row-major density matrix entries (a, a+bi, a-bi), comma separated");
    auto *pure = cmd->add_option("--pure", s.pure, "Pure-state amplitudes, comma separated (normalized automatically)");
    bloch->excludes(density)->excludes(pure);
    density->excludes(pure);
    cmd->add_option("--perp", s.perp, "Orthogonal partner for --pure")->needs(pure);
    cmd->add_option("--dim", s.dim, "Expected dimension of --pure or --density");
    cmd->add_option("--subspace", s.subspace, "Basis indices i,j of the qubit subspace for --density with d > 2")
        ->delimiter(',')
        ->expected(2)
        ->needs(density);
}

void add_output_options(CLI::App *cmd, OutputOptions &o) {
    cmd->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--output,-o", o.output, "Write the report to this file instead of stdout");
}

void add_common(CLI::App *cmd, CommonOptions &c, bool grid) {
    add_state_options(cmd, c.state);
    add_output_options(cmd, c.out);
    cmd->add_option("--eta", c.eta, "Measurement strength in (0, 1]; default 0.9 min(1, sqrt(3)|s|)");
    if (grid) {
        cmd->add_option("--rings", c.rings, "Hidden-variable grid radii");
        cmd->add_option("--angles", c.angles, "Hidden-variable grid angles per radius");
    }
}

std::size_t integer_sqrt(std::size_t n) {
    auto r = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(n))));
    return r * r == n ? r : 0;
}

ConfigPtr build_config(const CommonOptions &c) {
    statent_config *raw = nullptr;
    check(statent_config_create(&raw));
    ConfigPtr cfg(raw);
    const auto &s = c.state;
    if (!s.bloch.empty()) {
        check(statent_config_set_bloch(cfg.get(), s.bloch[0], s.bloch[1], s.bloch[2]));
    } else if (!s.density.empty()) {
        const ComplexList entries = parse_complex_list(s.density);
        const std::size_t d = integer_sqrt(entries.re.size());
        if (d == 0) {
            throw CliError{kExitInvalid, "--density needs d*d entries"};
        }
        if (s.dim && *s.dim != d) {
            throw CliError{kExitInvalid, "--density entry count does not match --dim"};
        }
        if (!s.subspace.empty()) {
            check(statent_config_set_subspace(cfg.get(), s.subspace[0], s.subspace[1]));
        }
        check(statent_config_set_density(cfg.get(), entries.re.data(), entries.im.data(), d));
    } else if (!s.pure.empty()) {
        const ComplexList amps = parse_complex_list(s.pure);
        if (s.dim && *s.dim != amps.re.size()) {
            throw CliError{kExitInvalid, "--pure amplitude count does not match --dim"};
        }
        check(statent_config_set_pure(cfg.get(), amps.re.data(), amps.im.data(), amps.re.size()));
        if (!s.perp.empty()) {
            const ComplexList perp = parse_complex_list(s.perp);
            check(statent_config_set_pure_perp(cfg.get(), perp.re.data(), perp.im.data(), perp.re.size()));
        }
    }
    if (c.eta) {
        check(statent_config_set_eta(cfg.get(), *c.eta));
    }
    check(statent_config_set_grid(cfg.get(), c.rings, c.angles));
    return cfg;
}

void emit(const std::string &text, const std::string &path) {
    if (path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') {
            std::cout << '\n';
        }
        return;
    }
    std::ofstream f(path);
    if (!f) {
        throw CliError{kExitInvalid, "cannot open output file '" + path + "'"};
    }
    f << text;
    if (!text.empty() && text.back() != '\n') {
        f << '\n';
    }
}

void emit_report(const statent_report *report, const OutputOptions &o) {
    char *raw = nullptr;
    check(o.format == "json" ? statent_report_to_json(report, &raw) : statent_report_to_text(report, &raw));
    StringPtr text(raw);
    emit(text.get(), o.output);
}

int run_report(statent_command command, const ConfigPtr &cfg, const OutputOptions &o) {
    statent_report *raw = nullptr;
    check(statent_run(command, cfg.get(), &raw));
    ReportPtr report(raw);
    emit_report(report.get(), o);
    return 0;
}

std::string read_file(const std::string &path) {
    std::ifstream f(path);
    if (!f) {
        throw CliError{kExitInvalid, "cannot read '" + path + "'"};
    }
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Certify nonclassicality of qubit states from joint two-observable statistics"};
    app.set_version_flag("--version", std::string(statent_version()));
    app.set_config("--config", "", "TOML/INI file mirroring the command-line flags");
    app.require_subcommand(1);

    CommonOptions witness_opts;
    auto *witness = app.add_subcommand("witness", "Quasi-distribution negativity witness for one state");
    add_common(witness, witness_opts, false);

    CommonOptions sep_opts;
    auto *sep = app.add_subcommand("separability", "Hidden-variable LP verdict for the observed statistics");
    add_common(sep, sep_opts, true);

    CommonOptions sample_opts;
    std::uint64_t shots = 0;
    std::optional<std::uint64_t> seed;
    double sigma = 5.0;
    auto *sample = app.add_subcommand("sample", "Finite-shot simulation with z-score certification");
    add_common(sample, sample_opts, false);
    sample->add_option("--shots", shots, "Number of measurement shots")->required();
    sample->add_option("--seed", seed, "PRNG seed")->required();
    sample->add_option("--sigma", sigma, "Certification threshold in standard errors");

    CommonOptions sweep_opts;
    std::vector<double> s_range{0.0, 1.0};
    std::vector<double> eta_range{0.0, 1.0};
    unsigned s_steps = 100;
    unsigned eta_steps = 100;
    bool no_lp = false;
    std::string sweep_output;
    auto *sweep = app.add_subcommand("sweep", "CSV table over a (|s|, eta) grid");
    sweep->add_option("--s-range", s_range, "lo,hi for |s|; values lo + (hi-lo)k/steps, k = 1..steps")
        ->delimiter(',')
        ->expected(2);
    sweep->add_option("--s-steps", s_steps, "Number of |s| values");
    sweep->add_option("--eta-range", eta_range, "lo,hi for eta")->delimiter(',')->expected(2);
    sweep->add_option("--eta-steps", eta_steps, "Number of eta values");
    sweep->add_flag("--no-lp", no_lp, "Skip the separability LP column");
    sweep->add_option("--rings", sweep_opts.rings, "Hidden-variable grid radii");
    sweep->add_option("--angles", sweep_opts.angles, "Hidden-variable grid angles per radius");
    sweep->add_option("--output,-o", sweep_output, "Write the CSV to this file instead of stdout");

    std::string replay_path;
    OutputOptions replay_out;
    auto *replay = app.add_subcommand("replay", "Re-run the command recorded in a JSON report");
    replay->add_option("report", replay_path, "JSON report file")->required();
    add_output_options(replay, replay_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInvalid;
    }

    try {
        if (*witness) {
            return run_report(STATENT_CMD_WITNESS, build_config(witness_opts), witness_opts.out);
        }
        if (*sep) {
            return run_report(STATENT_CMD_SEPARABILITY, build_config(sep_opts), sep_opts.out);
        }
        if (*sample) {
            ConfigPtr cfg = build_config(sample_opts);
            check(statent_config_set_shots(cfg.get(), shots, *seed));
            check(statent_config_set_sigma(cfg.get(), sigma));
            return run_report(STATENT_CMD_SAMPLE, cfg, sample_opts.out);
        }
        if (*sweep) {
            ConfigPtr cfg = build_config(sweep_opts);
            check(statent_config_set_sweep(cfg.get(), s_range[0], s_range[1], s_steps, eta_range[0],
                                           eta_range[1], eta_steps, no_lp ? 0 : 1));
            char *csv_raw = nullptr;
            char *warn_raw = nullptr;
            check(statent_run_sweep_csv(cfg.get(), &csv_raw, &warn_raw));
            StringPtr csv(csv_raw);
            StringPtr warnings(warn_raw);
            if (warnings && *warnings.get() != '\0') {
                std::istringstream lines(warnings.get());
                for (std::string line; std::getline(lines, line);) {
                    std::cerr << "warning: " << line << '\n';
                }
            }
            emit(csv.get(), sweep_output);
            return 0;
        }
        if (*replay) {
            statent_report *raw = nullptr;
            check(statent_replay(read_file(replay_path).c_str(), &raw));
            ReportPtr report(raw);
            emit_report(report.get(), replay_out);
            return 0;
        }
    } catch (const CliError &e) {
        std::cerr << "error: " << e.message << '\n';
        return e.code;
    }
    return kExitInvalid;
}
