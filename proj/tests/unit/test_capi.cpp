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
#include <string>

#include "statent/statent.h"

using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::WithinAbs;

namespace {

struct Config {
    statent_config *p = nullptr;
    Config() { REQUIRE(statent_config_create(&p) == STATENT_OK); }
    ~Config() { statent_config_destroy(p); }
};

struct Report {
    statent_report *p = nullptr;
    ~Report() { statent_report_destroy(p); }
};

std::string take(char *s) {
    std::string out = s ? s : "";
    statent_string_free(s);
    return out;
}

} // namespace

TEST_CASE("version and error reporting") {
    CHECK(std::string(statent_version()) == "1.0.0");
    CHECK(statent_config_create(nullptr) == STATENT_ERR_INVALID_INPUT);
    CHECK(std::string(statent_last_error()).size() > 0);
}

TEST_CASE("witness through the C API") {
    Config cfg;
    REQUIRE(statent_config_set_bloch(cfg.p, 0, 0, 1) == STATENT_OK);
    Report rep;
    REQUIRE(statent_run(STATENT_CMD_WITNESS, cfg.p, &rep.p) == STATENT_OK);
    int nc = 0;
    double min = 0;
    double q[4];
    REQUIRE(statent_report_nonclassical(rep.p, &nc) == STATENT_OK);
    REQUIRE(statent_report_min_entry(rep.p, &min) == STATENT_OK);
    REQUIRE(statent_report_quasi(rep.p, q) == STATENT_OK);
    CHECK(nc == 1);
    CHECK_THAT(min, WithinAbs(-0.2311252243246881, 1e-12));
    CHECK_THAT(q[0] + q[1] + q[2] + q[3], WithinAbs(1.0, 1e-12));
    int sep = 0;
    CHECK(statent_report_separable(rep.p, &sep) == STATENT_ERR_INVALID_INPUT);
    CHECK(statent_report_certified(rep.p, &sep, nullptr) == STATENT_ERR_INVALID_INPUT);
    CHECK(statent_report_warning_count(rep.p) == 0);

    char *text = nullptr;
    REQUIRE(statent_report_to_text(rep.p, &text) == STATENT_OK);
    CHECK_THAT(take(text), ContainsSubstring("nonclassical"));
}

TEST_CASE("state specifications are mutually exclusive") {
    Config cfg;
    REQUIRE(statent_config_set_bloch(cfg.p, 0, 0, 1) == STATENT_OK);
    const double amp[2] = {1, 0};
    CHECK(statent_config_set_pure(cfg.p, amp, nullptr, 2) == STATENT_ERR_INVALID_INPUT);
    const double rho[4] = {1, 0, 0, 0};
    CHECK(statent_config_set_density(cfg.p, rho, nullptr, 2) == STATENT_ERR_INVALID_INPUT);
}

TEST_CASE("invalid inputs map to error codes") {
    Config cfg;
    Report rep;
    CHECK(statent_run(STATENT_CMD_WITNESS, cfg.p, &rep.p) == STATENT_ERR_INVALID_INPUT);
    CHECK(rep.p == nullptr);
    REQUIRE(statent_config_set_bloch(cfg.p, 2, 0, 0) == STATENT_OK);
    CHECK(statent_run(STATENT_CMD_WITNESS, cfg.p, &rep.p) == STATENT_ERR_INVALID_INPUT);
    CHECK(statent_config_set_eta(cfg.p, 0.0) == STATENT_ERR_INVALID_INPUT);
    CHECK(statent_run(STATENT_CMD_WITNESS, nullptr, &rep.p) == STATENT_ERR_INVALID_INPUT);
    CHECK(statent_run(STATENT_CMD_SWEEP, cfg.p, &rep.p) == STATENT_ERR_INVALID_INPUT);
    CHECK(statent_config_from_json("[", nullptr) == STATENT_ERR_INVALID_INPUT);
    statent_config *bad = nullptr;
    CHECK(statent_config_from_json("{oops", &bad) == STATENT_ERR_INVALID_INPUT);
    CHECK(bad == nullptr);
    CHECK(statent_replay("{}", &rep.p) == STATENT_ERR_INVALID_INPUT);
}

TEST_CASE("pure and density inputs") {
    Config pure;
    const double amp[3] = {1, 1, 1};
    REQUIRE(statent_config_set_pure(pure.p, amp, nullptr, 3) == STATENT_OK);
    Report rep;
    REQUIRE(statent_run(STATENT_CMD_WITNESS, pure.p, &rep.p) == STATENT_OK);
    int nc = 0;
    statent_report_nonclassical(rep.p, &nc);
    CHECK(nc == 1);

    Config dens;
    const double re[9] = {0.5, 0, 0, 0, 0.3, 0, 0, 0, 0.2};
    REQUIRE(statent_config_set_density(dens.p, re, nullptr, 3) == STATENT_OK);
    REQUIRE(statent_config_set_subspace(dens.p, 0, 2) == STATENT_OK);
    Report drep;
    REQUIRE(statent_run(STATENT_CMD_WITNESS, dens.p, &drep.p) == STATENT_OK);
    char *json = nullptr;
    REQUIRE(statent_report_to_json(drep.p, &json) == STATENT_OK);
    CHECK_THAT(take(json), ContainsSubstring("\"subspace_weight\": 0.7"));
}

TEST_CASE("separability and sampling through the C API") {
    Config cfg;
    statent_config_set_bloch(cfg.p, 0, 0, 1);
    statent_config_set_eta(cfg.p, 1.0);
    Report sep;
    REQUIRE(statent_run(STATENT_CMD_SEPARABILITY, cfg.p, &sep.p) == STATENT_OK);
    int feasible = 1;
    REQUIRE(statent_report_separable(sep.p, &feasible) == STATENT_OK);
    CHECK(feasible == 0);

    Report missing;
    CHECK(statent_run(STATENT_CMD_SAMPLE, cfg.p, &missing.p) == STATENT_ERR_INVALID_INPUT);
    REQUIRE(statent_config_set_shots(cfg.p, 1000000, 7) == STATENT_OK);
    Report smp;
    REQUIRE(statent_run(STATENT_CMD_SAMPLE, cfg.p, &smp.p) == STATENT_OK);
    int certified = 0;
    double z = 0;
    REQUIRE(statent_report_certified(smp.p, &certified, &z) == STATENT_OK);
    CHECK(certified == 1);
    CHECK(z > 5);
}

TEST_CASE("replay reproduces a report") {
    Config cfg;
    statent_config_set_bloch(cfg.p, 0.1, 0.2, 0.3);
    statent_config_set_shots(cfg.p, 5000, 11);
    Report rep;
    REQUIRE(statent_run(STATENT_CMD_SAMPLE, cfg.p, &rep.p) == STATENT_OK);
    char *json = nullptr;
    REQUIRE(statent_report_to_json(rep.p, &json) == STATENT_OK);
    const std::string original = take(json);
    Report again;
    REQUIRE(statent_replay(original.c_str(), &again.p) == STATENT_OK);
    REQUIRE(statent_report_to_json(again.p, &json) == STATENT_OK);
    CHECK(take(json) == original);

    Report parsed;
    REQUIRE(statent_report_from_json(original.c_str(), &parsed.p) == STATENT_OK);
    REQUIRE(statent_report_to_json(parsed.p, &json) == STATENT_OK);
    CHECK(take(json) == original);

    char *cjson = nullptr;
    REQUIRE(statent_config_to_json(cfg.p, &cjson) == STATENT_OK);
    const std::string cfg_text = take(cjson);
    statent_config *copy = nullptr;
    REQUIRE(statent_config_from_json(cfg_text.c_str(), &copy) == STATENT_OK);
    REQUIRE(statent_config_to_json(copy, &cjson) == STATENT_OK);
    CHECK(take(cjson) == cfg_text);
    statent_config_destroy(copy);
}

TEST_CASE("sweep CSV through the C API") {
    Config cfg;
    REQUIRE(statent_config_set_sweep(cfg.p, 0, 1, 4, 0, 1, 4, 0) == STATENT_OK);
    char *csv = nullptr;
    char *warnings = nullptr;
    REQUIRE(statent_run_sweep_csv(cfg.p, &csv, &warnings) == STATENT_OK);
    const std::string table = take(csv);
    take(warnings);
    CHECK_THAT(table, ContainsSubstring("s_norm,eta,ratio,min_entry,nonclassical,lp_feasible,lp_regime"));
    CHECK(std::count(table.begin(), table.end(), '\n') == 17);
    CHECK(statent_config_set_sweep(cfg.p, 1, 0, 4, 0, 1, 4, 0) == STATENT_ERR_INVALID_INPUT);
}

TEST_CASE("direct computations") {
    const double s[3] = {0, 0, 1};
    double p[4];
    double q[4];
    REQUIRE(statent_observed_joint(s, 1.0, p) == STATENT_OK);
    REQUIRE(statent_invert_joint(1.0, p, q) == STATENT_OK);
    CHECK_THAT(q[1], WithinAbs((1 - std::sqrt(3.0)) / 4, 1e-12));
    CHECK_THAT(q[2], WithinAbs((1 - std::sqrt(3.0)) / 4, 1e-12));
    const double bad[3] = {1, 1, 0};
    CHECK(statent_observed_joint(bad, 1.0, p) == STATENT_ERR_INVALID_INPUT);
    CHECK(statent_invert_joint(0.0, p, q) == STATENT_ERR_INVALID_INPUT);
    CHECK(statent_observed_joint(nullptr, 1.0, p) == STATENT_ERR_INVALID_INPUT);
}
