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

#include "statent/report.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>

#include "json.hpp"
#include "statent/error.hpp"
#include "statent/version.hpp"

namespace statent {

using nlohmann::json;

namespace {

// Non-finite doubles become null (JSON has no NaN) and come back as NaN.
json number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

double read_number(const json &j) {
    return j.is_null() ? std::numeric_limits<double>::quiet_NaN() : j.get<double>();
}

template <std::size_t N> json array_of(const std::array<double, N> &a) {
    json j = json::array();
    for (double v : a) {
        j.push_back(number(v));
    }
    return j;
}

template <std::size_t N> std::array<double, N> read_array(const json &j) {
    if (!j.is_array() || j.size() != N) {
        throw InvalidInput("expected an array of " + std::to_string(N) + " numbers");
    }
    std::array<double, N> a{};
    for (std::size_t i = 0; i < N; ++i) {
        a[i] = read_number(j[i]);
    }
    return a;
}

json vec_json(const Eigen::Ref<const Eigen::VectorXd> &v) {
    json j = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        j.push_back(number(v(i)));
    }
    return j;
}

Eigen::VectorXd read_vec(const json &j) {
    if (!j.is_array()) {
        throw InvalidInput("expected a numeric array");
    }
    Eigen::VectorXd v(static_cast<Eigen::Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i) {
        v(static_cast<Eigen::Index>(i)) = read_number(j[i]);
    }
    return v;
}

json mat_json(const Eigen::Ref<const Eigen::MatrixXd> &m) {
    json j = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        j.push_back(vec_json(m.row(r).transpose()));
    }
    return j;
}

Eigen::MatrixXd read_mat(const json &j) {
    if (!j.is_array() || j.empty()) {
        throw InvalidInput("expected a nonempty matrix");
    }
    const auto rows = static_cast<Eigen::Index>(j.size());
    const auto cols = static_cast<Eigen::Index>(j[0].size());
    Eigen::MatrixXd m(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r) {
        const Eigen::VectorXd row = read_vec(j[static_cast<std::size_t>(r)]);
        if (row.size() != cols) {
            throw InvalidInput("ragged matrix");
        }
        m.row(r) = row.transpose();
    }
    return m;
}

Vec3 read_vec3(const json &j) {
    const auto a = read_array<3>(j);
    return Vec3(a[0], a[1], a[2]);
}

json optional_number(const std::optional<double> &v) { return v ? number(*v) : json(nullptr); }

std::optional<double> read_optional_number(const json &j) {
    if (j.is_null()) {
        return std::nullopt;
    }
    return j.get<double>();
}

json complex_vec_json(const Eigen::VectorXcd &v) {
    return {{"re", vec_json(v.real())}, {"im", vec_json(v.imag())}};
}

Eigen::VectorXcd read_complex_vec(const json &j) {
    const Eigen::VectorXd re = read_vec(j.at("re"));
    const Eigen::VectorXd im = read_vec(j.at("im"));
    if (re.size() != im.size()) {
        throw InvalidInput("real and imaginary parts differ in length");
    }
    Eigen::VectorXcd v(re.size());
    v.real() = re;
    v.imag() = im;
    return v;
}

json state_spec_json(const StateSpec &spec) {
    if (const auto *b = std::get_if<BlochInput>(&spec)) {
        return {{"kind", "bloch"}, {"s", vec_json(b->s)}};
    }
    if (const auto *d = std::get_if<DensityInput>(&spec)) {
        return {{"kind", "density"},
                {"re", mat_json(d->rho.real())},
                {"im", mat_json(d->rho.imag())},
                {"subspace", {d->first, d->second}}};
    }
    if (const auto *p = std::get_if<PureInput>(&spec)) {
        return {{"kind", "pure"},
                {"amplitudes", complex_vec_json(p->amplitudes)},
                {"perp", p->perp ? complex_vec_json(*p->perp) : json(nullptr)}};
    }
    return {{"kind", "none"}};
}

StateSpec read_state_spec(const json &j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "bloch") {
        return BlochInput{read_vec3(j.at("s"))};
    }
    if (kind == "density") {
        const Eigen::MatrixXd re = read_mat(j.at("re"));
        const Eigen::MatrixXd im = read_mat(j.at("im"));
        if (re.rows() != im.rows() || re.cols() != im.cols()) {
            throw InvalidInput("density matrix parts differ in shape");
        }
        DensityInput d;
        d.rho = Eigen::MatrixXcd(re.rows(), re.cols());
        d.rho.real() = re;
        d.rho.imag() = im;
        const auto sub = j.at("subspace");
        d.first = sub.at(0).get<std::size_t>();
        d.second = sub.at(1).get<std::size_t>();
        return d;
    }
    if (kind == "pure") {
        PureInput p;
        p.amplitudes = read_complex_vec(j.at("amplitudes"));
        if (!j.at("perp").is_null()) {
            p.perp = read_complex_vec(j.at("perp"));
        }
        return p;
    }
    if (kind == "none") {
        return std::monostate{};
    }
    throw InvalidInput("unknown state kind '" + kind + "'");
}

json axis_json(const SweepAxis &a) { return {{"lo", a.lo}, {"hi", a.hi}, {"steps", a.steps}}; }

SweepAxis read_axis(const json &j) {
    return {j.at("lo").get<double>(), j.at("hi").get<double>(), j.at("steps").get<unsigned>()};
}

json config_json(const RunConfig &c) {
    return {
        {"state", state_spec_json(c.state)},
        {"eta", optional_number(c.eta)},
        {"grid", {{"rings", c.grid.rings}, {"angles", c.grid.angles}}},
        {"shots", c.shots ? json(*c.shots) : json(nullptr)},
        {"seed", c.seed ? json(*c.seed) : json(nullptr)},
        {"sigma", c.sigma},
        {"sweep",
         {{"s_norm", axis_json(c.sweep.s_norm)},
          {"eta", axis_json(c.sweep.eta)},
          {"with_lp", c.sweep.with_lp}}},
    };
}

RunConfig read_config(const json &j) {
    RunConfig c;
    c.state = read_state_spec(j.at("state"));
    c.eta = read_optional_number(j.at("eta"));
    c.grid.rings = j.at("grid").at("rings").get<unsigned>();
    c.grid.angles = j.at("grid").at("angles").get<unsigned>();
    if (!j.at("shots").is_null()) {
        c.shots = j.at("shots").get<std::uint64_t>();
    }
    if (!j.at("seed").is_null()) {
        c.seed = j.at("seed").get<std::uint64_t>();
    }
    c.sigma = j.at("sigma").get<double>();
    c.sweep.s_norm = read_axis(j.at("sweep").at("s_norm"));
    c.sweep.eta = read_axis(j.at("sweep").at("eta"));
    c.sweep.with_lp = j.at("sweep").at("with_lp").get<bool>();
    return c;
}

json tolerances_json() {
    return {
        {"state", kStateTolerance},
        {"orthogonality", kOrthogonalityTolerance},
        {"probability_clamp", kProbabilityClamp},
        {"normalization", kNormalizationTolerance},
        {"negativity", kNegativityTolerance},
        {"lp_feasibility", kLpFeasibilityTolerance},
        {"grid_correlation_warning", kGridCorrelationWarning},
        {"default_eta_fraction", kDefaultEtaFraction},
    };
}

WitnessStatus status_from_string(std::string_view s) {
    for (auto st : {WitnessStatus::Nonclassical, WitnessStatus::TrivialException,
                    WitnessStatus::EtaNotBelowThreshold, WitnessStatus::BelowNumericalResolution}) {
        if (to_string(st) == s) {
            return st;
        }
    }
    throw InvalidInput("unknown witness status '" + std::string(s) + "'");
}

SeparabilityRegime regime_from_string(std::string_view s) {
    for (auto r : {SeparabilityRegime::Separable, SeparabilityRegime::NonseparableUnitBound,
                   SeparabilityRegime::NonseparableBeyondSufficientCondition,
                   SeparabilityRegime::NonseparableOther}) {
        if (to_string(r) == s) {
            return r;
        }
    }
    throw InvalidInput("unknown separability regime '" + std::string(s) + "'");
}

json witness_json(const WitnessReport &w) {
    return {
        {"input_bloch", vec_json(w.input.vec())},
        {"rotation", mat_json(w.rotation.matrix())},
        {"canonical_bloch", vec_json(w.canonical.vec())},
        {"eta", optional_number(w.eta)},
        {"threshold_ratio", number(w.threshold_ratio)},
        {"observed", array_of(w.observed.entries())},
        {"quasi", array_of(w.quasi.entries())},
        {"min_entry", number(w.min_entry)},
        {"nonclassical", w.nonclassical},
        {"status", std::string(to_string(w.status))},
    };
}

WitnessReport read_witness(const json &j) {
    return WitnessReport{
        BlochVector::make(read_vec3(j.at("input_bloch"))),
        Rotation3::make(read_mat(j.at("rotation"))),
        BlochVector::make(read_vec3(j.at("canonical_bloch"))),
        read_optional_number(j.at("eta")),
        JointDistribution::make(read_array<4>(j.at("observed"))),
        QuasiDistribution::make(read_array<4>(j.at("quasi"))),
        read_number(j.at("min_entry")),
        j.at("nonclassical").get<bool>(),
        read_number(j.at("threshold_ratio")),
        status_from_string(j.at("status").get<std::string>()),
    };
}

json separability_json(const SeparabilityVerdict &v) {
    json model = nullptr;
    if (v.witness) {
        model = json::array();
        for (const auto &c : v.witness->components()) {
            model.push_back({{"weight", number(c.weight)}, {"lambda", vec_json(c.lambda)}});
        }
    }
    return {
        {"feasible", v.feasible},
        {"regime", std::string(to_string(v.regime))},
        {"correlation_target", number(v.correlation_target)},
        {"marginal_targets", vec_json(v.marginal_targets)},
        {"infeasibility_margin", number(v.infeasibility_margin)},
        {"witness_residual", number(v.witness_residual)},
        {"lp_iterations", v.lp_iterations},
        {"witness_model", model},
    };
}

SeparabilityVerdict read_separability(const json &j) {
    SeparabilityVerdict v;
    v.feasible = j.at("feasible").get<bool>();
    v.regime = regime_from_string(j.at("regime").get<std::string>());
    v.correlation_target = read_number(j.at("correlation_target"));
    const Eigen::VectorXd mt = read_vec(j.at("marginal_targets"));
    if (mt.size() != 2) {
        throw InvalidInput("marginal_targets must have two entries");
    }
    v.marginal_targets = mt;
    v.infeasibility_margin = read_number(j.at("infeasibility_margin"));
    v.witness_residual = read_number(j.at("witness_residual"));
    v.lp_iterations = j.at("lp_iterations").get<std::size_t>();
    if (!j.at("witness_model").is_null()) {
        std::vector<HiddenVariableModel::Component> comps;
        for (const auto &c : j.at("witness_model")) {
            comps.push_back({read_number(c.at("weight")), read_vec3(c.at("lambda"))});
        }
        v.witness = HiddenVariableModel::make(std::move(comps));
    }
    return v;
}

json sampling_json(const SamplingBlock &s) {
    json counts = json::array();
    for (auto c : s.record.counts) {
        counts.push_back(c);
    }
    return {
        {"eta", number(s.eta)},
        {"shots", s.record.shots},
        {"seed", s.record.seed},
        {"counts", counts},
        {"estimate", array_of(s.estimate.estimate)},
        {"standard_error", array_of(s.estimate.standard_error)},
        {"covariance", mat_json(s.estimate.covariance)},
        {"min_entry", number(s.significance.min_entry)},
        {"argmin", s.significance.argmin},
        {"min_standard_error", number(s.significance.standard_error)},
        {"z_score", number(s.significance.z_score)},
        {"threshold_sigma", number(s.significance.threshold_sigma)},
        {"certified", s.significance.certified},
        {"degenerate", s.significance.degenerate},
    };
}

SamplingBlock read_sampling(const json &j) {
    SamplingBlock s;
    s.eta = read_number(j.at("eta"));
    s.record.shots = j.at("shots").get<std::uint64_t>();
    s.record.seed = j.at("seed").get<std::uint64_t>();
    const auto &counts = j.at("counts");
    if (!counts.is_array() || counts.size() != 4) {
        throw InvalidInput("counts must have four entries");
    }
    for (std::size_t i = 0; i < 4; ++i) {
        s.record.counts[i] = counts[i].get<std::uint64_t>();
    }
    s.estimate.estimate = read_array<4>(j.at("estimate"));
    s.estimate.standard_error = read_array<4>(j.at("standard_error"));
    const Eigen::MatrixXd cov = read_mat(j.at("covariance"));
    if (cov.rows() != 4 || cov.cols() != 4) {
        throw InvalidInput("covariance must be 4x4");
    }
    s.estimate.covariance = cov;
    s.significance.min_entry = read_number(j.at("min_entry"));
    s.significance.argmin = j.at("argmin").get<std::size_t>();
    s.significance.standard_error = read_number(j.at("min_standard_error"));
    s.significance.z_score = read_number(j.at("z_score"));
    s.significance.threshold_sigma = read_number(j.at("threshold_sigma"));
    s.significance.certified = j.at("certified").get<bool>();
    s.significance.degenerate = j.at("degenerate").get<bool>();
    return s;
}

json parse(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        throw InvalidInput(std::string("malformed JSON: ") + e.what());
    }
}

template <class F> auto with_json_errors(F &&f) {
    try {
        return f();
    } catch (const json::exception &e) {
        throw InvalidInput(std::string("unexpected JSON structure: ") + e.what());
    }
}

std::string outcome_label(std::size_t i) {
    const auto [x, y] = kOutcomes[i];
    return std::string("(") + (x > 0 ? "+1" : "-1") + "," + (y > 0 ? "+1" : "-1") + ")";
}

} // namespace

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string_view to_string(Command c) {
    switch (c) {
    case Command::Witness:
        return "witness";
    case Command::Separability:
        return "separability";
    case Command::Sweep:
        return "sweep";
    case Command::Sample:
        return "sample";
    }
    return "unknown";
}

Command command_from_string(std::string_view name) {
    for (auto c : {Command::Witness, Command::Separability, Command::Sweep, Command::Sample}) {
        if (to_string(c) == name) {
            return c;
        }
    }
    throw InvalidInput("unknown command '" + std::string(name) + "'");
}

std::vector<double> SweepAxis::values() const {
    std::vector<double> v;
    v.reserve(steps);
    for (unsigned k = 1; k <= steps; ++k) {
        v.push_back(lo + (hi - lo) * static_cast<double>(k) / steps);
    }
    return v;
}

void validate(const RunConfig &c, Command command) {
    if (c.eta && !(*c.eta > 0.0 && *c.eta <= 1.0)) {
        throw InvalidInput("--eta must lie in (0, 1]");
    }
    if (!(c.sigma > 0.0) || !std::isfinite(c.sigma)) {
        throw InvalidInput("--sigma must be a positive number");
    }
    if (c.grid.rings > 0 && c.grid.angles == 0) {
        throw InvalidInput("grid needs at least one angle per ring");
    }
    if (command == Command::Sweep) {
        // Values are taken from (lo, hi], so eta stays strictly positive.
        const auto check_axis = [](const SweepAxis &a, const char *name) {
            if (a.steps == 0 || !(a.lo >= 0.0) || !(a.hi <= 1.0) || !(a.lo < a.hi)) {
                throw InvalidInput(std::string(name) + " range must satisfy 0 <= lo < hi <= 1 with steps >= 1");
            }
        };
        check_axis(c.sweep.s_norm, "|s| sweep");
        check_axis(c.sweep.eta, "eta sweep");
        return;
    }
    if (std::holds_alternative<std::monostate>(c.state)) {
        throw InvalidInput("exactly one state specification (--bloch, --density, --pure) is required");
    }
    if (command == Command::Sample) {
        if (!c.shots || *c.shots == 0) {
            throw InvalidInput("sample requires --shots >= 1");
        }
        if (!c.seed) {
            throw InvalidInput("sample requires --seed");
        }
    }
}

std::string config_to_json(const RunConfig &config, int indent) {
    return config_json(config).dump(indent);
}

RunConfig config_from_json(std::string_view text) {
    const json j = parse(text);
    return with_json_errors([&] { return read_config(j); });
}

std::string report_to_json(const Report &r, int indent) {
    json outcomes = json::array();
    for (const auto &o : kOutcomes) {
        outcomes.push_back({o.x, o.y});
    }
    json j = {
        {"tool", "statent"},
        {"version", kVersionString},
        {"command", std::string(to_string(r.command))},
        {"outcome_order", outcomes},
        {"config", config_json(r.config)},
        {"tolerances", tolerances_json()},
        {"state",
         {{"kind", r.state.kind},
          {"dimension", r.state.dimension},
          {"bloch", vec_json(r.state.bloch.vec())},
          {"subspace_weight", optional_number(r.state.subspace_weight)}}},
        {"witness", r.witness ? witness_json(*r.witness) : json(nullptr)},
        {"separability", r.separability ? separability_json(*r.separability) : json(nullptr)},
        {"grid_max_correlation", optional_number(r.grid_max_correlation)},
        {"sampling", r.sampling ? sampling_json(*r.sampling) : json(nullptr)},
        {"warnings", r.warnings},
    };
    return j.dump(indent);
}

Report report_from_json(std::string_view text) {
    const json j = parse(text);
    return with_json_errors([&] {
        Report r;
        r.command = command_from_string(j.at("command").get<std::string>());
        r.config = read_config(j.at("config"));
        const auto &st = j.at("state");
        r.state.kind = st.at("kind").get<std::string>();
        r.state.dimension = st.at("dimension").get<std::size_t>();
        r.state.bloch = BlochVector::make(read_vec3(st.at("bloch")));
        r.state.subspace_weight = read_optional_number(st.at("subspace_weight"));
        if (!j.at("witness").is_null()) {
            r.witness = read_witness(j.at("witness"));
        }
        if (!j.at("separability").is_null()) {
            r.separability = read_separability(j.at("separability"));
        }
        r.grid_max_correlation = read_optional_number(j.at("grid_max_correlation"));
        if (!j.at("sampling").is_null()) {
            r.sampling = read_sampling(j.at("sampling"));
        }
        r.warnings = j.at("warnings").get<std::vector<std::string>>();
        return r;
    });
}

std::string report_to_text(const Report &r) {
    std::ostringstream out;
    const auto vec3 = [](const Vec3 &v) {
        return "(" + format_double(v.x()) + ", " + format_double(v.y()) + ", " + format_double(v.z()) + ")";
    };
    out << "statent " << to_string(r.command) << "\n";
    out << "state: " << r.state.kind << " (d = " << r.state.dimension << "), bloch " << vec3(r.state.bloch.vec())
        << ", |s| = " << format_double(r.state.bloch.norm()) << "\n";
    if (r.state.subspace_weight) {
        out << "subspace weight: " << format_double(*r.state.subspace_weight) << "\n";
    }
    if (r.witness) {
        const auto &w = *r.witness;
        out << "canonical bloch: " << vec3(w.canonical.vec()) << "\n";
        out << "eta: " << (w.eta ? format_double(*w.eta) : std::string("none")) << ", threshold ratio sqrt(3)|s|/eta = "
            << format_double(w.threshold_ratio) << "\n";
        out << "quasi-distribution:\n";
        for (std::size_t i = 0; i < 4; ++i) {
            out << "  p" << outcome_label(i) << " = " << format_double(w.quasi[i])
                << "   (observed " << format_double(w.observed[i]) << ")\n";
        }
        out << "min entry: " << format_double(w.min_entry) << "\n";
        out << "nonclassical: " << (w.nonclassical ? "yes" : "no") << " [" << to_string(w.status) << "]\n";
    }
    if (r.separability) {
        const auto &v = *r.separability;
        out << "separable model: " << (v.feasible ? "exists" : "none") << " [" << to_string(v.regime) << "]\n";
        out << "  correlation target: " << format_double(v.correlation_target)
            << ", phase-one margin: " << format_double(v.infeasibility_margin) << "\n";
        if (v.witness) {
            out << "  witness: " << v.witness->components().size() << " points, residual "
                << format_double(v.witness_residual) << "\n";
        }
    }
    if (r.grid_max_correlation) {
        out << "grid max correlation: " << format_double(*r.grid_max_correlation) << "\n";
    }
    if (r.sampling) {
        const auto &s = *r.sampling;
        out << "sampling: " << s.record.shots << " shots, seed " << s.record.seed << ", eta "
            << format_double(s.eta) << "\n";
        out << "  counts:";
        for (auto c : s.record.counts) {
            out << " " << c;
        }
        out << "\n";
        out << "  min estimate: " << format_double(s.significance.min_entry) << " +/- "
            << format_double(s.significance.standard_error) << " at " << outcome_label(s.significance.argmin)
            << "\n";
        out << "  z = " << format_double(s.significance.z_score) << ", certified at "
            << format_double(s.significance.threshold_sigma) << " sigma: "
            << (s.significance.certified ? "yes" : "no") << (s.significance.degenerate ? " (degenerate counts)" : "")
            << "\n";
    }
    for (const auto &w : r.warnings) {
        out << "warning: " << w << "\n";
    }
    return out.str();
}

} // namespace statent
