#include "chiralq_app/config.hpp"

#include "chiralq/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <initializer_list>
#include <sstream>

namespace chiralq::app {
namespace {

using nlohmann::json;

void require_object(const json& j, const std::string& path) {
    if (!j.is_object()) {
        throw ConfigError(path + " must be an object");
    }
}

void check_keys(const json& obj, std::initializer_list<const char*> allowed, const std::string& path) {
    require_object(obj, path);
    for (const auto& item : obj.items()) {
        if (std::none_of(allowed.begin(), allowed.end(), [&](const char* k) { return item.key() == k; })) {
            throw ConfigError("unknown key '" + path + "." + item.key() + "'");
        }
    }
}

double number(const json& j, const std::string& path) {
    if (!j.is_number()) {
        throw ConfigError(path + " must be a number");
    }
    return j.get<double>();
}

double number_or(const json& obj, const char* key, double fallback, const std::string& path) {
    return obj.contains(key) ? number(obj.at(key), path + "." + key) : fallback;
}

std::vector<double> numbers(const json& j, std::size_t count, const std::string& path) {
    if (!j.is_array() || j.size() != count) {
        throw ConfigError(path + " must be an array of " + std::to_string(count) + " numbers");
    }
    std::vector<double> out;
    for (std::size_t i = 0; i < count; ++i) {
        out.push_back(number(j[i], path + "[" + std::to_string(i) + "]"));
    }
    return out;
}

Vec3 vec3(const json& j, const std::string& path) {
    const auto v = numbers(j, 3, path);
    return {v[0], v[1], v[2]};
}

Vec3 vec3_or(const json& obj, const char* key, const Vec3& fallback, const std::string& path) {
    return obj.contains(key) ? vec3(obj.at(key), path + "." + key) : fallback;
}

MediumParams parse_medium(const json& j) {
    check_keys(j, {"epsilon", "mu", "beta"}, "medium");
    for (const char* k : {"epsilon", "mu", "beta"}) {
        if (!j.contains(k)) {
            throw ConfigError(std::string("medium.") + k + " is required");
        }
    }
    try {
        return MediumParams(number(j.at("epsilon"), "medium.epsilon"), number(j.at("mu"), "medium.mu"),
                            number(j.at("beta"), "medium.beta"));
    } catch (const DomainError& e) {
        throw ConfigError(std::string("medium: ") + e.what());
    }
}

SpacetimeGrid parse_grid(const json& j) {
    check_keys(j, {"dt", "dx", "counts", "origin"}, "grid");
    for (const char* k : {"dt", "dx", "counts", "origin"}) {
        if (!j.contains(k)) {
            throw ConfigError(std::string("grid.") + k + " is required");
        }
    }
    SpacetimeGrid g;
    g.dt = number(j.at("dt"), "grid.dt");
    const json& dx = j.at("dx");
    g.dx = dx.is_number() ? Vec3{dx.get<double>(), dx.get<double>(), dx.get<double>()} : vec3(dx, "grid.dx");
    const auto counts = numbers(j.at("counts"), 4, "grid.counts");
    for (std::size_t a = 0; a < 4; ++a) {
        if (counts[a] < 1.0 || counts[a] != std::floor(counts[a]) || counts[a] > 1e6) {
            throw ConfigError("grid.counts must hold positive integers");
        }
        g.n[a] = static_cast<std::size_t>(counts[a]);
    }
    const auto origin = numbers(j.at("origin"), 4, "grid.origin");
    g.t0 = origin[0];
    g.x0 = {origin[1], origin[2], origin[3]};
    try {
        g.validate();
    } catch (const DimensionError& e) {
        throw ConfigError(std::string("grid: ") + e.what());
    }
    return g;
}

SourceConfig parse_source(const json& j) {
    require_object(j, "source");
    if (!j.contains("preset") || !j.at("preset").is_string()) {
        throw ConfigError("source.preset must name a preset");
    }
    SourceConfig s;
    s.preset = j.at("preset").get<std::string>();
    if (s.preset == "gaussian_pulse") {
        check_keys(j, {"preset", "amplitude", "sigma_x", "sigma_t", "t0", "center", "polarization"}, "source");
        auto& p = s.pulse;
        p.amplitude = number_or(j, "amplitude", p.amplitude, "source");
        p.sigma_x = number_or(j, "sigma_x", p.sigma_x, "source");
        p.sigma_t = number_or(j, "sigma_t", p.sigma_t, "source");
        p.t0 = number_or(j, "t0", p.t0, "source");
        p.center = vec3_or(j, "center", p.center, "source");
        p.polarization = vec3_or(j, "polarization", p.polarization, "source");
        if (!(p.sigma_x > 0.0) || !(p.sigma_t > 0.0)) {
            throw ConfigError("source: widths must be positive");
        }
    } else if (s.preset == "static_charge") {
        check_keys(j, {"preset", "charge", "sigma", "center"}, "source");
        auto& c = s.charge;
        c.charge = number_or(j, "charge", c.charge, "source");
        c.sigma = number_or(j, "sigma", c.sigma, "source");
        c.center = vec3_or(j, "center", c.center, "source");
        if (!(c.sigma > 0.0)) {
            throw ConfigError("source: sigma must be positive");
        }
    } else {
        throw ConfigError("unknown source preset '" + s.preset + "'");
    }
    return s;
}

void parse_solver(const json& j, RunConfig& cfg) {
    check_keys(j, {"box", "r0", "truncation_tolerance"}, "solver");
    if (j.contains("box")) {
        const json& b = j.at("box");
        check_keys(b, {"t", "lo", "hi"}, "solver.box");
        for (const char* k : {"t", "lo", "hi"}) {
            if (!b.contains(k)) {
                throw ConfigError(std::string("solver.box.") + k + " is required");
            }
        }
        const auto t = numbers(b.at("t"), 2, "solver.box.t");
        cfg.box = {t[0], t[1], vec3(b.at("lo"), "solver.box.lo"), vec3(b.at("hi"), "solver.box.hi")};
        cfg.has_box = true;
    }
    cfg.r0 = number_or(j, "r0", cfg.r0, "solver");
    cfg.truncation_tolerance = number_or(j, "truncation_tolerance", cfg.truncation_tolerance, "solver");
    if (!(cfg.r0 >= 0.0) || !(cfg.truncation_tolerance >= 0.0)) {
        throw ConfigError("solver: r0 and truncation_tolerance must be nonnegative");
    }
}

void parse_contour(const json& j, RunConfig& cfg) {
    check_keys(j, {"y", "omega_max", "nodes_per_panel", "levels"}, "contour");
    cfg.contour.y = number_or(j, "y", cfg.contour.y, "contour");
    cfg.contour.omega_max = number_or(j, "omega_max", cfg.contour.omega_max, "contour");
    cfg.contour.nodes_per_panel =
        static_cast<int>(number_or(j, "nodes_per_panel", cfg.contour.nodes_per_panel, "contour"));
    cfg.extrapolation_levels = static_cast<int>(number_or(j, "levels", cfg.extrapolation_levels, "contour"));
    try {
        cfg.contour.validate();
    } catch (const DomainError& e) {
        throw ConfigError(std::string("contour: ") + e.what());
    }
    if (cfg.extrapolation_levels < 2) {
        throw ConfigError("contour.levels must be at least 2");
    }
}

void parse_tolerances(const json& j, Tolerances& tol) {
    check_keys(j, {"fourier_relative", "kernel_residual", "maxwell_residual"}, "tolerances");
    tol.fourier_relative = number_or(j, "fourier_relative", tol.fourier_relative, "tolerances");
    if (j.contains("kernel_residual")) {
        tol.kernel_residual = number(j.at("kernel_residual"), "tolerances.kernel_residual");
    }
    if (j.contains("maxwell_residual")) {
        tol.maxwell_residual = number(j.at("maxwell_residual"), "tolerances.maxwell_residual");
    }
}

} // namespace

RunKind parse_run_kind(const std::string& name) {
    for (RunKind k : {RunKind::Fundamental, RunKind::FourierCheck, RunKind::KernelCheck, RunKind::Solve, RunKind::Verify}) {
        if (name == run_kind_name(k)) {
            return k;
        }
    }
    throw ConfigError("unknown run kind '" + name + "'");
}

const char* run_kind_name(RunKind kind) {
    switch (kind) {
    case RunKind::Fundamental: return "fundamental";
    case RunKind::FourierCheck: return "fourier-check";
    case RunKind::KernelCheck: return "kernel-check";
    case RunKind::Solve: return "solve";
    case RunKind::Verify: return "verify";
    }
    return "?";
}

AnalyticSource SourceConfig::make() const {
    return preset == "gaussian_pulse" ? gaussian_pulse(pulse) : static_charge(charge);
}

const MediumParams& RunConfig::require_medium() const {
    if (!medium) {
        throw ConfigError("this run needs a 'medium' section");
    }
    return *medium;
}

const SpacetimeGrid& RunConfig::require_grid() const {
    if (!grid) {
        throw ConfigError("this run needs a 'grid' section");
    }
    return *grid;
}

RunConfig parse_config(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    check_keys(doc, {"medium", "grid", "source", "solver", "contour", "stencil", "tolerances", "suites", "output"},
               "config");
    RunConfig cfg;
    if (doc.contains("medium")) {
        cfg.medium = parse_medium(doc.at("medium"));
    }
    if (doc.contains("grid")) {
        cfg.grid = parse_grid(doc.at("grid"));
    }
    if (doc.contains("source")) {
        cfg.source = parse_source(doc.at("source"));
    }
    if (doc.contains("solver")) {
        parse_solver(doc.at("solver"), cfg);
    }
    if (doc.contains("contour")) {
        parse_contour(doc.at("contour"), cfg);
    }
    if (doc.contains("stencil")) {
        const json& s = doc.at("stencil");
        check_keys(s, {"order"}, "stencil");
        cfg.stencil_order = static_cast<int>(number_or(s, "order", cfg.stencil_order, "stencil"));
        if (cfg.stencil_order != 2 && cfg.stencil_order != 4) {
            throw ConfigError("stencil.order must be 2 or 4");
        }
    }
    if (doc.contains("tolerances")) {
        parse_tolerances(doc.at("tolerances"), cfg.tolerances);
    }
    if (doc.contains("suites")) {
        const json& s = doc.at("suites");
        if (!s.is_array()) {
            throw ConfigError("suites must be an array of suite ids");
        }
        for (const auto& id : s) {
            if (!id.is_string()) {
                throw ConfigError("suites must be an array of suite ids");
            }
            cfg.suites.push_back(id.get<std::string>());
        }
    }
    if (doc.contains("output")) {
        if (!doc.at("output").is_string()) {
            throw ConfigError("output must be a path string");
        }
        cfg.output = doc.at("output").get<std::string>();
    }
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot read config file '" + path + "'");
    }
    std::ostringstream text;
    text << in.rdbuf();
    return parse_config(text.str());
}

unsigned resolve_threads(unsigned cli_value) {
    const char* env = std::getenv("CHIRALQ_THREADS");
    if (env == nullptr || *env == '\0') {
        return cli_value;
    }
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 1 || v > 4096) {
        throw ConfigError(std::string("CHIRALQ_THREADS must be a positive integer, got '") + env + "'");
    }
    return static_cast<unsigned>(v);
}

} // namespace chiralq::app
