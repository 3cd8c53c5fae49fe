#pragma once

#include "chiralq/diffops.hpp"
#include "chiralq/grid.hpp"
#include "chiralq/medium.hpp"
#include "chiralq/oracle.hpp"
#include "chiralq/presets.hpp"
#include "chiralq/solver.hpp"

#include <optional>
#include <string>
#include <vector>

namespace chiralq::app {

enum class RunKind { Fundamental, FourierCheck, KernelCheck, Solve, Verify };

/// Parses "fundamental", "fourier-check", "kernel-check", "solve", "verify".
RunKind parse_run_kind(const std::string& name);
const char* run_kind_name(RunKind kind);

struct SourceConfig {
    std::string preset; ///< "gaussian_pulse" or "static_charge"
    GaussianPulseParams pulse;
    StaticChargeParams charge;

    AnalyticSource make() const;
};

/// Assertion tolerances; an unset tolerance disables its assertion.
struct Tolerances {
    double fourier_relative = 1e-4;
    std::optional<double> kernel_residual;
    std::optional<double> maxwell_residual;
};

/// One JSON document describing one run. Every object rejects unknown keys.
///
///   medium:     {epsilon, mu, beta}
///   grid:       {dt, dx: h | [h1,h2,h3], counts: [nt,nx,ny,nz], origin: [t0,x1,x2,x3]}
///   source:     {preset, ...preset parameters}
///   solver:     {box: {t: [begin,end], lo: [..], hi: [..]}, r0, truncation_tolerance}
///   contour:    {y, omega_max, nodes_per_panel, levels}
///   stencil:    {order}
///   tolerances: {fourier_relative, kernel_residual, maxwell_residual}
///   suites:     ["A1", ...]
///   output:     path
struct RunConfig {
    std::optional<MediumParams> medium;
    std::optional<SpacetimeGrid> grid;
    std::optional<SourceConfig> source;
    SourceBox box;
    bool has_box = false;
    double r0 = 0.0;
    double truncation_tolerance = 1e-10;
    ContourSpec contour;
    int extrapolation_levels = 3;
    int stencil_order = 2;
    Tolerances tolerances;
    std::vector<std::string> suites;
    std::string output;

    const MediumParams& require_medium() const;
    const SpacetimeGrid& require_grid() const;
};

/// Throws ConfigError with the offending key path.
RunConfig parse_config(const std::string& json_text);
/// Reads and parses a file; IoError when it cannot be read.
RunConfig load_config(const std::string& path);

/// Thread count: CHIRALQ_THREADS when set, else `cli_value`. ConfigError for
/// a malformed environment value.
unsigned resolve_threads(unsigned cli_value);

} // namespace chiralq::app
