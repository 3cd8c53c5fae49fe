#include "chiralq_app/runner.hpp"

#include "chiralq/errors.hpp"
#include "chiralq/fundamental.hpp"
#include "chiralq/maxwell_bridge.hpp"
#include "chiralq/parallel.hpp"
#include "chiralq/verify.hpp"
#include "chiralq_app/csv.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <ostream>

namespace chiralq::app {
namespace {

void require_off_origin(const SpacetimeGrid& g) {
    for (std::size_t ix = 0; ix < g.n[1]; ++ix) {
        for (std::size_t iy = 0; iy < g.n[2]; ++iy) {
            for (std::size_t iz = 0; iz < g.n[3]; ++iz) {
                if (g.point(ix, iy, iz) == Vec3{}) {
                    throw ConfigError("grid contains the spatial origin, where the kernel is singular");
                }
            }
        }
    }
}

SampledField sample_kernel(const SpacetimeGrid& g, const MediumParams& p, unsigned threads) {
    require_off_origin(g);
    SampledField f(g);
    parallel_for(g.size(), threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t k = begin; k < end; ++k) {
            const auto i = g.unravel(k);
            f.values[k] = fundamental_f(g.time(i[0]), g.point(i[1], i[2], i[3]), p);
        }
    });
    return f;
}

int run_fundamental(const RunConfig& cfg, unsigned threads, std::ostream& csv, std::ostream& log) {
    const SampledField f = sample_kernel(cfg.require_grid(), cfg.require_medium(), threads);
    emit_csv(f, csv);
    log << "fundamental: " << f.values.size() << " nodes\n";
    return kExitOk;
}

int run_fourier_check(const RunConfig& cfg, unsigned threads, std::ostream& csv, std::ostream& log) {
    const SpacetimeGrid& g = cfg.require_grid();
    const MediumParams& p = cfg.require_medium();
    require_off_origin(g);
    SampledField limit(g);
    std::vector<double> err_y(g.size(), 0.0);
    std::vector<double> err_0(g.size(), 0.0);
    parallel_for(g.size(), threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t k = begin; k < end; ++k) {
            const auto i = g.unravel(k);
            const double t = g.time(i[0]);
            const Vec3 x = g.point(i[1], i[2], i[3]);
            const Biquaternion at_y = inverse_fourier_f(t, x, p, cfg.contour);
            const Biquaternion ref_y = fundamental_f_factored(t, x, p, cfg.contour.y);
            limit.values[k] = inverse_fourier_f_extrapolated(t, x, p, cfg.contour, cfg.extrapolation_levels);
            const Biquaternion ref = fundamental_f(t, x, p);
            // Relative errors; for t < 0 both references vanish and the absolute error is used.
            err_y[k] = norm(at_y - ref_y) / std::max(norm(ref_y), t < 0.0 ? 1.0 : 0.0);
            err_0[k] = norm(limit.values[k] - ref) / std::max(norm(ref), t < 0.0 ? 1.0 : 0.0);
        }
    });
    emit_csv(limit, csv);
    const double worst_y = *std::max_element(err_y.begin(), err_y.end());
    const double worst_0 = *std::max_element(err_0.begin(), err_0.end());
    const double tol = cfg.tolerances.fourier_relative;
    const bool ok = worst_y <= tol && worst_0 <= tol;
    log << "fourier-check: finite-y error " << format_double(worst_y) << ", extrapolated error "
        << format_double(worst_0) << ", tolerance " << format_double(tol) << (ok ? " PASS" : " FAIL") << '\n';
    return ok ? kExitOk : kExitAssertion;
}

int run_kernel_check(const RunConfig& cfg, unsigned threads, std::ostream& csv, std::ostream& log) {
    const MediumParams& p = cfg.require_medium();
    const SampledField f = sample_kernel(cfg.require_grid(), p, threads);
    const SampledField residual = apply_M(f, p, StencilSpec{cfg.stencil_order, threads});
    emit_csv(residual, csv);
    const FieldNorms n = norms(residual);
    bool ok = true;
    log << "kernel-check: |M f| max " << format_double(n.max) << ", l2 " << format_double(n.l2);
    if (cfg.tolerances.kernel_residual) {
        ok = n.max <= *cfg.tolerances.kernel_residual;
        log << ", tolerance " << format_double(*cfg.tolerances.kernel_residual) << (ok ? " PASS" : " FAIL");
    }
    log << '\n';
    return ok ? kExitOk : kExitAssertion;
}

int run_solve(const RunConfig& cfg, unsigned threads, std::ostream& csv, std::ostream& log) {
    const MediumParams& p = cfg.require_medium();
    const SpacetimeGrid& g = cfg.require_grid();
    if (!cfg.source) {
        throw ConfigError("solve needs a 'source' section");
    }
    if (!cfg.has_box) {
        throw ConfigError("solve needs solver.box");
    }
    const AnalyticSource src = cfg.source->make();
    ConvolutionPlan plan = make_plan_for_output(cfg.box, g, threads);
    plan.r0 = cfg.r0;
    plan.truncation_tolerance = cfg.truncation_tolerance;
    const ConvolutionResult res = convolve_solution(src, p, plan);
    emit_em_csv(res.em, csv);

    const QuadratureErrorReport q = estimate_quadrature_error(plan, p, assemble_rhs(src, plan.cells, p));
    log << "solve: " << g.size() << " output nodes, " << plan.cells.size() << " source cells, max |scalar(V)| "
        << format_double(res.max_scalar_part) << ", singular-ball bound " << format_double(q.singular_ball)
        << ", boundary ratio " << format_double(q.truncation) << '\n';

    const StencilSpec st{cfg.stencil_order, threads};
    const std::size_t need = 2 * st.margin() + 1;
    if (std::any_of(g.n.begin(), g.n.end(), [&](std::size_t n) { return n < need; })) {
        log << "residual: grid too small for the stencil\n";
        return kExitOk;
    }
    const MaxwellResidual r = maxwell_residual(res.em, sample_source(src, g), p, st);
    bool ok = true;
    log << "residual: max " << format_double(r.max_norm()) << " (" << format_double(r.n1.max) << ", "
        << format_double(r.n2.max) << ", " << format_double(r.n3.max) << ", " << format_double(r.n4.max) << ")";
    if (cfg.tolerances.maxwell_residual) {
        ok = r.max_norm() <= *cfg.tolerances.maxwell_residual;
        log << ", tolerance " << format_double(*cfg.tolerances.maxwell_residual) << (ok ? " PASS" : " FAIL");
    }
    log << '\n';
    return ok ? kExitOk : kExitAssertion;
}

int run_verify(const RunConfig& cfg, unsigned threads, std::ostream& csv, std::ostream& log) {
    const auto results = run_verification(VerifyOptions{threads}, cfg.suites);
    emit_verify_csv(results, csv);
    bool ok = true;
    for (const auto& r : results) {
        char line[160];
        std::snprintf(line, sizeof line, "%-3s %-4s %7.2fs  %s", r.id.c_str(), r.passed() ? "PASS" : "FAIL", r.seconds,
                      r.title.c_str());
        log << line << '\n';
        for (const auto& m : r.metrics) {
            log << "      " << m.name << " = " << format_double(m.value) << (m.passed() ? "" : "  <-- out of bounds")
                << '\n';
        }
        if (!r.error.empty()) {
            log << "      error: " << r.error << '\n';
        }
        ok = ok && r.passed();
    }
    return ok ? kExitOk : kExitAssertion;
}

} // namespace

int run(RunKind kind, const RunConfig& config, unsigned threads, std::ostream& csv, std::ostream& log) {
    switch (kind) {
    case RunKind::Fundamental: return run_fundamental(config, threads, csv, log);
    case RunKind::FourierCheck: return run_fourier_check(config, threads, csv, log);
    case RunKind::KernelCheck: return run_kernel_check(config, threads, csv, log);
    case RunKind::Solve: return run_solve(config, threads, csv, log);
    case RunKind::Verify: return run_verify(config, threads, csv, log);
    }
    return kExitConfig;
}

int run_command(RunKind kind, const std::string& config_path, const std::string& out_path, unsigned threads) {
    try {
        const RunConfig cfg = load_config(config_path);
        const unsigned n = resolve_threads(threads);
        const std::string path = out_path.empty() ? cfg.output : out_path;
        if (path.empty()) {
            return run(kind, cfg, n, std::cout, std::cerr);
        }
        std::ofstream out(path, std::ios::binary);
        if (!out) {
            throw IoError("cannot open '" + path + "' for writing");
        }
        const int status = run(kind, cfg, n, out, std::cout);
        out.flush();
        if (!out) {
            throw IoError("failed writing '" + path + "'");
        }
        return status;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const IoError& e) {
        std::cerr << "I/O error: " << e.what() << '\n';
        return kExitIo;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitAssertion;
    }
}

} // namespace chiralq::app
