#include "chiralq/solver.hpp"

#include "chiralq/bessel.hpp"
#include "chiralq/errors.hpp"
#include "chiralq/fundamental.hpp"
#include "chiralq/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

namespace chiralq {
namespace {

constexpr cplx I{0.0, 1.0};
constexpr double kAlignTolerance = 1e-9;

// Nearest integer to v; DimensionError if v is not within tolerance of one.
std::ptrdiff_t aligned_offset(double v, const char* what) {
    const double r = std::round(v);
    if (std::abs(v - r) > kAlignTolerance) {
        throw DimensionError(std::string("convolution plan: output ") + what + " not aligned with the cells");
    }
    return static_cast<std::ptrdiff_t>(r);
}

bool same_step(double a, double b) { return std::abs(a - b) <= 1e-12 * std::max(std::abs(a), std::abs(b)); }

// Time samples t_k = (k + 1/2) dt of the kernel at a fixed spatial offset.
struct KernelTimeTable {
    std::vector<double> sqrt_t;
    std::vector<cplx> prefactor; // e^{i t / (beta s)} / (beta s)
    std::vector<double> z_scale; // z = z_scale * sqrt(r)

    KernelTimeTable(std::size_t count, double dt, const MediumParams& p) {
        const double beta = p.beta();
        const double s = p.sqrt_eps_mu();
        const double quarter = std::sqrt(s);
        for (std::size_t k = 0; k < count; ++k) {
            const double t = (static_cast<double>(k) + 0.5) * dt;
            sqrt_t.push_back(std::sqrt(t));
            prefactor.push_back(std::exp(I * (t / (beta * s))) / (beta * s));
            z_scale.push_back(2.0 * std::sqrt(t) / (std::abs(beta) * quarter));
        }
    }
};

// Writes f(t_k, y) for k in [0, out.size()) using the spatial factors of
// fundamental_f computed once.
void kernel_series(const Vec3& y, double r, const MediumParams& p, const KernelTimeTable& table,
                   std::vector<Biquaternion>& out) {
    const double beta = p.beta();
    const double quarter = std::sqrt(p.sqrt_eps_mu());
    const cplx alpha = 1.0 / beta;
    const Biquaternion K = k_alpha(y, alpha);
    const cplx theta = theta_alpha(y, alpha);
    const Biquaternion W = (I * theta / (beta * quarter) / std::sqrt(r)) *
                           Biquaternion(1.0, -I * (y.x1 / r), -I * (y.x2 / r), -I * (y.x3 / r));
    const double sign = std::copysign(1.0, beta);
    const double sqrt_r = std::sqrt(r);
    for (std::size_t k = 0; k < out.size(); ++k) {
        const BesselPair b = bessel_j01(table.z_scale[k] * sqrt_r);
        out[k] = (K * b.j0 + W * (table.sqrt_t[k] * sign * b.j1)) * table.prefactor[k];
    }
}

bool is_boundary(const std::array<std::size_t, 4>& idx, const std::array<std::size_t, 4>& n) {
    for (std::size_t a = 0; a < 4; ++a) {
        if (idx[a] == 0 || idx[a] + 1 == n[a]) {
            return true;
        }
    }
    return false;
}

} // namespace

double ConvolutionPlan::ball_radius() const {
    return r0 > 0.0 ? r0 : 0.5 * std::min({cells.dx.x1, cells.dx.x2, cells.dx.x3});
}

void ConvolutionPlan::validate() const {
    if (!(r0 >= 0.0) || !std::isfinite(r0)) {
        throw DomainError("convolution plan: r0 must be finite and nonnegative");
    }
    if (!(truncation_tolerance >= 0.0)) {
        throw DomainError("convolution plan: truncation tolerance must be nonnegative");
    }
    if (empty()) {
        return;
    }
    cells.validate();
    output.validate();
    if (!same_step(cells.dt, output.dt)) {
        throw DimensionError("convolution plan: output and cell time steps differ");
    }
    for (std::size_t k = 0; k < 3; ++k) {
        if (!same_step(cells.dx[k], output.dx[k])) {
            throw DimensionError("convolution plan: output and cell spatial steps differ");
        }
        aligned_offset((output.x0[k] - cells.x0[k]) / cells.dx[k], "nodes");
    }
    aligned_offset((output.t0 - cells.t0) / cells.dt - 0.5, "times");
}

ConvolutionPlan make_plan_for_output(const SourceBox& box, const SpacetimeGrid& output, unsigned threads) {
    output.validate();
    if (!(box.t_end > box.t_begin)) {
        throw DimensionError("convolution plan: empty time interval");
    }
    ConvolutionPlan plan;
    plan.threads = threads;
    plan.output = output;
    SpacetimeGrid& c = plan.cells;
    c.dt = output.dt;
    c.dx = output.dx;
    for (std::size_t k = 0; k < 3; ++k) {
        const double h = output.dx[k];
        if (!(box.hi[k] > box.lo[k])) {
            throw DimensionError("convolution plan: empty spatial box");
        }
        // First lattice point at or above lo.
        c.x0[k] = output.x0[k] + h * std::ceil((box.lo[k] - output.x0[k]) / h - kAlignTolerance);
        c.n[k + 1] = static_cast<std::size_t>(std::max(0.0, std::floor((box.hi[k] - c.x0[k]) / h + kAlignTolerance) + 1.0));
    }
    // First edge output.t0 + m dt at or above t_begin.
    const double dt = output.dt;
    const double edge0 = output.t0 + dt * std::ceil((box.t_begin - output.t0) / dt - kAlignTolerance);
    c.t0 = edge0 + 0.5 * dt;
    c.n[0] = static_cast<std::size_t>(std::max(0.0, std::floor((box.t_end - edge0) / dt + kAlignTolerance)));
    return plan;
}

ConvolutionPlan make_aligned_plan(const SourceBox& box, double dt, double h, double t_center, const Vec3& x_center,
                                  std::size_t half_width, unsigned threads) {
    if (!(dt > 0.0) || !(h > 0.0) || !std::isfinite(dt) || !std::isfinite(h)) {
        throw DimensionError("make_aligned_plan: steps must be positive");
    }
    SpacetimeGrid o;
    const double w = static_cast<double>(half_width);
    o.dt = dt;
    o.dx = {h, h, h};
    o.t0 = t_center - w * dt;
    o.x0 = {x_center.x1 - w * h, x_center.x2 - w * h, x_center.x3 - w * h};
    o.n.fill(2 * half_width + 1);
    return make_plan_for_output(box, o, threads);
}

SampledField convolve_rhs(const SampledField& q, const MediumParams& p, const ConvolutionPlan& plan) {
    p.require_chiral("convolve_rhs");
    plan.validate();
    SampledField V(plan.output);
    if (plan.empty()) {
        return V;
    }
    const SpacetimeGrid& cg = plan.cells;
    const SpacetimeGrid& og = plan.output;
    if (q.grid.n != cg.n || cg.offset_of(q.grid) != std::array<std::size_t, 4>{0, 0, 0, 0}) {
        throw DimensionError("convolve_rhs: q must be sampled on the plan's cells");
    }

    // Output time it_o takes cell m iff m <= ot + it_o, with kernel time (ot + it_o - m + 1/2) dt.
    const std::ptrdiff_t ot = aligned_offset((og.t0 - cg.t0) / cg.dt - 0.5, "times");
    std::array<std::ptrdiff_t, 3> ox{};
    for (std::size_t k = 0; k < 3; ++k) {
        ox[k] = aligned_offset((og.x0[k] - cg.x0[k]) / cg.dx[k], "nodes");
    }
    const auto nt_c = static_cast<std::ptrdiff_t>(cg.n[0]);
    const auto nt_o = static_cast<std::ptrdiff_t>(og.n[0]);
    const std::ptrdiff_t k_count = ot + nt_o; // k in [0, ot + nt_o - 1]
    if (k_count <= 0) {
        return V;
    }
    const KernelTimeTable table(static_cast<std::size_t>(k_count), cg.dt, p);
    const double r0 = plan.ball_radius();
    const double volume = cg.dt * cg.dx.x1 * cg.dx.x2 * cg.dx.x3;
    const std::size_t space_c = cg.n[1] * cg.n[2] * cg.n[3];
    const std::size_t space_o = og.n[1] * og.n[2] * og.n[3];

    parallel_for(space_o, plan.threads, [&](std::size_t begin, std::size_t end) {
        std::vector<Biquaternion> kernel(static_cast<std::size_t>(k_count));
        std::vector<Biquaternion> acc(static_cast<std::size_t>(nt_o));
        for (std::size_t so = begin; so < end; ++so) {
            const std::size_t ix = so / (og.n[2] * og.n[3]);
            const std::size_t iy = (so / og.n[3]) % og.n[2];
            const std::size_t iz = so % og.n[3];
            std::fill(acc.begin(), acc.end(), Biquaternion{});
            for (std::size_t sc = 0; sc < space_c; ++sc) {
                const std::size_t cx = sc / (cg.n[2] * cg.n[3]);
                const std::size_t cy = (sc / cg.n[3]) % cg.n[2];
                const std::size_t cz = sc % cg.n[3];
                const auto lattice = [](std::ptrdiff_t off, std::size_t i, std::size_t c) {
                    return static_cast<double>(off + static_cast<std::ptrdiff_t>(i) - static_cast<std::ptrdiff_t>(c));
                };
                const Vec3 y{lattice(ox[0], ix, cx) * cg.dx.x1, lattice(ox[1], iy, cy) * cg.dx.x2,
                             lattice(ox[2], iz, cz) * cg.dx.x3};
                const double r = norm(y);
                if (r < r0) {
                    continue;
                }
                kernel_series(y, r, p, table, kernel);
                for (std::ptrdiff_t it = 0; it < nt_o; ++it) {
                    const std::ptrdiff_t m_end = std::min(nt_c, ot + it + 1);
                    Biquaternion& a = acc[static_cast<std::size_t>(it)];
                    for (std::ptrdiff_t m = 0; m < m_end; ++m) {
                        fma_product(a, kernel[static_cast<std::size_t>(ot + it - m)],
                                    q.values[static_cast<std::size_t>(m) * space_c + sc]);
                    }
                }
            }
            for (std::size_t it = 0; it < og.n[0]; ++it) {
                V.values[it * space_o + so] = acc[it] * volume;
            }
        }
    });
    return V;
}

double boundary_ratio(const SampledField& q) {
    double all = 0.0;
    double edge = 0.0;
    for (std::size_t k = 0; k < q.values.size(); ++k) {
        const double v = norm(q.values[k]);
        all = std::max(all, v);
        if (is_boundary(q.grid.unravel(k), q.grid.n)) {
            edge = std::max(edge, v);
        }
    }
    return all > 0.0 ? edge / all : 0.0;
}

ConvolutionResult convolve_solution(const AnalyticSource& src, const MediumParams& p, const ConvolutionPlan& plan) {
    plan.validate();
    ConvolutionResult res;
    if (plan.empty()) {
        res.V = SampledField(plan.output);
        res.em = {VectorField(plan.output), VectorField(plan.output)};
        return res;
    }
    const SampledField q = assemble_rhs(src, plan.cells, p);
    res.boundary_ratio = boundary_ratio(q);
    if (res.boundary_ratio > plan.truncation_tolerance) {
        throw TruncationError("source is not contained in the plan box: boundary ratio " +
                                  format_value(res.boundary_ratio),
                              res.boundary_ratio);
    }
    res.V = convolve_rhs(q, p, plan);
    for (const auto& v : res.V.values) {
        res.max_scalar_part = std::max(res.max_scalar_part, std::abs(v.s));
    }
    res.em = recover_EH(res.V, p, std::numeric_limits<double>::infinity());
    return res;
}

QuadratureErrorReport estimate_quadrature_error(const ConvolutionPlan& plan, const MediumParams& p,
                                                const SampledField& q) {
    plan.validate();
    QuadratureErrorReport rep;
    if (plan.empty()) {
        return rep;
    }
    p.require_chiral("estimate_quadrature_error");
    const SpacetimeGrid& g = plan.cells;
    double q_max = 0.0;
    double grad_max = 0.0;
    for (std::size_t k = 0; k < q.values.size(); ++k) {
        q_max = std::max(q_max, norm(q.values[k]));
        const auto idx = q.grid.unravel(k);
        double g2 = 0.0;
        for (std::size_t a = 1; a < 4; ++a) {
            if (idx[a] + 1 < q.grid.n[a]) {
                const double d = norm(q.values[k + q.grid.stride(a)] - q.values[k]) / q.grid.step(a);
                g2 += d * d;
            }
        }
        grad_max = std::max(grad_max, std::sqrt(g2));
    }
    const double beta = std::abs(p.beta());
    const double s = p.sqrt_eps_mu();
    const double t_last = plan.output.time(plan.output.n[0] - 1);
    const double elapsed = std::max(0.0, t_last - (g.t0 - 0.5 * g.dt));
    const double r0 = plan.ball_radius();
    // Time integral of the even coefficient 1/beta + t/(beta^2 s).
    const double even = elapsed / beta + elapsed * elapsed / (2.0 * beta * beta * s);
    const double ball = q_max * 0.5 * r0 * r0 * even + grad_max * (0.5 * r0 * r0 * elapsed + r0 * r0 * r0 / 3.0 * even);
    rep.singular_ball = 2.0 / (beta * s) * ball;
    rep.truncation = boundary_ratio(q);
    return rep;
}

} // namespace chiralq
