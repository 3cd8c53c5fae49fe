#include "chiralq/maxwell_bridge.hpp"

#include "chiralq/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace chiralq {
namespace {

void require_same_grid(const SpacetimeGrid& a, const SpacetimeGrid& b, const char* what) {
    if (a.n != b.n || a.offset_of(b) != std::array<std::size_t, 4>{0, 0, 0, 0}) {
        throw DimensionError(std::string(what) + ": fields live on different grids");
    }
}

ContinuityReport make_report(double max_abs, double max_dt_rho, double max_div_j) {
    ContinuityReport r;
    r.max_abs = max_abs;
    const double scale = std::max(max_dt_rho, max_div_j);
    r.relative = scale > 0.0 ? max_abs / scale : (max_abs > 0.0 ? max_abs : 0.0);
    return r;
}

double max_step(const SpacetimeGrid& g) { return std::max({g.dt, g.dx.x1, g.dx.x2, g.dx.x3}); }

} // namespace

SampledSource sample_source(const AnalyticSource& src, const SpacetimeGrid& grid) {
    if (!src.rho || !src.j) {
        throw ConfigError("source needs both rho and j");
    }
    return {sample(grid, src.rho), sample(grid, src.j)};
}

ContinuityReport continuity_residual(const AnalyticSource& src, const SpacetimeGrid& grid) {
    if (!src.has_derivatives()) {
        throw ConfigError("analytic continuity check needs drho_dt and div_j");
    }
    double worst = 0.0;
    double max_dt = 0.0;
    double max_div = 0.0;
    for (std::size_t it = 0; it < grid.n[0]; ++it) {
        const double t = grid.time(it);
        for (std::size_t ix = 0; ix < grid.n[1]; ++ix) {
            for (std::size_t iy = 0; iy < grid.n[2]; ++iy) {
                for (std::size_t iz = 0; iz < grid.n[3]; ++iz) {
                    const Vec3 x = grid.point(ix, iy, iz);
                    const double a = src.drho_dt(t, x);
                    const double b = src.div_j(t, x);
                    worst = std::max(worst, std::abs(a + b));
                    max_dt = std::max(max_dt, std::abs(a));
                    max_div = std::max(max_div, std::abs(b));
                }
            }
        }
    }
    return make_report(worst, max_dt, max_div);
}

ContinuityReport continuity_residual(const SampledSource& src, const StencilSpec& st) {
    require_same_grid(src.rho.grid, src.j.grid, "continuity_residual");
    const ScalarField dt_rho = apply_dt(src.rho, st);
    const ScalarField div_j = apply_div(src.j, st);
    double worst = 0.0;
    double max_dt = 0.0;
    double max_div = 0.0;
    for (std::size_t k = 0; k < dt_rho.values.size(); ++k) {
        worst = std::max(worst, std::abs(dt_rho.values[k] + div_j.values[k]));
        max_dt = std::max(max_dt, std::abs(dt_rho.values[k]));
        max_div = std::max(max_div, std::abs(div_j.values[k]));
    }
    return make_report(worst, max_dt, max_div);
}

double sampled_continuity_tolerance(const SpacetimeGrid& grid, const StencilSpec& st) {
    st.validate();
    return 10.0 * std::pow(max_step(grid), st.order);
}

SampledField assemble_V(const EMField& em, const MediumParams& p) {
    require_same_grid(em.E.grid, em.H.grid, "assemble_V");
    const double z = p.impedance();
    SampledField V(em.E.grid);
    for (std::size_t k = 0; k < V.values.size(); ++k) {
        const Vec3& e = em.E.values[k];
        const Vec3& h = em.H.values[k];
        V.values[k] = Biquaternion(0.0, cplx(e.x1, -z * h.x1), cplx(e.x2, -z * h.x2), cplx(e.x3, -z * h.x3));
    }
    return V;
}

EMField recover_EH(const SampledField& V, const MediumParams& p, double scalar_tolerance) {
    const double inv_z = 1.0 / p.impedance();
    EMField em{VectorField(V.grid), VectorField(V.grid)};
    for (std::size_t k = 0; k < V.values.size(); ++k) {
        const Biquaternion& q = V.values[k];
        if (std::abs(q.s) > scalar_tolerance) {
            throw ShapeError("recover_EH: scalar part " + format_value(std::abs(q.s)) + " exceeds tolerance " +
                             format_value(scalar_tolerance));
        }
        const PureVector v = vector_part(q);
        em.E.values[k] = v.real();
        em.H.values[k] = -inv_z * v.imag();
    }
    return em;
}

Biquaternion rhs_value(double rho, double drho_dt, const Vec3& j, const MediumParams& p) {
    const double z = p.impedance();
    return {cplx(-p.beta() * z * drho_dt, rho / p.epsilon()), -z * j.x1, -z * j.x2, -z * j.x3};
}

SampledField assemble_rhs(const SampledSource& src, const MediumParams& p, const StencilSpec& st,
                          double tolerance) {
    require_same_grid(src.rho.grid, src.j.grid, "assemble_rhs");
    const double tol = tolerance > 0.0 ? tolerance : sampled_continuity_tolerance(src.rho.grid, st);
    const ContinuityReport rep = continuity_residual(src, st);
    if (rep.relative > tol) {
        throw ContinuityError("sampled source violates continuity: relative residual " +
                                  format_value(rep.relative) + " > " + format_value(tol),
                              rep.relative);
    }
    const ScalarField dt_rho = apply_dt(src.rho, st);
    const ScalarField rho = crop(src.rho, dt_rho.grid);
    const VectorField j = crop(src.j, dt_rho.grid);
    SampledField q(dt_rho.grid);
    for (std::size_t k = 0; k < q.values.size(); ++k) {
        q.values[k] = rhs_value(rho.values[k], dt_rho.values[k], j.values[k], p);
    }
    return q;
}

SampledField assemble_rhs(const AnalyticSource& src, const SpacetimeGrid& grid, const MediumParams& p,
                          double tolerance) {
    const ContinuityReport rep = continuity_residual(src, grid);
    if (rep.relative > tolerance) {
        throw ContinuityError("source violates continuity: relative residual " + format_value(rep.relative) +
                                  " > " + format_value(tolerance),
                              rep.relative);
    }
    return sample(grid, [&](double t, const Vec3& x) { return rhs_value(src.rho(t, x), src.drho_dt(t, x), src.j(t, x), p); });
}

double MaxwellResidual::max_norm() const { return std::max({n1.max, n2.max, n3.max, n4.max}); }

MaxwellResidual maxwell_residual(const EMField& em, const SampledSource& src, const MediumParams& p,
                                 const StencilSpec& st) {
    require_same_grid(em.E.grid, em.H.grid, "maxwell_residual");
    require_same_grid(em.E.grid, src.rho.grid, "maxwell_residual");
    require_same_grid(em.E.grid, src.j.grid, "maxwell_residual");
    const double eps = p.epsilon();
    const double mu = p.mu();
    const double beta = p.beta();

    const VectorField rotE = apply_rot(em.E, st);
    const VectorField rotH = apply_rot(em.H, st);
    const VectorField dtE = apply_dt(em.E, st);
    const VectorField dtH = apply_dt(em.H, st);
    const VectorField dtrotE = apply_dt_rot(em.E, st);
    const VectorField dtrotH = apply_dt_rot(em.H, st);
    const ScalarField divE = apply_div(em.E, st);
    const ScalarField divH = apply_div(em.H, st);
    const SpacetimeGrid& g = rotE.grid;
    const ScalarField rho = crop(src.rho, g);
    const VectorField j = crop(src.j, g);

    MaxwellResidual r{VectorField(g), VectorField(g), ScalarField(g), ScalarField(g), {}, {}, {}, {}};
    for (std::size_t k = 0; k < g.size(); ++k) {
        r.r1.values[k] = rotH.values[k] - eps * (dtE.values[k] + beta * dtrotE.values[k]) - j.values[k];
        r.r2.values[k] = rotE.values[k] + mu * (dtH.values[k] + beta * dtrotH.values[k]);
        r.r3.values[k] = divE.values[k] - rho.values[k] / eps;
        r.r4.values[k] = divH.values[k];
    }
    r.n1 = norms(r.r1);
    r.n2 = norms(r.r2);
    r.n3 = norms(r.r3);
    r.n4 = norms(r.r4);
    return r;
}

QuaternionicResidual quaternionic_residual(const SampledField& V, const SampledSource& src, const MediumParams& p,
                                           const StencilSpec& st) {
    require_same_grid(V.grid, src.rho.grid, "quaternionic_residual");
    const SampledField MV = apply_M_any(V, p, st);
    const SampledField q = assemble_rhs(src, p, st, std::numeric_limits<double>::infinity());
    QuaternionicResidual r{SampledField(MV.grid), SampledField(MV.grid), SampledField(MV.grid)};
    for (std::size_t k = 0; k < MV.values.size(); ++k) {
        const Biquaternion d = MV.values[k] - q.values[k];
        r.total.values[k] = d;
        r.scalar.values[k] = Biquaternion(d.s);
        r.vector.values[k] = Biquaternion(vector_part(d));
    }
    return r;
}

DivergenceConstraints divergence_constraints(const EMField& em, const SampledSource& src, const MediumParams& p,
                                             const StencilSpec& st) {
    require_same_grid(em.E.grid, em.H.grid, "divergence_constraints");
    require_same_grid(em.E.grid, src.rho.grid, "divergence_constraints");
    DivergenceConstraints c{apply_dt_div(em.H, st), apply_dt_div(em.E, st)};
    const ScalarField dt_rho = apply_dt(src.rho, st);
    for (std::size_t k = 0; k < dt_rho.values.size(); ++k) {
        c.dt_div_E_minus_charge.values[k] -= dt_rho.values[k] / p.epsilon();
    }
    return c;
}

} // namespace chiralq
