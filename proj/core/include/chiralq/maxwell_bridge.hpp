#pragma once

#include "chiralq/diffops.hpp"
#include "chiralq/grid.hpp"
#include "chiralq/medium.hpp"

#include <functional>

namespace chiralq {

/// Real electric and magnetic fields on a common grid.
struct EMField {
    VectorField E;
    VectorField H;
};

/// Charge and current densities given as callables of (t, x).
///
/// drho_dt and div_j are optional; when both are present the continuity
/// equation is checked analytically and drho_dt feeds the right-hand side
/// directly. Otherwise the time derivative is taken by central differences.
struct AnalyticSource {
    std::function<double(double, const Vec3&)> rho;
    std::function<Vec3(double, const Vec3&)> j;
    std::function<double(double, const Vec3&)> drho_dt;
    std::function<double(double, const Vec3&)> div_j;

    bool has_derivatives() const { return static_cast<bool>(drho_dt) && static_cast<bool>(div_j); }
};

/// Charge and current densities sampled on a grid.
struct SampledSource {
    ScalarField rho;
    VectorField j;
};

SampledSource sample_source(const AnalyticSource& src, const SpacetimeGrid& grid);

/// Continuity check outcome. `relative` is max|dt rho + div j| divided by
/// max(max|dt rho|, max|div j|); it is 0 when both vanish.
struct ContinuityReport {
    double max_abs = 0.0;
    double relative = 0.0;
};

/// Analytic check at every node of `grid`; requires drho_dt and div_j.
ContinuityReport continuity_residual(const AnalyticSource& src, const SpacetimeGrid& grid);
/// Stencil check on the interior of the sampled grid.
ContinuityReport continuity_residual(const SampledSource& src, const StencilSpec& st = {});

inline constexpr double kAnalyticContinuityTolerance = 1e-10;

/// Tolerance applied to sampled sources: 10 * h^order with h the largest step.
double sampled_continuity_tolerance(const SpacetimeGrid& grid, const StencilSpec& st);

/// V = E - i sqrt(mu/eps) H, a purely vectorial field.
SampledField assemble_V(const EMField& em, const MediumParams& p);

/// Inverse of assemble_V: E = Re(vector part), H = -sqrt(eps/mu) Im(vector part).
/// Throws ShapeError if any |scalar part| exceeds `scalar_tolerance`.
EMField recover_EH(const SampledField& V, const MediumParams& p, double scalar_tolerance = 0.0);

/// Right-hand side of M V = q:
///   q = (-beta sqrt(mu/eps) dt rho + i rho / eps ; -sqrt(mu/eps) j).
Biquaternion rhs_value(double rho, double drho_dt, const Vec3& j, const MediumParams& p);

/// Sampled right-hand side with dt rho by central differences; output on the
/// interior grid. Throws ContinuityError above sampled_continuity_tolerance
/// (or `tolerance` if positive).
SampledField assemble_rhs(const SampledSource& src, const MediumParams& p, const StencilSpec& st = {},
                          double tolerance = 0.0);

/// Analytic right-hand side on every node of `grid`. Throws ContinuityError
/// if the analytic relative continuity residual exceeds `tolerance`.
SampledField assemble_rhs(const AnalyticSource& src, const SpacetimeGrid& grid, const MediumParams& p,
                          double tolerance = kAnalyticContinuityTolerance);

/// Residuals of the chiral Maxwell system on the interior grid:
///   r1 = rot H - eps (dt E + beta dt rot E) - j
///   r2 = rot E + mu (dt H + beta dt rot H)
///   r3 = div E - rho / eps
///   r4 = div H
struct MaxwellResidual {
    VectorField r1;
    VectorField r2;
    ScalarField r3;
    ScalarField r4;
    FieldNorms n1, n2, n3, n4;

    double max_norm() const;
};

MaxwellResidual maxwell_residual(const EMField& em, const SampledSource& src, const MediumParams& p,
                                 const StencilSpec& st = {});

/// M V - q with its scalar and vector parts split out. All fields share the
/// interior grid of V. The source is sampled on V's grid; continuity is not
/// enforced here since the residual is itself the diagnostic.
struct QuaternionicResidual {
    SampledField total;
    SampledField scalar; ///< scalar part only
    SampledField vector; ///< vector part only
};

QuaternionicResidual quaternionic_residual(const SampledField& V, const SampledSource& src,
                                           const MediumParams& p, const StencilSpec& st = {});

/// Consequences of the vector equation plus continuity: dt div H and
/// dt div E - dt rho / eps, both vanishing for exact solutions.
struct DivergenceConstraints {
    ScalarField dt_div_H;
    ScalarField dt_div_E_minus_charge;
};

DivergenceConstraints divergence_constraints(const EMField& em, const SampledSource& src, const MediumParams& p,
                                             const StencilSpec& st = {});

} // namespace chiralq
