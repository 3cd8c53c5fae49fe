#pragma once

#include "chiralq/grid.hpp"
#include "chiralq/maxwell_bridge.hpp"
#include "chiralq/medium.hpp"

#include <cstddef>

namespace chiralq {

/// Time interval and spatial box holding the source support.
struct SourceBox {
    double t_begin = 0.0;
    double t_end = 1.0;
    Vec3 lo{-1.0, -1.0, -1.0};
    Vec3 hi{1.0, 1.0, 1.0};
};

/// Midpoint-rule discretisation of V = f * q.
///
/// `cells` holds the source cell centres; every cell has volume
/// dt * dx1 * dx2 * dx3. Output nodes must be lattice-aligned with the cells:
/// same steps, spatial nodes on cell centres and output times on cell edges.
/// Then every kernel argument is a cell-centre offset and the cell holding
/// the output point itself is the only one inside the singular ball.
struct ConvolutionPlan {
    SpacetimeGrid cells;
    SpacetimeGrid output;
    double r0 = 0.0;                      ///< singular-ball radius; 0 selects min(dx) / 2
    double truncation_tolerance = 1e-10;  ///< allowed max|q| on the outermost cells relative to max|q|
    unsigned threads = 1;

    double ball_radius() const;
    bool empty() const { return cells.size() == 0 || output.size() == 0; }
    /// Throws DimensionError when the output lattice is not aligned with the cells.
    void validate() const;
};

/// Plan for a given output lattice: cells with the output steps cover `box`,
/// centred on the output spatial lattice with edges on the output times.
ConvolutionPlan make_plan_for_output(const SourceBox& box, const SpacetimeGrid& output, unsigned threads = 1);

/// Plan whose cells cover `box` with steps (dt, h, h, h), shifted so that
/// (t_center, x_center) is an output node; the output lattice has
/// 2 * half_width + 1 nodes per axis around it.
ConvolutionPlan make_aligned_plan(const SourceBox& box, double dt, double h, double t_center,
                                  const Vec3& x_center, std::size_t half_width, unsigned threads = 1);

/// V on plan.output from a right-hand side q sampled on plan.cells. The kernel
/// is the left factor. Cells with centre time >= t do not enter V(t), so V(t)
/// is bit-identical under any change of q at later times. Sums run in a fixed
/// order, so the result does not depend on the thread count.
SampledField convolve_rhs(const SampledField& q, const MediumParams& p, const ConvolutionPlan& plan);

struct ConvolutionResult {
    SampledField V;
    EMField em;                   ///< recover_EH(V), scalar part ignored
    double max_scalar_part = 0.0; ///< max |scalar(V)|, zero for exact quadrature
    double boundary_ratio = 0.0;  ///< max|q| on the outermost cells over max|q|
};

/// Samples q = assemble_rhs(src) on the cells and convolves. Throws
/// ContinuityError for sources violating continuity and TruncationError when
/// boundary_ratio exceeds plan.truncation_tolerance.
ConvolutionResult convolve_solution(const AnalyticSource& src, const MediumParams& p, const ConvolutionPlan& plan);

/// max|q| on the outermost layer of cells (any axis) over max|q|; 0 for q = 0.
double boundary_ratio(const SampledField& q);

struct QuadratureErrorReport {
    double singular_ball = 0.0; ///< bound on the omitted |x - xi| < r0 contribution
    double truncation = 0.0;    ///< boundary_ratio(q): relative size of q where the box cuts it off
};

/// Error bounds for a plan and its sampled right-hand side.
///
/// Near the origin the kernel is an odd part of size 1/(4 pi r^2) plus an even
/// part of size 1/(4 pi r). Over a ball the odd part only sees the variation
/// of q, so the omitted contribution is bounded by r0^2 / 2 times
/// (even coefficient) sup|q| + sup|grad q|, plus an r0^3 remainder, integrated
/// over the elapsed time. Halving r0 divides the bound by 4 up to that
/// remainder. An empty plan gives zeros.
QuadratureErrorReport estimate_quadrature_error(const ConvolutionPlan& plan, const MediumParams& p,
                                                const SampledField& q);

} // namespace chiralq
