#pragma once

#include "chiralq/grid.hpp"
#include "chiralq/medium.hpp"

#include <cstddef>

namespace chiralq {

/// Central-difference configuration.
///
/// Only interior nodes are produced: an operator that composes k first
/// derivatives along the same axis drops k*order/2 nodes at both ends of
/// every axis. There are no one-sided stencils.
struct StencilSpec {
    int order = 2;        ///< 2 or 4
    unsigned threads = 1; ///< worker threads; results do not depend on it

    std::size_t margin() const { return static_cast<std::size_t>(order / 2); }
    void validate() const; ///< throws DimensionError for unsupported orders
};

// First-order operators. Output grid: input.shrink(margin()).

/// Moisil-Teodoresco operator D = i1 d1 + i2 d2 + i3 d3 acting from the left.
SampledField apply_D(const SampledField& f, const StencilSpec& st = {});

/// Time derivative.
SampledField apply_dt(const SampledField& f, const StencilSpec& st = {});
ScalarField apply_dt(const ScalarField& f, const StencilSpec& st = {});
VectorField apply_dt(const VectorField& f, const StencilSpec& st = {});

/// c_tD * dt D f + c_t * dt f + c_D * D f, with dt D built from the
/// tensor product of the two one-dimensional stencils.
SampledField apply_first_order(const SampledField& f, cplx c_tD, cplx c_t, cplx c_D,
                               const StencilSpec& st = {});

/// M = beta sqrt(eps mu) dt D + sqrt(eps mu) dt - i D. Rejects beta == 0.
SampledField apply_M(const SampledField& f, const MediumParams& p, const StencilSpec& st = {});
/// M* = beta sqrt(eps mu) dt D + sqrt(eps mu) dt + i D. Rejects beta == 0.
SampledField apply_M_star(const SampledField& f, const MediumParams& p, const StencilSpec& st = {});
/// sqrt(eps mu) dt - i D; beta is ignored.
SampledField apply_M_nonchiral(const SampledField& f, const MediumParams& p, const StencilSpec& st = {});
/// sqrt(eps mu) dt + i D; beta is ignored.
SampledField apply_M_star_nonchiral(const SampledField& f, const MediumParams& p,
                                    const StencilSpec& st = {});
/// apply_M for chiral media, apply_M_nonchiral for beta == 0.
SampledField apply_M_any(const SampledField& f, const MediumParams& p, const StencilSpec& st = {});

// Vector calculus. Biquaternion overloads read the vector part (rot, div) or
// the scalar part (grad) and return a pure vector or a pure scalar.

VectorField apply_rot(const VectorField& f, const StencilSpec& st = {});
SampledField apply_rot(const SampledField& f, const StencilSpec& st = {});
ScalarField apply_div(const VectorField& f, const StencilSpec& st = {});
SampledField apply_div(const SampledField& f, const StencilSpec& st = {});
VectorField apply_grad(const ScalarField& f, const StencilSpec& st = {});
SampledField apply_grad(const SampledField& f, const StencilSpec& st = {});

/// dt rot and dt div from tensor-product stencils, so the output keeps the
/// single margin of a first-order operator.
VectorField apply_dt_rot(const VectorField& f, const StencilSpec& st = {});
ScalarField apply_dt_div(const VectorField& f, const StencilSpec& st = {});

// Second-order-in-each-axis operators. Output grid: input.shrink(2 * margin()).

/// rot rot U + eps mu dt^2 U + 2 beta eps mu dt^2 rot U + beta^2 eps mu dt^2 rot rot U
/// for a purely vectorial U; a nonzero scalar part throws DomainError.
/// rot rot is the composition of the discrete curls.
SampledField apply_chiral_wave(const SampledField& f, const MediumParams& p, const StencilSpec& st = {});

/// eps mu dt^2 f - (d1 d1 + d2 d2 + d3 d3) f on any biquaternion field.
SampledField apply_wave_nonchiral(const SampledField& f, const MediumParams& p,
                                  const StencilSpec& st = {});

} // namespace chiralq
