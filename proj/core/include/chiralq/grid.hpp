#pragma once

#include "chiralq/biquaternion.hpp"
#include "chiralq/errors.hpp"

#include <array>
#include <cstddef>
#include <type_traits>
#include <vector>

namespace chiralq {

/// Uniform node lattice in (t, x1, x2, x3).
///
/// Node (it, ix, iy, iz) sits at (t0 + it*dt, x0 + (ix*dx1, iy*dx2, iz*dx3)).
/// Linear storage is lexicographic in (it, ix, iy, iz), time slowest.
struct SpacetimeGrid {
    double t0 = 0.0;
    Vec3 x0{};
    double dt = 1.0;
    Vec3 dx{1.0, 1.0, 1.0};
    std::array<std::size_t, 4> n{1, 1, 1, 1}; ///< nt, nx, ny, nz

    std::size_t size() const { return n[0] * n[1] * n[2] * n[3]; }

    std::size_t index(std::size_t it, std::size_t ix, std::size_t iy, std::size_t iz) const {
        return ((it * n[1] + ix) * n[2] + iy) * n[3] + iz;
    }
    std::array<std::size_t, 4> unravel(std::size_t linear) const;

    /// Step along axis 0 (time) .. 3 (x3).
    double step(std::size_t axis) const { return axis == 0 ? dt : dx[axis - 1]; }

    /// Linear-index stride of one step along `axis`.
    std::size_t stride(std::size_t axis) const;

    double time(std::size_t it) const { return t0 + static_cast<double>(it) * dt; }
    Vec3 point(std::size_t ix, std::size_t iy, std::size_t iz) const {
        return {x0.x1 + static_cast<double>(ix) * dx.x1, x0.x2 + static_cast<double>(iy) * dx.x2,
                x0.x3 + static_cast<double>(iz) * dx.x3};
    }

    /// Throws DimensionError unless steps are positive and finite and every
    /// axis has at least `min_count` nodes.
    void validate(std::size_t min_count = 1) const;

    /// Grid with `margin` nodes removed from both ends of every axis.
    SpacetimeGrid shrink(std::size_t margin) const;

    /// Node offset of `sub` inside this grid. Throws DimensionError if the
    /// steps differ or `sub` is not a node-aligned sub-block.
    std::array<std::size_t, 4> offset_of(const SpacetimeGrid& sub) const;

    /// Uniform grid covering [t_begin, t_end] x [lo, hi] with the given steps
    /// (end points rounded to the nearest whole number of steps).
    static SpacetimeGrid covering(double t_begin, double t_end, const Vec3& lo, const Vec3& hi,
                                  double dt, const Vec3& dx);
};

/// Values of type T attached to every node of a grid.
template <class T>
struct Field {
    SpacetimeGrid grid;
    std::vector<T> values;

    Field() = default;
    explicit Field(const SpacetimeGrid& g) : grid(g), values(g.size()) {}

    const T& at(std::size_t it, std::size_t ix, std::size_t iy, std::size_t iz) const {
        return values[grid.index(it, ix, iy, iz)];
    }
    T& at(std::size_t it, std::size_t ix, std::size_t iy, std::size_t iz) {
        return values[grid.index(it, ix, iy, iz)];
    }
};

using SampledField = Field<Biquaternion>;
using ScalarField = Field<double>;
using VectorField = Field<Vec3>;

/// Evaluates fn(t, x) at every node.
template <class Fn>
auto sample(const SpacetimeGrid& grid, Fn&& fn) {
    using T = std::decay_t<decltype(fn(0.0, Vec3{}))>;
    Field<T> out(grid);
    std::size_t k = 0;
    for (std::size_t it = 0; it < grid.n[0]; ++it) {
        const double t = grid.time(it);
        for (std::size_t ix = 0; ix < grid.n[1]; ++ix) {
            for (std::size_t iy = 0; iy < grid.n[2]; ++iy) {
                for (std::size_t iz = 0; iz < grid.n[3]; ++iz) {
                    out.values[k++] = fn(t, grid.point(ix, iy, iz));
                }
            }
        }
    }
    return out;
}

/// Restriction of `field` to the aligned sub-grid `sub`.
template <class T>
Field<T> crop(const Field<T>& field, const SpacetimeGrid& sub) {
    const auto off = field.grid.offset_of(sub);
    Field<T> out(sub);
    std::size_t k = 0;
    for (std::size_t it = 0; it < sub.n[0]; ++it) {
        for (std::size_t ix = 0; ix < sub.n[1]; ++ix) {
            for (std::size_t iy = 0; iy < sub.n[2]; ++iy) {
                for (std::size_t iz = 0; iz < sub.n[3]; ++iz) {
                    out.values[k++] = field.at(it + off[0], ix + off[1], iy + off[2], iz + off[3]);
                }
            }
        }
    }
    return out;
}

/// Max norm and discrete L2 norm of a residual field.
struct FieldNorms {
    double max = 0.0;
    double l2 = 0.0; ///< sqrt(sum |v|^2 * cell volume)
};

FieldNorms norms(const ScalarField& f);
FieldNorms norms(const VectorField& f);
FieldNorms norms(const SampledField& f);

} // namespace chiralq
