#include "chiralq/grid.hpp"

#include <cmath>
#include <string>

namespace chiralq {

std::array<std::size_t, 4> SpacetimeGrid::unravel(std::size_t linear) const {
    std::array<std::size_t, 4> idx{};
    for (std::size_t a = 4; a-- > 0;) {
        idx[a] = linear % n[a];
        linear /= n[a];
    }
    return idx;
}

std::size_t SpacetimeGrid::stride(std::size_t axis) const {
    std::size_t s = 1;
    for (std::size_t a = 3; a > axis; --a) {
        s *= n[a];
    }
    return s;
}

void SpacetimeGrid::validate(std::size_t min_count) const {
    for (std::size_t a = 0; a < 4; ++a) {
        const double h = step(a);
        if (!(h > 0.0) || !std::isfinite(h)) {
            throw DimensionError("grid step along axis " + std::to_string(a) + " must be positive");
        }
        if (n[a] < min_count) {
            throw DimensionError("grid axis " + std::to_string(a) + " has " + std::to_string(n[a]) +
                                 " nodes, stencil needs at least " + std::to_string(min_count));
        }
    }
}

SpacetimeGrid SpacetimeGrid::shrink(std::size_t margin) const {
    validate(2 * margin + 1);
    SpacetimeGrid g = *this;
    const double m = static_cast<double>(margin);
    g.t0 += m * dt;
    g.x0 = {x0.x1 + m * dx.x1, x0.x2 + m * dx.x2, x0.x3 + m * dx.x3};
    for (auto& c : g.n) {
        c -= 2 * margin;
    }
    return g;
}

std::array<std::size_t, 4> SpacetimeGrid::offset_of(const SpacetimeGrid& sub) const {
    std::array<std::size_t, 4> off{};
    const double origin[4] = {t0, x0.x1, x0.x2, x0.x3};
    const double sub_origin[4] = {sub.t0, sub.x0.x1, sub.x0.x2, sub.x0.x3};
    for (std::size_t a = 0; a < 4; ++a) {
        const double h = step(a);
        if (std::abs(sub.step(a) - h) > 1e-12 * h) {
            throw DimensionError("sub-grid step differs along axis " + std::to_string(a));
        }
        const double shift = (sub_origin[a] - origin[a]) / h;
        const double rounded = std::round(shift);
        if (std::abs(shift - rounded) > 1e-6 || rounded < 0.0 ||
            static_cast<std::size_t>(rounded) + sub.n[a] > n[a]) {
            throw DimensionError("sub-grid is not an aligned block along axis " + std::to_string(a));
        }
        off[a] = static_cast<std::size_t>(rounded);
    }
    return off;
}

SpacetimeGrid SpacetimeGrid::covering(double t_begin, double t_end, const Vec3& lo, const Vec3& hi,
                                      double dt, const Vec3& dx) {
    SpacetimeGrid g;
    g.t0 = t_begin;
    g.x0 = lo;
    g.dt = dt;
    g.dx = dx;
    auto count = [](double a, double b, double h) {
        return static_cast<std::size_t>(std::llround((b - a) / h)) + 1;
    };
    g.n = {count(t_begin, t_end, dt), count(lo.x1, hi.x1, dx.x1), count(lo.x2, hi.x2, dx.x2),
           count(lo.x3, hi.x3, dx.x3)};
    g.validate();
    return g;
}

namespace {

template <class T, class Mag2>
FieldNorms norms_impl(const Field<T>& f, Mag2&& mag2) {
    FieldNorms r;
    double sum = 0.0;
    for (const auto& v : f.values) {
        const double m2 = mag2(v);
        sum += m2;
        r.max = std::max(r.max, std::sqrt(m2));
    }
    const auto& g = f.grid;
    r.l2 = std::sqrt(sum * g.dt * g.dx.x1 * g.dx.x2 * g.dx.x3);
    return r;
}

} // namespace

FieldNorms norms(const ScalarField& f) {
    return norms_impl(f, [](double v) { return v * v; });
}

FieldNorms norms(const VectorField& f) {
    return norms_impl(f, [](const Vec3& v) { return dot(v, v); });
}

FieldNorms norms(const SampledField& f) {
    return norms_impl(f, [](const Biquaternion& v) {
        const double n = norm(v);
        return n * n;
    });
}

} // namespace chiralq
