#include "chiralq/diffops.hpp"

#include "chiralq/parallel.hpp"

#include <array>
#include <cmath>
#include <string>
#include <vector>

namespace chiralq {
namespace {

struct Tap {
    std::ptrdiff_t offset;
    double weight;
};
using Taps = std::vector<Tap>;
using Orders = std::array<int, 4>;

// Centered weights of the first-derivative stencil composed `count` times
// (unit spacing), indexed from -count*m to count*m.
std::vector<double> composed_weights(int order, int count) {
    const std::vector<double> first = order == 2 ? std::vector<double>{-0.5, 0.0, 0.5}
                                                 : std::vector<double>{1.0 / 12, -8.0 / 12, 0.0, 8.0 / 12,
                                                                       -1.0 / 12};
    std::vector<double> w{1.0};
    for (int c = 0; c < count; ++c) {
        std::vector<double> next(w.size() + first.size() - 1, 0.0);
        for (std::size_t i = 0; i < w.size(); ++i) {
            for (std::size_t j = 0; j < first.size(); ++j) {
                next[i + j] += w[i] * first[j];
            }
        }
        w = std::move(next);
    }
    return w;
}

Taps make_taps(const SpacetimeGrid& g, const Orders& d, int order) {
    Taps taps{{0, 1.0}};
    for (std::size_t a = 0; a < 4; ++a) {
        if (d[a] == 0) {
            continue;
        }
        const auto w = composed_weights(order, d[a]);
        const auto half = static_cast<std::ptrdiff_t>(w.size() / 2);
        const double scale = std::pow(g.step(a), -d[a]);
        const auto stride = static_cast<std::ptrdiff_t>(g.stride(a));
        Taps next;
        for (const auto& t : taps) {
            for (std::size_t i = 0; i < w.size(); ++i) {
                if (w[i] == 0.0) {
                    continue;
                }
                const auto off = static_cast<std::ptrdiff_t>(i) - half;
                next.push_back({t.offset + off * stride, t.weight * w[i] * scale});
            }
        }
        taps = std::move(next);
    }
    return taps;
}

Orders axis_orders(std::size_t axis, int count = 1) {
    Orders d{0, 0, 0, 0};
    d[axis] = count;
    return d;
}

template <class T>
T eval(const std::vector<T>& values, std::size_t base, const Taps& taps) {
    T acc{};
    for (const auto& t : taps) {
        acc += t.weight * values[static_cast<std::size_t>(static_cast<std::ptrdiff_t>(base) + t.offset)];
    }
    return acc;
}

// Applies fn(base_index) at every node of in.grid.shrink(margin).
template <class Out, class In, class Fn>
Field<Out> map_interior(const Field<In>& in, std::size_t margin, unsigned threads, Fn&& fn) {
    in.grid.validate(2 * margin + 1);
    Field<Out> out(in.grid.shrink(margin));
    const auto& og = out.grid;
    parallel_for(og.size(), threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t k = begin; k < end; ++k) {
            const auto idx = og.unravel(k);
            const std::size_t base = in.grid.index(idx[0] + margin, idx[1] + margin, idx[2] + margin, idx[3] + margin);
            out.values[k] = fn(base);
        }
    });
    return out;
}

struct SpatialTaps {
    std::array<Taps, 3> d;
    explicit SpatialTaps(const SpacetimeGrid& g, int order) {
        for (std::size_t k = 0; k < 3; ++k) {
            d[k] = make_taps(g, axis_orders(k + 1), order);
        }
    }
};

// Tensor products of the time stencil with each spatial stencil.
std::array<Taps, 3> mixed_time_space_taps(const SpacetimeGrid& g, int order) {
    std::array<Taps, 3> mixed;
    for (std::size_t k = 0; k < 3; ++k) {
        Orders d{1, 0, 0, 0};
        d[k + 1] = 1;
        mixed[k] = make_taps(g, d, order);
    }
    return mixed;
}

// Left multiplication by i_k.
Biquaternion times_unit(std::size_t k, const Biquaternion& q) { return Biquaternion::unit(static_cast<int>(k + 1)) * q; }

template <class T>
Field<T> time_derivative(const Field<T>& f, const StencilSpec& st) {
    st.validate();
    const Taps taps = make_taps(f.grid, axis_orders(0), st.order);
    return map_interior<T>(f, st.margin(), st.threads, [&](std::size_t b) { return eval(f.values, b, taps); });
}

void require_pure_vector(const SampledField& f, const char* what) {
    for (const auto& q : f.values) {
        if (q.s != cplx(0.0)) {
            throw DomainError(std::string(what) + " requires a purely vectorial field");
        }
    }
}

} // namespace

void StencilSpec::validate() const {
    if (order != 2 && order != 4) {
        throw DimensionError("stencil order must be 2 or 4, got " + std::to_string(order));
    }
}

SampledField apply_D(const SampledField& f, const StencilSpec& st) {
    st.validate();
    const SpatialTaps taps(f.grid, st.order);
    return map_interior<Biquaternion>(f, st.margin(), st.threads, [&](std::size_t b) {
        Biquaternion r;
        for (std::size_t k = 0; k < 3; ++k) {
            r += times_unit(k, eval(f.values, b, taps.d[k]));
        }
        return r;
    });
}

SampledField apply_dt(const SampledField& f, const StencilSpec& st) { return time_derivative(f, st); }
ScalarField apply_dt(const ScalarField& f, const StencilSpec& st) { return time_derivative(f, st); }
VectorField apply_dt(const VectorField& f, const StencilSpec& st) { return time_derivative(f, st); }

SampledField apply_first_order(const SampledField& f, cplx c_tD, cplx c_t, cplx c_D, const StencilSpec& st) {
    st.validate();
    const SpatialTaps space(f.grid, st.order);
    const Taps time = make_taps(f.grid, axis_orders(0), st.order);
    const auto mixed = mixed_time_space_taps(f.grid, st.order);
    return map_interior<Biquaternion>(f, st.margin(), st.threads, [&](std::size_t b) {
        Biquaternion dtD;
        Biquaternion D;
        for (std::size_t k = 0; k < 3; ++k) {
            dtD += times_unit(k, eval(f.values, b, mixed[k]));
            D += times_unit(k, eval(f.values, b, space.d[k]));
        }
        return c_tD * dtD + c_t * eval(f.values, b, time) + c_D * D;
    });
}

SampledField apply_M(const SampledField& f, const MediumParams& p, const StencilSpec& st) {
    p.require_chiral("apply_M (use apply_M_nonchiral)");
    const double s = p.sqrt_eps_mu();
    return apply_first_order(f, p.beta() * s, s, cplx(0.0, -1.0), st);
}

SampledField apply_M_star(const SampledField& f, const MediumParams& p, const StencilSpec& st) {
    p.require_chiral("apply_M_star (use apply_M_star_nonchiral)");
    const double s = p.sqrt_eps_mu();
    return apply_first_order(f, p.beta() * s, s, cplx(0.0, 1.0), st);
}

SampledField apply_M_nonchiral(const SampledField& f, const MediumParams& p, const StencilSpec& st) {
    return apply_first_order(f, 0.0, p.sqrt_eps_mu(), cplx(0.0, -1.0), st);
}

SampledField apply_M_star_nonchiral(const SampledField& f, const MediumParams& p, const StencilSpec& st) {
    return apply_first_order(f, 0.0, p.sqrt_eps_mu(), cplx(0.0, 1.0), st);
}

SampledField apply_M_any(const SampledField& f, const MediumParams& p, const StencilSpec& st) {
    return p.is_chiral() ? apply_M(f, p, st) : apply_M_nonchiral(f, p, st);
}

VectorField apply_rot(const VectorField& f, const StencilSpec& st) {
    st.validate();
    const SpatialTaps taps(f.grid, st.order);
    return map_interior<Vec3>(f, st.margin(), st.threads, [&](std::size_t b) {
        const Vec3 d1 = eval(f.values, b, taps.d[0]);
        const Vec3 d2 = eval(f.values, b, taps.d[1]);
        const Vec3 d3 = eval(f.values, b, taps.d[2]);
        return Vec3{d2.x3 - d3.x2, d3.x1 - d1.x3, d1.x2 - d2.x1};
    });
}

SampledField apply_rot(const SampledField& f, const StencilSpec& st) {
    st.validate();
    const SpatialTaps taps(f.grid, st.order);
    return map_interior<Biquaternion>(f, st.margin(), st.threads, [&](std::size_t b) {
        const Biquaternion d1 = eval(f.values, b, taps.d[0]);
        const Biquaternion d2 = eval(f.values, b, taps.d[1]);
        const Biquaternion d3 = eval(f.values, b, taps.d[2]);
        return Biquaternion(0.0, d2.v[2] - d3.v[1], d3.v[0] - d1.v[2], d1.v[1] - d2.v[0]);
    });
}

ScalarField apply_div(const VectorField& f, const StencilSpec& st) {
    st.validate();
    const SpatialTaps taps(f.grid, st.order);
    return map_interior<double>(f, st.margin(), st.threads, [&](std::size_t b) {
        return eval(f.values, b, taps.d[0]).x1 + eval(f.values, b, taps.d[1]).x2 + eval(f.values, b, taps.d[2]).x3;
    });
}

SampledField apply_div(const SampledField& f, const StencilSpec& st) {
    st.validate();
    const SpatialTaps taps(f.grid, st.order);
    return map_interior<Biquaternion>(f, st.margin(), st.threads, [&](std::size_t b) {
        return Biquaternion(eval(f.values, b, taps.d[0]).v[0] + eval(f.values, b, taps.d[1]).v[1] +
                            eval(f.values, b, taps.d[2]).v[2]);
    });
}

VectorField apply_grad(const ScalarField& f, const StencilSpec& st) {
    st.validate();
    const SpatialTaps taps(f.grid, st.order);
    return map_interior<Vec3>(f, st.margin(), st.threads, [&](std::size_t b) {
        return Vec3{eval(f.values, b, taps.d[0]), eval(f.values, b, taps.d[1]), eval(f.values, b, taps.d[2])};
    });
}

SampledField apply_grad(const SampledField& f, const StencilSpec& st) {
    st.validate();
    const SpatialTaps taps(f.grid, st.order);
    return map_interior<Biquaternion>(f, st.margin(), st.threads, [&](std::size_t b) {
        return Biquaternion(0.0, eval(f.values, b, taps.d[0]).s, eval(f.values, b, taps.d[1]).s,
                            eval(f.values, b, taps.d[2]).s);
    });
}

VectorField apply_dt_rot(const VectorField& f, const StencilSpec& st) {
    st.validate();
    const auto mixed = mixed_time_space_taps(f.grid, st.order);
    return map_interior<Vec3>(f, st.margin(), st.threads, [&](std::size_t b) {
        const Vec3 d1 = eval(f.values, b, mixed[0]);
        const Vec3 d2 = eval(f.values, b, mixed[1]);
        const Vec3 d3 = eval(f.values, b, mixed[2]);
        return Vec3{d2.x3 - d3.x2, d3.x1 - d1.x3, d1.x2 - d2.x1};
    });
}

ScalarField apply_dt_div(const VectorField& f, const StencilSpec& st) {
    st.validate();
    const auto mixed = mixed_time_space_taps(f.grid, st.order);
    return map_interior<double>(f, st.margin(), st.threads, [&](std::size_t b) {
        return eval(f.values, b, mixed[0]).x1 + eval(f.values, b, mixed[1]).x2 + eval(f.values, b, mixed[2]).x3;
    });
}

namespace {

// Second-derivative tables: hess[i][j] = d_i d_j (spatial), with an optional
// extra dt^2 factor.
struct HessianTaps {
    std::array<std::array<Taps, 3>, 3> h;
    HessianTaps(const SpacetimeGrid& g, int order, int time_count) {
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t j = 0; j < 3; ++j) {
                Orders d{time_count, 0, 0, 0};
                d[i + 1] += 1;
                d[j + 1] += 1;
                h[i][j] = make_taps(g, d, order);
            }
        }
    }
};

using CVec = std::array<cplx, 3>;

// rot rot u = grad div u - sum_j d_j d_j u, from the Hessian of u.
CVec rot_rot(const std::array<std::array<Biquaternion, 3>, 3>& hess) {
    CVec r{};
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            r[i] += hess[i][j].v[j] - hess[j][j].v[i];
        }
    }
    return r;
}

CVec rot_of(const std::array<Biquaternion, 3>& d) {
    return {d[1].v[2] - d[2].v[1], d[2].v[0] - d[0].v[2], d[0].v[1] - d[1].v[0]};
}

} // namespace

SampledField apply_chiral_wave(const SampledField& f, const MediumParams& p, const StencilSpec& st) {
    st.validate();
    require_pure_vector(f, "apply_chiral_wave");
    const HessianTaps hess(f.grid, st.order, 0);
    const HessianTaps hess_tt(f.grid, st.order, 2);
    const Taps tt = make_taps(f.grid, axis_orders(0, 2), st.order);
    std::array<Taps, 3> tt_d;
    for (std::size_t k = 0; k < 3; ++k) {
        Orders d{2, 0, 0, 0};
        d[k + 1] = 1;
        tt_d[k] = make_taps(f.grid, d, st.order);
    }
    const double em = p.epsilon() * p.mu();
    const double beta = p.beta();
    return map_interior<Biquaternion>(f, 2 * st.margin(), st.threads, [&](std::size_t b) {
        std::array<std::array<Biquaternion, 3>, 3> h;
        std::array<std::array<Biquaternion, 3>, 3> htt;
        std::array<Biquaternion, 3> dtt_d;
        for (std::size_t i = 0; i < 3; ++i) {
            dtt_d[i] = eval(f.values, b, tt_d[i]);
            for (std::size_t j = 0; j < 3; ++j) {
                h[i][j] = eval(f.values, b, hess.h[i][j]);
                htt[i][j] = eval(f.values, b, hess_tt.h[i][j]);
            }
        }
        const Biquaternion dtt = eval(f.values, b, tt);
        const CVec rr = rot_rot(h);
        const CVec rr_tt = rot_rot(htt);
        const CVec r_tt = rot_of(dtt_d);
        Biquaternion out;
        for (std::size_t i = 0; i < 3; ++i) {
            out.v[i] = rr[i] + em * dtt.v[i] + 2.0 * beta * em * r_tt[i] + beta * beta * em * rr_tt[i];
        }
        return out;
    });
}

SampledField apply_wave_nonchiral(const SampledField& f, const MediumParams& p, const StencilSpec& st) {
    st.validate();
    const Taps tt = make_taps(f.grid, axis_orders(0, 2), st.order);
    std::array<Taps, 3> kk;
    for (std::size_t k = 0; k < 3; ++k) {
        kk[k] = make_taps(f.grid, axis_orders(k + 1, 2), st.order);
    }
    const double em = p.epsilon() * p.mu();
    return map_interior<Biquaternion>(f, 2 * st.margin(), st.threads, [&](std::size_t b) {
        Biquaternion lap;
        for (std::size_t k = 0; k < 3; ++k) {
            lap += eval(f.values, b, kk[k]);
        }
        return em * eval(f.values, b, tt) - lap;
    });
}

} // namespace chiralq
