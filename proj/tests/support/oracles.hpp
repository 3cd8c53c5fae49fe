#pragma once

// Reference computations used by the tests. Each one follows a route that
// does not share code with the library.

#include "chiralq/biquaternion.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <random>

namespace oracle {

using chiralq::Biquaternion;
using chiralq::cplx;

// Product through the multiplication table of the basis 1, i1, i2, i3.
// table[a][b] = (sign, index) with e_a e_b = sign * e_index.
inline Biquaternion table_product(const Biquaternion& a, const Biquaternion& b) {
    struct Entry {
        int sign;
        int index;
    };
    static constexpr Entry table[4][4] = {
        {{1, 0}, {1, 1}, {1, 2}, {1, 3}},
        {{1, 1}, {-1, 0}, {1, 3}, {-1, 2}},
        {{1, 2}, {-1, 3}, {-1, 0}, {1, 1}},
        {{1, 3}, {1, 2}, {-1, 1}, {-1, 0}},
    };
    const std::array<cplx, 4> x{a.s, a.v[0], a.v[1], a.v[2]};
    const std::array<cplx, 4> y{b.s, b.v[0], b.v[1], b.v[2]};
    std::array<cplx, 4> z{};
    for (int p = 0; p < 4; ++p) {
        for (int q = 0; q < 4; ++q) {
            z[table[p][q].index] += static_cast<double>(table[p][q].sign) * x[p] * y[q];
        }
    }
    return {z[0], z[1], z[2], z[3]};
}

// J_n(z) = (1/pi) int_0^pi cos(n tau - z sin tau) d tau. The integrand is
// smooth and periodic after reflection, so the trapezoid rule converges
// spectrally; 400 + 4z nodes give full double precision for z <= 100.
inline double bessel_integral(int n, double z) {
    const int m = 400 + static_cast<int>(4.0 * z);
    const double h = std::numbers::pi / m;
    double s = 0.5 * (1.0 + std::cos(n * std::numbers::pi));
    for (int k = 1; k < m; ++k) {
        const double tau = k * h;
        s += std::cos(n * tau - z * std::sin(tau));
    }
    return s * h / std::numbers::pi;
}

inline std::mt19937_64 rng(std::uint64_t seed = 20240611) { return std::mt19937_64(seed); }

inline double uniform(std::mt19937_64& g, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(g);
}

inline cplx random_cplx(std::mt19937_64& g, double r = 1.0) { return {uniform(g, -r, r), uniform(g, -r, r)}; }

inline Biquaternion random_bq(std::mt19937_64& g, double r = 1.0) {
    return {random_cplx(g, r), random_cplx(g, r), random_cplx(g, r), random_cplx(g, r)};
}

inline chiralq::Vec3 random_vec(std::mt19937_64& g, double lo, double hi) {
    return {uniform(g, lo, hi), uniform(g, lo, hi), uniform(g, lo, hi)};
}

// Random point with lo <= |x| <= hi.
inline chiralq::Vec3 random_point_in_shell(std::mt19937_64& g, double lo, double hi) {
    chiralq::Vec3 d;
    double n = 0.0;
    do {
        d = random_vec(g, -1.0, 1.0);
        n = chiralq::norm(d);
    } while (n < 1e-3 || n > 1.0);
    return (uniform(g, lo, hi) / n) * d;
}

} // namespace oracle
