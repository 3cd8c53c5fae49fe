#include "chiralq/bessel.hpp"
#include "chiralq/errors.hpp"
#include "chiralq/fundamental.hpp"
#include "chiralq/oracle.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace chiralq;

namespace {

const cplx I{0.0, 1.0};
constexpr double pi = std::numbers::pi;

double rel(const Biquaternion& a, const Biquaternion& b) { return norm(a - b) / norm(b); }

} // namespace

TEST_CASE("series with c = 0") {
    const cplx a_y(1.0, 0.05);
    for (double t : {0.0, 0.5, 2.0}) {
        CHECK(std::abs(ik_series(1, t, 0.0, a_y, 5) - I * std::exp(I * a_y * t)) <= 1e-15);
    }
    CHECK(ik_series(1, -1.0, 2.0, a_y, 5) == cplx(0.0));
}

TEST_CASE("series resum to Bessel functions") {
    const cplx a_y(2.0, 0.1);
    const double t = 0.8;
    for (double ct : {1e-6, 1e-3, 0.1, 1.0, 5.0, 12.0, 20.0}) {
        const double c = ct / t;
        const double z = 2.0 * std::sqrt(ct);
        const cplx phase = std::exp(I * a_y * t);
        CAPTURE(ct);
        CHECK(std::abs(ik_series(1, t, c, a_y, 80) - I * phase * bessel_j0(z)) <= 1e-12);
        CHECK(std::abs(ik_series(2, t, c, a_y, 80) + phase * std::sqrt(t / c) * bessel_j1(z)) <= 1e-12);
    }
}

TEST_CASE("residues") {
    const cplx a_y(1.0, 0.05);
    CHECK(std::abs(residue_ikj(1, 0, 1.0, a_y) - 2.0 * pi * I * std::exp(I * a_y)) <= 1e-14);
    CHECK(std::abs(residue_ikj(2, 0, 1.0, a_y) + 2.0 * pi * std::exp(I * a_y)) <= 1e-14);
    for (int k : {1, 2}) {
        for (int j : {0, 1, 5}) {
            CHECK(residue_ikj(k, j, -1.0, a_y) == cplx(0.0));
        }
    }
    CHECK_THROWS_AS(residue_ikj(0, 0, 1.0, a_y), DomainError);
    // the term-by-term residues of the essential singularity resum to I_k
    const double t = 0.7, c = 3.0;
    for (int k : {1, 2}) {
        cplx s = 0.0;
        cplx w = 1.0;
        for (int j = 0; j < 60; ++j) {
            s += w * residue_ikj(k, j, t, a_y) / (2.0 * pi);
            w *= I * c / static_cast<double>(j + 1);
        }
        CHECK(std::abs(s - ik_series(k, t, c, a_y, 60)) <= 1e-13);
    }
}

TEST_CASE("series errors") {
    CHECK_THROWS_AS(ik_series(1, 1.0, 20.0, cplx(1.0), 3), TruncationError);
    CHECK_THROWS_AS(ik_series(3, 1.0, 1.0, cplx(1.0), 30), DomainError);
    CHECK_THROWS_AS(ik_series(1, 1.0, -1.0, cplx(1.0), 30), DomainError);
}

TEST_CASE("Gauss-Legendre rule") {
    for (int n : {1, 4, 16}) {
        const auto& gl = gauss_legendre(n);
        REQUIRE(gl.nodes.size() == static_cast<std::size_t>(n));
        double w = 0.0, m = 0.0;
        for (int q = 0; q < n; ++q) {
            w += gl.weights[q];
            m += gl.weights[q] * std::pow(gl.nodes[q], 2 * n - 2);
        }
        CHECK(w == doctest::Approx(2.0).epsilon(1e-14));
        CHECK(m == doctest::Approx(2.0 / (2 * n - 1)).epsilon(1e-13));
    }
}

TEST_CASE("Richardson extrapolation") {
    const auto g = [](double h) { return Biquaternion(1.0 + 3.0 * h - 2.0 * h * h); };
    CHECK(norm(richardson_halving({g(0.1), g(0.05), g(0.025)}) - Biquaternion(1.0)) <= 1e-13);
    CHECK_THROWS_AS(richardson_halving({g(0.1)}), DomainError);
}

TEST_CASE("inverse transform matches the damped closed form") {
    const MediumParams p(1.0, 1.0, 1.0);
    const Vec3 x{1.0, 0.0, 0.0};
    ContourSpec c;
    c.y = 0.05;
    ContourStats stats;
    const Biquaternion v = inverse_fourier_f(1.0, x, p, c, &stats);
    CHECK(rel(v, fundamental_f_factored(1.0, x, p, 0.05)) <= 1e-4);
    CHECK(stats.nodes == stats.panels * 16);
    CHECK(stats.pole_spacing <= c.y / 3.0);
    CHECK(stats.omega_max > 0.0);
}

TEST_CASE("y sweep extrapolates to the closed form") {
    const MediumParams p(1.0, 1.0, 1.0);
    const Vec3 x{1.0, 0.0, 0.0};
    ContourSpec c;
    c.y = 0.1;
    const Biquaternion v = inverse_fourier_f_extrapolated(1.0, x, p, c, 3);
    CHECK(rel(v, fundamental_f(1.0, x, p)) <= 1e-4);
}

TEST_CASE("inverse transform vanishes for negative time") {
    const MediumParams p(1.0, 1.0, 1.0);
    const Vec3 x{1.0, 0.0, 0.0};
    const double scale = norm(fundamental_f(0.5, x, p));
    ContourSpec c;
    c.y = 0.05;
    const double coarse = norm(inverse_fourier_f(-0.5, x, p, c));
    c.omega_max = 4.0 * 50.0 * (1.0 / c.y);
    const double fine = norm(inverse_fourier_f(-0.5, x, p, c));
    CHECK(coarse <= 1e-4 * scale);
    CHECK(fine <= coarse);
}

TEST_CASE("contour validation") {
    const MediumParams p(1.0, 1.0, 1.0);
    ContourSpec c;
    c.y = 0.0;
    CHECK_THROWS_AS(inverse_fourier_f(1.0, {1.0, 0.0, 0.0}, p, c), DomainError);
    c = {};
    c.nodes_per_panel = 0;
    CHECK_THROWS_AS(inverse_fourier_f(1.0, {1.0, 0.0, 0.0}, p, c), DomainError);
    // close to the origin c is small and the panels next to the pole are as wide as y / 2
    c = {};
    c.nodes_per_panel = 1;
    CHECK_THROWS_AS(inverse_fourier_f(1.0, {0.01, 0.0, 0.0}, p, c), ResolutionError);
}
