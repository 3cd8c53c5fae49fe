#include "chiralq/bessel.hpp"
#include "chiralq/diffops.hpp"
#include "chiralq/errors.hpp"
#include "chiralq/fit.hpp"
#include "chiralq/fundamental.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <numbers>
#include <vector>

using namespace chiralq;

namespace {

const cplx I{0.0, 1.0};
constexpr double pi = std::numbers::pi;

double rel(const Biquaternion& a, const Biquaternion& b) { return norm(a - b) / norm(b); }

// |M f| at one point from a 3^4 block of samples, order-2 stencils.
double point_residual(const MediumParams& p, double t, const Vec3& x, double h) {
    SpacetimeGrid g;
    g.t0 = t - h;
    g.x0 = x - Vec3{h, h, h};
    g.dt = h;
    g.dx = {h, h, h};
    g.n = {3, 3, 3, 3};
    const auto f = sample(g, [&](double s, const Vec3& y) { return fundamental_f(s, y, p); });
    const auto r = apply_M(f, p);
    REQUIRE(r.values.size() == 1);
    return norm(r.values[0]) / norm(fundamental_f(t, x, p));
}

} // namespace

TEST_CASE("Helmholtz kernel") {
    const Vec3 e1{1.0, 0.0, 0.0};
    CHECK(std::abs(theta_alpha(e1, 0.0) - cplx(-1.0 / (4.0 * pi))) <= 1e-15);
    CHECK(std::abs(theta_alpha(e1, 0.0) - cplx(-0.0795774715)) <= 1e-10);
    CHECK(std::abs(theta_alpha({0.0, 0.6, 0.8}, I) - cplx(-std::exp(-1.0) / (4.0 * pi))) <= 1e-15);
    auto g = oracle::rng(31);
    for (int n = 0; n < 100; ++n) {
        Vec3 x = oracle::random_point_in_shell(g, 1.0, 1.0);
        const cplx alpha(oracle::uniform(g, -3, 3), oracle::uniform(g, 0, 2));
        CHECK(std::abs(theta_alpha(2.0 * x, alpha) - theta_alpha(x, alpha) * std::exp(I * alpha) / 2.0) <= 1e-14);
    }
    CHECK_THROWS_AS(theta_alpha({}, 1.0), SingularityError);
    CHECK_THROWS_AS(theta_alpha(e1, cplx(1.0, -0.1)), DomainError);
}

TEST_CASE("Dirac kernel at alpha = 0 is the Cauchy kernel") {
    auto g = oracle::rng(32);
    for (int n = 0; n < 100; ++n) {
        const Vec3 x = oracle::random_point_in_shell(g, 0.1, 5.0);
        const double r = norm(x);
        const Biquaternion cauchy = Biquaternion::from_vector((-1.0 / (4.0 * pi * r * r * r)) * x);
        CHECK(norm(k_alpha(x, 0.0) - cauchy) <= 1e-14 * norm(cauchy));
    }
}

TEST_CASE("Dirac kernel against differentiated Helmholtz kernel") {
    auto g = oracle::rng(33);
    const double h = 1e-5;
    for (int n = 0; n < 200; ++n) {
        const Vec3 x = oracle::random_point_in_shell(g, 0.3, 3.0);
        const cplx alpha(oracle::uniform(g, -3, 3), oracle::uniform(g, 0, 1));
        const Biquaternion K = k_alpha(x, alpha);
        CHECK(K.s == alpha * theta_alpha(x, alpha));
        Biquaternion fd(alpha * theta_alpha(x, alpha));
        for (std::size_t k = 0; k < 3; ++k) {
            Vec3 xp = x, xm = x;
            xp[k] += h;
            xm[k] -= h;
            fd.v[k] = -(theta_alpha(xp, alpha) - theta_alpha(xm, alpha)) / (2.0 * h);
        }
        CHECK(rel(fd, K) <= 1e-8);
    }
}

TEST_CASE("radiation residual") {
    for (double alpha : {0.5, 1.0, 2.0}) {
        std::vector<double> r, res;
        double prev = 1e300;
        for (double R : {10.0, 31.6, 100.0, 316.0, 1000.0}) {
            const Vec3 x = (R / std::sqrt(3.0)) * Vec3{1.0, -1.0, 1.0};
            const double v = radiation_residual(x, alpha);
            CHECK(v * R < prev);
            prev = v * R;
            r.push_back(R);
            res.push_back(v);
        }
        const PowerFit fit = fit_loglog(r, res);
        CHECK(fit.slope <= -2.0 + 1e-9);
        CHECK(fit.r2 >= 0.999);
    }
    // leading term cancels: residual equals |(1 + i xh)(x/|x|^2) Theta|
    const Vec3 x{3.0, 4.0, 0.0};
    const cplx alpha = 1.5;
    const Biquaternion xh = Biquaternion::from_vector((1.0 / 5.0) * x);
    const Biquaternion expect = (Biquaternion(1.0) + I * xh) * Biquaternion::from_vector((1.0 / 25.0) * x) *
                                Biquaternion(theta_alpha(x, alpha));
    CHECK(radiation_residual(x, alpha) == doctest::Approx(norm(expect)).epsilon(1e-13));
    // exponential decay for Im alpha > 0
    const double r10 = radiation_residual({10.0, 0.0, 0.0}, cplx(1.0, 0.5));
    const double r20 = radiation_residual({20.0, 0.0, 0.0}, cplx(1.0, 0.5));
    CHECK(r20 / r10 == doctest::Approx(std::exp(-5.0) / 4.0).epsilon(1e-12));
}

TEST_CASE("alpha of omega") {
    const MediumParams p(2.0, 0.5, 0.5);
    CHECK(alpha_of_omega(0.0, p) == cplx(0.0));
    CHECK(std::abs(alpha_of_omega(1e9, p) - 1.0 / 0.5) <= 1e-8);
    CHECK(std::abs(alpha_of_omega(-1e9, p) - 1.0 / 0.5) <= 1e-8);
    CHECK_THROWS_AS(alpha_of_omega(p.pole(), p), PoleError);
    CHECK_THROWS_AS(alpha_of_omega(1.0, MediumParams(1.0, 1.0, 0.0)), DomainError);
    // below the pole, Im alpha = 1 / (beta^2 sqrt(eps mu) y)
    for (double beta : {0.5, -0.5}) {
        const MediumParams q(1.0, 1.0, beta);
        const double y = 0.05;
        const cplx alpha = alpha_of_omega(cplx(q.pole(), -y), q);
        CHECK(alpha.imag() == doctest::Approx(1.0 / (beta * beta * y)));
    }
    // near omega = 0, alpha ~ -sqrt(eps mu) omega
    CHECK(std::abs(alpha_of_omega(1e-6, p) + 1e-6) <= 1e-11);
}

TEST_CASE("frequency-domain kernel") {
    auto g = oracle::rng(34);
    for (double beta : {1.0, 0.5, -0.7}) {
        const MediumParams p(oracle::uniform(g, 0.5, 2), oracle::uniform(g, 0.5, 2), beta);
        for (int n = 0; n < 500; ++n) {
            const Vec3 x = oracle::random_point_in_shell(g, 0.2, 3.0);
            const cplx omega(oracle::uniform(g, -10, 10), oracle::uniform(g, -1, 0));
            if (std::abs(omega - p.pole()) < 0.05) continue;
            const Biquaternion F = fourier_F(omega, x, p);
            const cplx factor = (p.beta() * p.sqrt_eps_mu() * omega - 1.0) * I;
            CHECK(rel(factor * F, k_alpha(x, alpha_of_omega(omega, p))) <= 1e-12);
            CHECK(rel(fourier_F_from_kalpha(omega, x, p), F) <= 1e-12);
            CHECK(rel(fourier_F_factored(omega, x, p), F) <= 1e-12);
        }
    }
}

TEST_CASE("kernel factors") {
    const MediumParams p(4.0, 1.0, 0.5);
    const Vec3 x{0.0, 3.0, 4.0};
    const KernelFactors k = kernel_factors(x, p);
    CHECK(k.a == doctest::Approx(1.0));
    CHECK(k.c == doctest::Approx(5.0 / (0.25 * 2.0)));
    CHECK(std::abs(k.envelope - std::exp(I * 10.0) / (20.0 * pi)) <= 1e-15);
    const Biquaternion xh = Biquaternion::from_vector((1.0 / 5.0) * x);
    const Biquaternion A = (I / (0.125 * 4.0)) * (Biquaternion(1.0) - I * xh);
    CHECK(norm(k.A - A) <= 1e-14);
}

TEST_CASE("causality") {
    const MediumParams p(1.0, 1.0, 0.5);
    auto g = oracle::rng(35);
    for (int n = 0; n < 1000; ++n) {
        const double t = -oracle::uniform(g, 1e-12, 10.0);
        const Vec3 x = oracle::random_point_in_shell(g, 1e-3, 10.0);
        CHECK(fundamental_f(t, x, p) == Biquaternion{});
        CHECK(fundamental_f_factored(t, x, p, 0.1) == Biquaternion{});
    }
    CHECK(fundamental_f(-1e-300, {1.0, 0.0, 0.0}, p) == Biquaternion{});
}

TEST_CASE("short-time limit") {
    for (double beta : {0.5, -0.5, 2.0}) {
        const MediumParams p(2.0, 0.5, beta);
        const Vec3 x{0.3, -0.4, 0.5};
        const double bs = p.beta() * p.sqrt_eps_mu();
        const Biquaternion limit = (1.0 / bs) * k_alpha(x, 1.0 / beta);
        CHECK(rel(fundamental_f(0.0, x, p), limit) <= 1e-15);
        CHECK(rel(fundamental_f(1e-10, x, p), limit) <= 1e-8);
    }
}

TEST_CASE("the two closed forms agree") {
    {
        const MediumParams p(1.0, 1.0, 1.0);
        const Vec3 x{1.0, 0.0, 0.0};
        CHECK(rel(fundamental_f_factored(1.0, x, p), fundamental_f(1.0, x, p)) <= 1e-12);
    }
    auto g = oracle::rng(36);
    double worst = 0.0;
    for (int n = 0; n < 10000; ++n) {
        const double beta = (n % 2 ? 1.0 : -1.0) * oracle::uniform(g, 0.2, 2.0);
        const MediumParams p(oracle::uniform(g, 0.3, 3.0), oracle::uniform(g, 0.3, 3.0), beta);
        const double t = oracle::uniform(g, 0.0, 3.0);
        const Vec3 x = oracle::random_point_in_shell(g, 0.05, 3.0);
        worst = std::max(worst, rel(fundamental_f_factored(t, x, p), fundamental_f(t, x, p)));
    }
    CHECK(worst <= 1e-12);
}

TEST_CASE("regularised kernel carries the damping factor") {
    const MediumParams p(1.0, 1.0, 1.0);
    const Vec3 x{1.0, 0.0, 0.0};
    const double y = 0.05, t = 1.0;
    const Biquaternion damped = std::exp(-y * t) * fundamental_f(t, x, p);
    CHECK(rel(fundamental_f_factored(t, x, p, y), damped) <= 1e-12);
}

TEST_CASE("scalar part of the kernel") {
    // Both terms contribute: the scalar part of (1 - i x/|x|) is 1, so the
    // Bessel J1 term adds to what K carries.
    auto g = oracle::rng(37);
    for (int n = 0; n < 1000; ++n) {
        const double beta = (n % 2 ? 1.0 : -1.0) * oracle::uniform(g, 0.2, 2.0);
        const MediumParams p(oracle::uniform(g, 0.3, 3.0), oracle::uniform(g, 0.3, 3.0), beta);
        const double t = oracle::uniform(g, 0.0, 3.0);
        const Vec3 x = oracle::random_point_in_shell(g, 0.05, 3.0);
        const double r = norm(x);
        const double q = std::sqrt(std::sqrt(p.epsilon() * p.mu()));
        const double bs = beta * p.sqrt_eps_mu();
        const double z = 2.0 * std::sqrt(t * r) / (std::abs(beta) * q);
        const double sb = beta > 0 ? 1.0 : -1.0;
        const cplx theta = theta_alpha(x, 1.0 / beta);
        const cplx pre = std::exp(I * t / bs) / bs;
        const cplx expect = pre * (theta / beta * bessel_j0(z) +
                                   I * theta / (beta * q) * std::sqrt(t / r) * sb * bessel_j1(z));
        const cplx got = fundamental_f(t, x, p).s;
        CHECK(std::abs(got - expect) <= 1e-12 * std::abs(expect) + 1e-300);
    }
}

TEST_CASE("finite-difference annihilation at single points") {
    for (double beta : {0.5, -0.5, 1.5}) {
        const MediumParams p(2.0, 0.5, beta);
        for (const auto& [t, x] : {std::pair{0.6, Vec3{0.5, 0.2, 0.1}}, std::pair{1.3, Vec3{-0.3, 0.6, -0.4}}}) {
            const double e1 = point_residual(p, t, x, 0.02);
            const double e2 = point_residual(p, t, x, 0.01);
            CAPTURE(beta);
            CHECK(e2 < 1e-2);
            CHECK(e1 / e2 == doctest::Approx(4.0).epsilon(0.15));
        }
    }
}

TEST_CASE("kernel evaluation entry points") {
    const MediumParams p(1.0, 1.0, 0.5);
    const Vec3 x{0.2, 0.0, 0.1};
    const KernelPoint k = evaluate_kernel(0.7, x, p);
    CHECK(k.t == 0.7);
    CHECK(k.x == x);
    CHECK(k.value == fundamental_f(0.7, x, p));
    CHECK_THROWS_AS(fundamental_f(1.0, {}, p), SingularityError);
    CHECK_THROWS_AS(k_alpha({}, 1.0), SingularityError);
    CHECK_THROWS_AS(fundamental_f(1.0, x, MediumParams(1.0, 1.0, 0.0)), DomainError);
    CHECK_THROWS_AS(MediumParams(0.0, 1.0, 1.0), DomainError);
    CHECK_THROWS_AS(MediumParams(1.0, -1.0, 1.0), DomainError);
}
