#include "chiralq/fundamental.hpp"

#include "chiralq/bessel.hpp"
#include "chiralq/errors.hpp"

#include <cmath>
#include <numbers>

namespace chiralq {
namespace {

constexpr cplx I{0.0, 1.0};
constexpr double kFourPi = 4.0 * std::numbers::pi;

double checked_radius(const Vec3& x) {
    const double r = norm(x);
    if (!(r > 0.0)) {
        throw SingularityError("kernel evaluated at x = 0");
    }
    return r;
}

// 1 - i x/|x|
Biquaternion one_minus_i_xhat(const Vec3& x, double r) {
    return {1.0, -I * (x.x1 / r), -I * (x.x2 / r), -I * (x.x3 / r)};
}

} // namespace

cplx theta_alpha(const Vec3& x, cplx alpha) {
    const double r = checked_radius(x);
    if (alpha.imag() < 0.0) {
        throw DomainError("Theta_alpha requires Im(alpha) >= 0");
    }
    return -std::exp(I * alpha * r) / (kFourPi * r);
}

Biquaternion k_alpha(const Vec3& x, cplx alpha) {
    const cplx theta = theta_alpha(x, alpha);
    const double r = norm(x);
    const double r2 = r * r;
    Biquaternion k;
    k.s = alpha * theta;
    for (std::size_t i = 0; i < 3; ++i) {
        k.v[i] = (x[i] / r2 - I * alpha * (x[i] / r)) * theta;
    }
    return k;
}

double radiation_residual(const Vec3& x, cplx alpha) {
    const double r = checked_radius(x);
    const Biquaternion one_plus{1.0, I * (x.x1 / r), I * (x.x2 / r), I * (x.x3 / r)};
    return norm(one_plus * k_alpha(x, alpha));
}

cplx alpha_of_omega(cplx omega, const MediumParams& p) {
    p.require_chiral("alpha_of_omega");
    const double s = p.sqrt_eps_mu();
    const cplx denom = p.beta() * s * omega - 1.0;
    if (std::abs(denom) <= 1e-14 * std::max(1.0, std::abs(p.beta() * s * omega))) {
        throw PoleError("omega is at the pole a = 1/(beta sqrt(eps mu))");
    }
    return s * omega / denom;
}

Biquaternion fourier_F(cplx omega, const Vec3& x, const MediumParams& p) {
    const cplx alpha = alpha_of_omega(omega, p);
    if (alpha.imag() < 0.0) {
        throw DomainError("F(omega, x) requires Im(alpha(omega)) >= 0");
    }
    const double r = checked_radius(x);
    const double s = p.sqrt_eps_mu();
    const cplx b = p.beta() * s * omega - 1.0;
    const cplx c1 = I * s * omega / (b * b);
    const cplx c2 = I / (r * r * b);
    const cplx env = std::exp(I * r * alpha) / (kFourPi * r);
    Biquaternion out = c1 * one_minus_i_xhat(x, r);
    for (std::size_t i = 0; i < 3; ++i) {
        out.v[i] += c2 * x[i];
    }
    return out * env;
}

Biquaternion fourier_F_from_kalpha(cplx omega, const Vec3& x, const MediumParams& p) {
    const cplx alpha = alpha_of_omega(omega, p);
    const cplx b = p.beta() * p.sqrt_eps_mu() * omega - 1.0;
    return k_alpha(x, alpha) * (1.0 / (I * b));
}

KernelFactors kernel_factors(const Vec3& x, const MediumParams& p) {
    p.require_chiral("kernel_factors");
    const double r = checked_radius(x);
    const double beta = p.beta();
    const double s = p.sqrt_eps_mu();
    KernelFactors k;
    k.a = 1.0 / (beta * s);
    k.c = r / (beta * beta * s);
    k.envelope = std::exp(I * (r / beta)) / (kFourPi * r);
    const Biquaternion om = one_minus_i_xhat(x, r);
    k.A = (I / (beta * beta * beta * p.epsilon() * p.mu())) * om;
    Biquaternion inner = (1.0 / beta) * om;
    for (std::size_t i = 0; i < 3; ++i) {
        inner.v[i] += x[i] / (r * r);
    }
    k.B = (I / (beta * s)) * inner;
    return k;
}

Biquaternion fourier_F_factored(cplx omega, const Vec3& x, const MediumParams& p) {
    const KernelFactors k = kernel_factors(x, p);
    const cplx w = omega - k.a;
    if (std::abs(w) <= 1e-14 * std::max(1.0, std::abs(k.a))) {
        throw PoleError("omega is at the pole a = 1/(beta sqrt(eps mu))");
    }
    const cplx phase = k.envelope * std::exp(I * k.c / w);
    return (k.A * (1.0 / (w * w)) + k.B * (1.0 / w)) * phase;
}

Biquaternion fundamental_f(double t, const Vec3& x, const MediumParams& p) {
    p.require_chiral("fundamental_f");
    const double r = checked_radius(x);
    if (t < 0.0) {
        return {};
    }
    const double beta = p.beta();
    const double s = p.sqrt_eps_mu();
    const double quarter = std::sqrt(s); // (eps mu)^{1/4}
    const double z = 2.0 * std::sqrt(t * r) / (std::abs(beta) * quarter);
    const double j0 = bessel_j0(z);
    const double j1 = std::copysign(1.0, beta) * bessel_j1(z); // J1 is odd
    const cplx alpha = 1.0 / beta;
    const cplx theta = theta_alpha(x, alpha);
    Biquaternion out = k_alpha(x, alpha) * j0;
    out += (I * theta / (beta * quarter) * std::sqrt(t / r) * j1) * one_minus_i_xhat(x, r);
    return out * (std::exp(I * (t / (beta * s))) / (beta * s));
}

Biquaternion fundamental_f_factored(double t, const Vec3& x, const MediumParams& p, double y) {
    const KernelFactors k = kernel_factors(x, p);
    if (t < 0.0) {
        return {};
    }
    const double arg = 2.0 * std::sqrt(k.c * t);
    const cplx a_y{k.a, y};
    const cplx prefactor = std::exp(I * a_y * t) * k.envelope;
    return (k.A * (-std::sqrt(t / k.c) * bessel_j1(arg)) + k.B * (I * bessel_j0(arg))) * prefactor;
}

KernelPoint evaluate_kernel(double t, const Vec3& x, const MediumParams& p) {
    return {t, x, fundamental_f(t, x, p)};
}

} // namespace chiralq
