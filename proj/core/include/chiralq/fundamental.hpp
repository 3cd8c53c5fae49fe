#pragma once

#include "chiralq/biquaternion.hpp"
#include "chiralq/medium.hpp"

namespace chiralq {

/// Theta_alpha(x) = -exp(i alpha |x|) / (4 pi |x|), the fundamental solution
/// of the Helmholtz operator Delta + alpha^2.
///
/// Requires x != 0 (SingularityError) and Im(alpha) >= 0 (DomainError).
cplx theta_alpha(const Vec3& x, cplx alpha);

/// Fundamental solution of D + alpha:
/// K_alpha(x) = -grad Theta_alpha + alpha Theta_alpha
///            = (alpha + x/|x|^2 - i alpha x/|x|) Theta_alpha(x).
Biquaternion k_alpha(const Vec3& x, cplx alpha);

/// || (1 + i x/|x|) K_alpha(x) ||, the quaternionic radiation-condition residual.
double radiation_residual(const Vec3& x, cplx alpha);

/// alpha(omega) = sqrt(eps mu) omega / (beta sqrt(eps mu) omega - 1).
/// Throws PoleError at omega = a and DomainError for beta == 0.
cplx alpha_of_omega(cplx omega, const MediumParams& p);

/// Time-Fourier transform F(omega, x) of the fundamental solution, from the
/// explicit bracketed expression in omega. Requires Im(alpha(omega)) >= 0,
/// which holds on the real axis and below it.
Biquaternion fourier_F(cplx omega, const Vec3& x, const MediumParams& p);

/// The same quantity as K_alpha(x) / (i (beta sqrt(eps mu) omega - 1)).
Biquaternion fourier_F_from_kalpha(cplx omega, const Vec3& x, const MediumParams& p);

/// Factors of F(omega, x) = (A/(omega-a)^2 + B/(omega-a)) Env exp(i c/(omega-a)).
struct KernelFactors {
    double a = 0.0;        ///< 1 / (beta sqrt(eps mu))
    double c = 0.0;        ///< |x| / (beta^2 sqrt(eps mu))
    cplx envelope;         ///< exp(i |x| / beta) / (4 pi |x|)
    Biquaternion A;        ///< i/(beta^3 eps mu) (1 - i x/|x|)
    Biquaternion B;        ///< i/(beta sqrt(eps mu)) ((1 - i x/|x|)/beta + x/|x|^2)
};

KernelFactors kernel_factors(const Vec3& x, const MediumParams& p);

/// F(omega, x) evaluated through kernel_factors.
Biquaternion fourier_F_factored(cplx omega, const Vec3& x, const MediumParams& p);

/// Causal fundamental solution of M in closed form:
///
///   f(t,x) = H(t) e^{i t a} / (beta sqrt(eps mu)) * [ K_{1/beta}(x) J0(z)
///            + i Theta_{1/beta}(x) / (beta (eps mu)^{1/4}) (1 - i x/|x|) sqrt(t/|x|) J1(z) ],
///   z = 2 sqrt(t |x|) / (beta (eps mu)^{1/4}),
///
/// with H(0) = 1. Returns exactly zero for t < 0. Negative beta is handled
/// through the parity of J0 and J1.
Biquaternion fundamental_f(double t, const Vec3& x, const MediumParams& p);

/// The same kernel written through the factors,
///   H(t) e^{i a_y t} Env(x) ( -A(x) sqrt(t/c) J1(2 sqrt(c t)) + i B(x) J0(2 sqrt(c t)) ),
/// with a_y = a + i y. y = 0 reproduces fundamental_f; y > 0 gives the
/// regularized inverse transform at finite y.
Biquaternion fundamental_f_factored(double t, const Vec3& x, const MediumParams& p, double y = 0.0);

/// One tabulated kernel sample.
struct KernelPoint {
    double t = 0.0;
    Vec3 x{};
    Biquaternion value;
};

KernelPoint evaluate_kernel(double t, const Vec3& x, const MediumParams& p);

} // namespace chiralq
