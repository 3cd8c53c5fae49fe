#pragma once

#include "chiralq/maxwell_bridge.hpp"

namespace chiralq {

/// Source generated by the polarization P = A g(t) G(x) p, with
/// g = exp(-((t - t0)/sigma_t)^2) and G = exp(-|x - center|^2 / sigma_x^2):
/// rho = -div P and j = dt P, so continuity holds identically.
struct GaussianPulseParams {
    double amplitude = 1.0;
    double sigma_x = 0.2;
    double sigma_t = 0.2;
    double t0 = 1.2;
    Vec3 center{};
    Vec3 polarization{0.0, 0.0, 1.0};
};

AnalyticSource gaussian_pulse(const GaussianPulseParams& params);

/// Time-independent Gaussian charge of total charge Q and no current.
struct StaticChargeParams {
    double charge = 1.0;
    double sigma = 0.2;
    Vec3 center{};
};

AnalyticSource static_charge(const StaticChargeParams& params);

/// Electrostatic field of static_charge in a medium of permittivity eps:
/// E = Q / (4 pi eps) (erf(u) - 2 u e^{-u^2} / sqrt(pi)) x / |x|^3, u = |x| / sigma.
Vec3 static_charge_field(const StaticChargeParams& params, double epsilon, const Vec3& x);

} // namespace chiralq
