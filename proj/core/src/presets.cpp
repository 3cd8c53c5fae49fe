#include "chiralq/presets.hpp"

#include "chiralq/errors.hpp"

#include <cmath>
#include <numbers>

namespace chiralq {

AnalyticSource gaussian_pulse(const GaussianPulseParams& params) {
    if (!(params.sigma_x > 0.0) || !(params.sigma_t > 0.0)) {
        throw ConfigError("gaussian_pulse: widths must be positive");
    }
    const GaussianPulseParams g = params;
    const auto envelope_t = [g](double t) {
        const double u = (t - g.t0) / g.sigma_t;
        return std::exp(-u * u);
    };
    const auto envelope_t_prime = [g, envelope_t](double t) {
        return -2.0 * (t - g.t0) / (g.sigma_t * g.sigma_t) * envelope_t(t);
    };
    const auto envelope_x = [g](const Vec3& x) {
        const Vec3 d = x - g.center;
        return std::exp(-dot(d, d) / (g.sigma_x * g.sigma_x));
    };
    // -p . grad G / G
    const auto slope = [g](const Vec3& x) { return 2.0 * dot(g.polarization, x - g.center) / (g.sigma_x * g.sigma_x); };

    AnalyticSource src;
    src.rho = [=](double t, const Vec3& x) { return g.amplitude * envelope_t(t) * envelope_x(x) * slope(x); };
    src.drho_dt = [=](double t, const Vec3& x) {
        return g.amplitude * envelope_t_prime(t) * envelope_x(x) * slope(x);
    };
    src.j = [=](double t, const Vec3& x) { return (g.amplitude * envelope_t_prime(t) * envelope_x(x)) * g.polarization; };
    src.div_j = [=](double t, const Vec3& x) {
        return -g.amplitude * envelope_t_prime(t) * envelope_x(x) * slope(x);
    };
    return src;
}

AnalyticSource static_charge(const StaticChargeParams& params) {
    if (!(params.sigma > 0.0)) {
        throw ConfigError("static_charge: sigma must be positive");
    }
    const StaticChargeParams c = params;
    const double norm = c.charge / (std::pow(std::numbers::pi, 1.5) * c.sigma * c.sigma * c.sigma);
    AnalyticSource src;
    src.rho = [c, norm](double, const Vec3& x) {
        const Vec3 d = x - c.center;
        return norm * std::exp(-dot(d, d) / (c.sigma * c.sigma));
    };
    src.drho_dt = [](double, const Vec3&) { return 0.0; };
    src.j = [](double, const Vec3&) { return Vec3{}; };
    src.div_j = [](double, const Vec3&) { return 0.0; };
    return src;
}

Vec3 static_charge_field(const StaticChargeParams& params, double epsilon, const Vec3& x) {
    const Vec3 d = x - params.center;
    const double r = norm(d);
    const double u = r / params.sigma;
    double enclosed = 0.0; // charge fraction inside radius r, divided by r^3
    if (u < 1e-3) {
        // erf(u) - 2u e^{-u^2}/sqrt(pi) = (4 / (3 sqrt(pi))) u^3 (1 - 3u^2/5 + ...)
        enclosed = 4.0 / (3.0 * std::sqrt(std::numbers::pi)) * (1.0 - 0.6 * u * u) /
                   (params.sigma * params.sigma * params.sigma);
    } else {
        enclosed = (std::erf(u) - 2.0 * u * std::exp(-u * u) / std::sqrt(std::numbers::pi)) / (r * r * r);
    }
    return (params.charge / (4.0 * std::numbers::pi * epsilon) * enclosed) * d;
}

} // namespace chiralq
