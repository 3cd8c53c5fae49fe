#pragma once

#include "chiralq/maxwell_bridge.hpp"

#include <array>
#include <vector>

namespace chiralq {

/// One plane-wave mode Re(amplitude e^{i (k.x - omega t)}) of the potentials.
struct PlaneWaveMode {
    Vec3 k{};
    double omega = 0.0;
    std::array<cplx, 3> psi{}; ///< vector potential amplitude
    cplx phi{};                ///< scalar potential amplitude
};

/// Smooth exact solution of the chiral Maxwell system built from potentials:
///
///   H = rot Psi,  E = -mu dt (Psi + beta rot Psi) + grad phi,
///   rho = eps div E,  j = rot H - eps dt (E + beta rot E).
///
/// The second equation and div H = 0 hold identically, the first and third
/// define the sources, and continuity follows. All derivatives are exact.
class ManufacturedSolution {
public:
    ManufacturedSolution(const MediumParams& p, std::vector<PlaneWaveMode> modes);

    /// A fixed three-mode example with incommensurate wave vectors.
    static ManufacturedSolution standard(const MediumParams& p);

    Vec3 E(double t, const Vec3& x) const;
    Vec3 H(double t, const Vec3& x) const;
    double rho(double t, const Vec3& x) const;
    Vec3 j(double t, const Vec3& x) const;
    double drho_dt(double t, const Vec3& x) const;
    double div_j(double t, const Vec3& x) const;

    AnalyticSource source() const;
    EMField sample_em(const SpacetimeGrid& grid) const;

    /// Complex divergence-free pure vector field sum_m (i k_m x psi_m) e^{i theta_m}.
    Biquaternion divergence_free(double t, const Vec3& x) const;

private:
    struct Amplitudes {
        std::array<cplx, 3> E, H, j;
        cplx rho, drho, divj;
    };
    Vec3 sum(std::array<cplx, 3> Amplitudes::*member, double t, const Vec3& x) const;
    double sum(cplx Amplitudes::*member, double t, const Vec3& x) const;

    std::vector<PlaneWaveMode> modes_;
    std::vector<Amplitudes> amps_;
};

} // namespace chiralq
