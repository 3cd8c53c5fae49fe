#pragma once

#include "chiralq/biquaternion.hpp"
#include "chiralq/medium.hpp"

#include <cstddef>
#include <vector>

namespace chiralq {

/// Regularized inverse-Fourier contour omega - i y.
struct ContourSpec {
    double y = 0.05;          ///< regularization offset, > 0
    double omega_max = 0.0;   ///< half-width around Re(a); 0 selects 50 max(|a|, c(x)/y)
    int nodes_per_panel = 16; ///< Gauss-Legendre nodes per panel

    void validate() const; ///< DomainError on y <= 0 or nodes_per_panel < 1
};

/// Diagnostics of one quadrature run.
struct ContourStats {
    double omega_max = 0.0;
    std::size_t panels = 0;
    std::size_t nodes = 0;
    double pole_spacing = 0.0; ///< node spacing next to omega = Re(a)
};

/// Numerical value of (1/2pi) int F(omega - i y, x) e^{i omega t} d omega.
///
/// F is evaluated through fourier_F, the explicit omega-form. The slowly
/// decaying part B Env / (omega - a_y) is integrated analytically and the
/// remainder, which decays like omega^-2, by composite Gauss-Legendre panels
/// symmetric about Re(a): panel width follows the local oscillation rate
/// c/|omega - a_y|^2 + |t| (one radian period per panel) and is capped by
/// half the distance to the pole.
///
/// Throws ResolutionError if the node spacing next to the pole exceeds y/3.
Biquaternion inverse_fourier_f(double t, const Vec3& x, const MediumParams& p, const ContourSpec& contour,
                               ContourStats* stats = nullptr);

/// Richardson extrapolation to y -> 0 from inverse_fourier_f at
/// y, y/2, ..., y/2^(levels-1) (levels >= 2), assuming an expansion in powers of y.
Biquaternion inverse_fourier_f_extrapolated(double t, const Vec3& x, const MediumParams& p,
                                            const ContourSpec& contour, int levels = 3);

/// Polynomial Richardson extrapolation to h -> 0 of samples taken at h, h/2, h/4, ...
Biquaternion richardson_halving(const std::vector<Biquaternion>& samples);

/// Truncated series for I_k, k in {1, 2}:
///   I_1 = i H(t) e^{i a_y t} sum_j (-c t)^j / (j! j!),
///   I_2 = -H(t) e^{i a_y t} t sum_j (-c t)^j / (j! (j+1)!).
/// Throws TruncationError if the last summed term exceeds 1e-17 of the sum
/// and DomainError for k outside {1, 2} or c < 0.
cplx ik_series(int k, double t, double c, cplx a_y, int n_terms);

/// I_{k,j}(t) = int e^{i omega t} / (omega - a_y)^{j+k} d omega
///            = 2 pi i H(t) (i t)^{j+k-1} e^{i a_y t} / (j+k-1)!
/// Throws DomainError unless j + k >= 1.
cplx residue_ikj(int k, int j, double t, cplx a_y);

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendre {
    std::vector<double> nodes;
    std::vector<double> weights;
};
const GaussLegendre& gauss_legendre(int n);

} // namespace chiralq
