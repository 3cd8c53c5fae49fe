#include "chiralq/oracle.hpp"

#include "chiralq/errors.hpp"
#include "chiralq/fundamental.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <string>

namespace chiralq {
namespace {

constexpr cplx I{0.0, 1.0};

GaussLegendre compute_gauss_legendre(int n) {
    GaussLegendre g;
    g.nodes.resize(static_cast<std::size_t>(n));
    g.weights.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = pk;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) {
                break;
            }
        }
        g.nodes[static_cast<std::size_t>(i)] = x;
        g.weights[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return g;
}

// Panel edges for u = omega - Re(a) in [0, umax]; mirrored for the negative side.
std::vector<double> panel_edges(double umax, double c, double y, double t) {
    std::vector<double> edges{0.0};
    double u = 0.0;
    while (u < umax) {
        const double rate = c / (u * u + y * y) + std::abs(t);
        double width = 2.0 * std::numbers::pi / rate;
        width = std::min(width, 0.5 * std::max(u, y));
        u = std::min(umax, u + width);
        edges.push_back(u);
    }
    return edges;
}

} // namespace

const GaussLegendre& gauss_legendre(int n) {
    static std::mutex mutex;
    static std::map<int, GaussLegendre> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end()) {
        it = cache.emplace(n, compute_gauss_legendre(n)).first;
    }
    return it->second;
}

void ContourSpec::validate() const {
    if (!(y > 0.0) || !std::isfinite(y)) {
        throw DomainError("contour offset y must be positive");
    }
    if (nodes_per_panel < 1) {
        throw DomainError("contour needs at least one node per panel");
    }
    if (!(omega_max >= 0.0)) {
        throw DomainError("omega_max must be nonnegative");
    }
}

Biquaternion inverse_fourier_f(double t, const Vec3& x, const MediumParams& p, const ContourSpec& contour,
                               ContourStats* stats) {
    contour.validate();
    const KernelFactors k = kernel_factors(x, p);
    const double y = contour.y;
    const cplx a_y{k.a, y};
    const double umax =
        contour.omega_max > 0.0 ? contour.omega_max : 50.0 * std::max(std::abs(k.a), k.c / y);

    const auto edges = panel_edges(umax, k.c, y, t);
    const auto& gl = gauss_legendre(contour.nodes_per_panel);
    const double first_spacing = (edges[1] - edges[0]) / contour.nodes_per_panel;
    if (first_spacing > y / 3.0) {
        throw ResolutionError("contour node spacing " + format_value(first_spacing) +
                              " does not resolve the pole at distance y = " + format_value(y));
    }

    // Remainder integrand: F(omega - i y) - B Env / (omega - a_y).
    const Biquaternion tail = k.B * k.envelope;
    auto remainder = [&](double u) {
        const double omega = k.a + u;
        const cplx z{omega, -y};
        return fourier_F(z, x, p) - tail * (1.0 / (omega - a_y));
    };

    Biquaternion sum;
    for (int side : {-1, 1}) {
        for (std::size_t e = 0; e + 1 < edges.size(); ++e) {
            const double lo = edges[e];
            const double hi = edges[e + 1];
            const double half = 0.5 * (hi - lo);
            const double mid = 0.5 * (hi + lo);
            Biquaternion panel;
            for (std::size_t q = 0; q < gl.nodes.size(); ++q) {
                const double u = side * (mid + half * gl.nodes[q]);
                panel += remainder(u) * (gl.weights[q] * std::exp(I * ((k.a + u) * t)));
            }
            sum += panel * half;
        }
    }
    sum *= 1.0 / (2.0 * std::numbers::pi);
    if (t >= 0.0) {
        // (1/2pi) int e^{i omega t} / (omega - a_y) d omega = i e^{i a_y t} for t >= 0.
        sum += tail * (I * std::exp(I * a_y * t));
    }
    if (stats != nullptr) {
        stats->omega_max = umax;
        stats->panels = 2 * (edges.size() - 1);
        stats->nodes = stats->panels * gl.nodes.size();
        stats->pole_spacing = first_spacing;
    }
    return sum;
}

Biquaternion richardson_halving(const std::vector<Biquaternion>& samples) {
    if (samples.size() < 2) {
        throw DomainError("Richardson extrapolation needs at least two samples");
    }
    std::vector<Biquaternion> row = samples;
    double factor = 2.0;
    for (std::size_t level = 1; level < samples.size(); ++level) {
        std::vector<Biquaternion> next;
        for (std::size_t i = 0; i + 1 < row.size(); ++i) {
            next.push_back((row[i + 1] * factor - row[i]) * (1.0 / (factor - 1.0)));
        }
        row = std::move(next);
        factor *= 2.0;
    }
    return row.front();
}

Biquaternion inverse_fourier_f_extrapolated(double t, const Vec3& x, const MediumParams& p,
                                            const ContourSpec& contour, int levels) {
    if (levels < 2) {
        throw DomainError("extrapolation needs at least two levels");
    }
    std::vector<Biquaternion> samples;
    ContourSpec c = contour;
    for (int l = 0; l < levels; ++l) {
        samples.push_back(inverse_fourier_f(t, x, p, c));
        c.y *= 0.5;
    }
    return richardson_halving(samples);
}

cplx ik_series(int k, double t, double c, cplx a_y, int n_terms) {
    if (k != 1 && k != 2) {
        throw DomainError("ik_series: k must be 1 or 2");
    }
    if (!(c >= 0.0)) {
        throw DomainError("ik_series: c must be nonnegative");
    }
    if (n_terms < 1) {
        throw DomainError("ik_series: need at least one term");
    }
    if (t < 0.0) {
        return 0.0;
    }
    const double w = -c * t;
    double term = 1.0; // j = 0 for both k
    double sum = term;
    for (int j = 1; j < n_terms; ++j) {
        term *= w / (static_cast<double>(j) * static_cast<double>(j + k - 1));
        sum += term;
    }
    if (std::abs(term) > 1e-17 * std::abs(sum) && term != 0.0) {
        throw TruncationError("ik_series did not converge in " + std::to_string(n_terms) + " terms",
                              std::abs(term));
    }
    const cplx phase = std::exp(I * a_y * t);
    return k == 1 ? I * phase * sum : -phase * t * sum;
}

cplx residue_ikj(int k, int j, double t, cplx a_y) {
    const int n = j + k;
    if (n < 1) {
        throw DomainError("residue_ikj requires j + k >= 1");
    }
    if (t < 0.0) {
        return 0.0;
    }
    cplx power = 1.0;
    double factorial = 1.0;
    for (int m = 1; m <= n - 1; ++m) {
        power *= I * t;
        factorial *= m;
    }
    return 2.0 * std::numbers::pi * I * power / factorial * std::exp(I * a_y * t);
}

} // namespace chiralq
