#include "chiralq/manufactured.hpp"

#include <memory>
#include <utility>

namespace chiralq {
namespace {

constexpr cplx I{0.0, 1.0};
using CVec = std::array<cplx, 3>;

CVec cross_k(const Vec3& k, const CVec& a) {
    // i k x a
    return {I * (k.x2 * a[2] - k.x3 * a[1]), I * (k.x3 * a[0] - k.x1 * a[2]), I * (k.x1 * a[1] - k.x2 * a[0])};
}
cplx dot_k(const Vec3& k, const CVec& a) { return I * (k.x1 * a[0] + k.x2 * a[1] + k.x3 * a[2]); }
CVec add(const CVec& a, const CVec& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
CVec scale(cplx s, const CVec& a) { return {s * a[0], s * a[1], s * a[2]}; }

cplx phase(const PlaneWaveMode& m, double t, const Vec3& x) { return std::exp(I * (dot(m.k, x) - m.omega * t)); }

} // namespace

ManufacturedSolution::ManufacturedSolution(const MediumParams& p, std::vector<PlaneWaveMode> modes)
    : modes_(std::move(modes)) {
    const double eps = p.epsilon();
    const double mu = p.mu();
    const double beta = p.beta();
    for (const auto& m : modes_) {
        const cplx dt = -I * m.omega;
        Amplitudes a;
        a.H = cross_k(m.k, m.psi);
        a.E = add(scale(-mu * dt, add(m.psi, scale(beta, a.H))), {I * m.k.x1 * m.phi, I * m.k.x2 * m.phi, I * m.k.x3 * m.phi});
        a.rho = eps * dot_k(m.k, a.E);
        a.j = add(cross_k(m.k, a.H), scale(-eps * dt, add(a.E, scale(beta, cross_k(m.k, a.E)))));
        a.drho = dt * a.rho;
        a.divj = dot_k(m.k, a.j);
        amps_.push_back(a);
    }
}

ManufacturedSolution ManufacturedSolution::standard(const MediumParams& p) {
    std::vector<PlaneWaveMode> modes{
        {{1.3, -0.7, 0.9}, 1.1, {cplx(0.4, 0.1), cplx(-0.3, 0.2), cplx(0.25, -0.15)}, cplx(0.3, -0.2)},
        {{-0.6, 1.7, 0.4}, -0.8, {cplx(-0.2, 0.35), cplx(0.1, 0.05), cplx(0.3, 0.2)}, cplx(-0.1, 0.25)},
        {{0.5, 0.8, -1.9}, 1.6, {cplx(0.15, -0.25), cplx(0.35, 0.1), cplx(-0.05, 0.3)}, cplx(0.2, 0.1)},
    };
    return ManufacturedSolution(p, std::move(modes));
}

Vec3 ManufacturedSolution::sum(std::array<cplx, 3> Amplitudes::*member, double t, const Vec3& x) const {
    Vec3 out;
    for (std::size_t n = 0; n < modes_.size(); ++n) {
        const cplx e = phase(modes_[n], t, x);
        for (std::size_t c = 0; c < 3; ++c) {
            out[c] += ((amps_[n].*member)[c] * e).real();
        }
    }
    return out;
}

double ManufacturedSolution::sum(cplx Amplitudes::*member, double t, const Vec3& x) const {
    double out = 0.0;
    for (std::size_t n = 0; n < modes_.size(); ++n) {
        out += (amps_[n].*member * phase(modes_[n], t, x)).real();
    }
    return out;
}

Vec3 ManufacturedSolution::E(double t, const Vec3& x) const { return sum(&Amplitudes::E, t, x); }
Vec3 ManufacturedSolution::H(double t, const Vec3& x) const { return sum(&Amplitudes::H, t, x); }
Vec3 ManufacturedSolution::j(double t, const Vec3& x) const { return sum(&Amplitudes::j, t, x); }
double ManufacturedSolution::rho(double t, const Vec3& x) const { return sum(&Amplitudes::rho, t, x); }
double ManufacturedSolution::drho_dt(double t, const Vec3& x) const { return sum(&Amplitudes::drho, t, x); }
double ManufacturedSolution::div_j(double t, const Vec3& x) const { return sum(&Amplitudes::divj, t, x); }

AnalyticSource ManufacturedSolution::source() const {
    // The source owns a copy, so it may outlive this object.
    const auto self = std::make_shared<const ManufacturedSolution>(*this);
    AnalyticSource src;
    src.rho = [self](double t, const Vec3& x) { return self->rho(t, x); };
    src.j = [self](double t, const Vec3& x) { return self->j(t, x); };
    src.drho_dt = [self](double t, const Vec3& x) { return self->drho_dt(t, x); };
    src.div_j = [self](double t, const Vec3& x) { return self->div_j(t, x); };
    return src;
}

EMField ManufacturedSolution::sample_em(const SpacetimeGrid& grid) const {
    return {sample(grid, [this](double t, const Vec3& x) { return E(t, x); }),
            sample(grid, [this](double t, const Vec3& x) { return H(t, x); })};
}

Biquaternion ManufacturedSolution::divergence_free(double t, const Vec3& x) const {
    Biquaternion out;
    for (const auto& m : modes_) {
        const CVec u = cross_k(m.k, m.psi);
        const cplx e = phase(m, t, x);
        for (std::size_t c = 0; c < 3; ++c) {
            out.v[c] += u[c] * e;
        }
    }
    return out;
}

} // namespace chiralq
