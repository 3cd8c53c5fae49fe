#include "chiralq/medium.hpp"

#include "chiralq/errors.hpp"

#include <cmath>
#include <string>

namespace chiralq {

MediumParams::MediumParams(double epsilon, double mu, double beta)
    : epsilon_(epsilon), mu_(mu), beta_(beta) {
    if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
        throw DomainError("epsilon must be positive and finite");
    }
    if (!(mu > 0.0) || !std::isfinite(mu)) {
        throw DomainError("mu must be positive and finite");
    }
    if (!std::isfinite(beta)) {
        throw DomainError("beta must be finite");
    }
    sqrt_eps_mu_ = std::sqrt(epsilon * mu);
    impedance_ = std::sqrt(mu / epsilon);
}

double MediumParams::pole() const {
    require_chiral("pole");
    return 1.0 / (beta_ * sqrt_eps_mu_);
}

void MediumParams::require_chiral(const char* what) const {
    if (beta_ == 0.0) {
        throw DomainError(std::string(what) + " requires a chiral medium (beta != 0)");
    }
}

} // namespace chiralq
