#pragma once

namespace chiralq {

/// Homogeneous chiral medium: permittivity, permeability and the chirality
/// measure beta of the Drude-Born-Fedorov constitutive relations. All
/// quantities are dimensionless; the caller fixes the unit scales.
class MediumParams {
public:
    /// Throws DomainError unless epsilon > 0, mu > 0 and beta is finite.
    MediumParams(double epsilon, double mu, double beta);

    double epsilon() const { return epsilon_; }
    double mu() const { return mu_; }
    double beta() const { return beta_; }
    bool is_chiral() const { return beta_ != 0.0; }

    /// sqrt(epsilon * mu), the inverse wave speed.
    double sqrt_eps_mu() const { return sqrt_eps_mu_; }
    /// sqrt(mu / epsilon).
    double impedance() const { return impedance_; }

    /// a = 1 / (beta sqrt(epsilon mu)), the pole of the frequency-domain kernel.
    /// Throws DomainError for a non-chiral medium.
    double pole() const;

    /// Throws DomainError if beta == 0; `what` names the caller.
    void require_chiral(const char* what) const;

private:
    double epsilon_;
    double mu_;
    double beta_;
    double sqrt_eps_mu_;
    double impedance_;
};

} // namespace chiralq
