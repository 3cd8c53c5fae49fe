#pragma once

namespace chiralq {

enum class BesselMethod {
    PowerSeries,        ///< z <= kSeriesLimit
    BackwardRecurrence, ///< Miller recurrence, kSeriesLimit < z < kAsymptoticLimit
    Asymptotic,         ///< Hankel expansion, z >= kAsymptoticLimit
};

struct BesselResult {
    double value = 0.0;
    int terms_used = 0; ///< series terms, recurrence start order, or asymptotic terms
    BesselMethod method = BesselMethod::PowerSeries;
};

inline constexpr double kSeriesLimit = 8.0;
inline constexpr double kAsymptoticLimit = 25.0;

/// J0 and J1 of a real nonnegative argument, accurate to about 1e-15 absolute
/// on [0, 100]. Negative or non-finite arguments throw DomainError.
BesselResult bessel_j0_detailed(double z);
BesselResult bessel_j1_detailed(double z);

/// J0 and J1 together; one recurrence pass serves both on the middle range.
struct BesselPair {
    double j0 = 0.0;
    double j1 = 0.0;
};
BesselPair bessel_j01(double z);

inline double bessel_j0(double z) { return bessel_j0_detailed(z).value; }
inline double bessel_j1(double z) { return bessel_j1_detailed(z).value; }

} // namespace chiralq
