#include "chiralq/bessel.hpp"

#include "chiralq/errors.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace chiralq {
namespace {

constexpr double kTermTolerance = 1e-17;

void check_argument(double z) {
    if (!std::isfinite(z) || z < 0.0) {
        throw DomainError("Bessel argument must be finite and nonnegative, got " + format_value(z));
    }
}

// sum_j (-z^2/4)^j / (j! (j+order)!) scaled by (z/2)^order, order in {0, 1}.
BesselResult power_series(double z, int order) {
    const double w = -0.25 * z * z;
    double term = order == 0 ? 1.0 : 0.5 * z;
    double sum = term;
    int j = 0;
    while (std::abs(term) > kTermTolerance * std::abs(sum)) {
        ++j;
        term *= w / (static_cast<double>(j) * static_cast<double>(j + order));
        sum += term;
        if (j > 200) {
            break;
        }
    }
    return {sum, j + 1, BesselMethod::PowerSeries};
}

// Miller's algorithm: downward recurrence from a high order, normalised with
// J0 + 2 sum_k J_2k = 1.
BesselPair recurrence_pair(double z, int& start_order) {
    int start = static_cast<int>(z + 30.0 + 10.0 * std::cbrt(z));
    start += start % 2;
    double next = 0.0;  // J_{n+1}
    double cur = 1e-30; // J_n
    double j0 = 0.0;
    double j1 = 0.0;
    double norm = 0.0;
    for (int n = start; n >= 1; --n) {
        const double prev = 2.0 * n / z * cur - next; // J_{n-1}
        next = cur;
        cur = prev;
        if (n - 1 == 1) {
            j1 = cur;
        }
        if ((n - 1) % 2 == 0 && n - 1 > 0) {
            norm += 2.0 * cur;
        }
        if (std::abs(cur) > 1e250) {
            next *= 1e-250;
            cur *= 1e-250;
            j1 *= 1e-250;
            norm *= 1e-250;
        }
    }
    j0 = cur;
    norm += j0;
    start_order = start;
    return {j0 / norm, j1 / norm};
}

BesselResult backward_recurrence(double z, int order) {
    int start = 0;
    const BesselPair pair = recurrence_pair(z, start);
    return {order == 0 ? pair.j0 : pair.j1, start, BesselMethod::BackwardRecurrence};
}

// Hankel expansion, summed until terms drop below tolerance or stop shrinking.
BesselResult hankel(double z, int order) {
    const double mu = 4.0 * order * order;
    const double eightz = 8.0 * z;
    double p = 1.0;
    double q = 0.0;
    double term = 1.0;
    double last = std::numeric_limits<double>::infinity();
    int k = 1;
    for (; k < 60; ++k) {
        const double odd = 2.0 * k - 1.0;
        const double t = term * (mu - odd * odd) / (k * eightz);
        if (std::abs(t) >= last) {
            break;
        }
        last = std::abs(t);
        term = t;
        // a_k / z^k enters q with sign (-1)^((k-1)/2) for odd k, p with (-1)^(k/2) for even k.
        switch (k % 4) {
        case 1: q += term; break;
        case 2: p -= term; break;
        case 3: q -= term; break;
        default: p += term; break;
        }
        if (last < kTermTolerance) {
            break;
        }
    }
    const double chi = z - (0.5 * order + 0.25) * std::numbers::pi;
    const double amp = std::sqrt(2.0 / (std::numbers::pi * z));
    return {amp * (p * std::cos(chi) - q * std::sin(chi)), k, BesselMethod::Asymptotic};
}

BesselResult evaluate(double z, int order) {
    check_argument(z);
    if (z <= kSeriesLimit) {
        return power_series(z, order);
    }
    if (z < kAsymptoticLimit) {
        return backward_recurrence(z, order);
    }
    return hankel(z, order);
}

} // namespace

BesselResult bessel_j0_detailed(double z) { return evaluate(z, 0); }

BesselPair bessel_j01(double z) {
    check_argument(z);
    if (z > kSeriesLimit && z < kAsymptoticLimit) {
        int start = 0;
        return recurrence_pair(z, start);
    }
    return {evaluate(z, 0).value, evaluate(z, 1).value};
}

BesselResult bessel_j1_detailed(double z) { return evaluate(z, 1); }

} // namespace chiralq
