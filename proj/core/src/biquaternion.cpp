#include "chiralq/biquaternion.hpp"

#include <ostream>

namespace chiralq {

Biquaternion conj_quaternionic(const Biquaternion& a) {
    return {a.s, -a.v[0], -a.v[1], -a.v[2]};
}

Biquaternion conj_complex(const Biquaternion& a) {
    return {std::conj(a.s), std::conj(a.v[0]), std::conj(a.v[1]), std::conj(a.v[2])};
}

double norm(const Biquaternion& a) {
    return std::sqrt(std::norm(a.s) + std::norm(a.v[0]) + std::norm(a.v[1]) + std::norm(a.v[2]));
}

bool is_pure_vector(const Biquaternion& a, double tol) {
    return std::abs(a.s) <= tol;
}

std::ostream& operator<<(std::ostream& os, const Biquaternion& a) {
    return os << '(' << a.s << "; " << a.v[0] << ", " << a.v[1] << ", " << a.v[2] << ')';
}

} // namespace chiralq
