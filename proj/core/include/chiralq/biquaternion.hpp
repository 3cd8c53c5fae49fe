#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <iosfwd>

namespace chiralq {

using cplx = std::complex<double>;

/// Real Euclidean 3-vector. Doubles as a spatial point.
struct Vec3 {
    double x1 = 0.0;
    double x2 = 0.0;
    double x3 = 0.0;

    constexpr double operator[](std::size_t k) const { return k == 0 ? x1 : (k == 1 ? x2 : x3); }
    constexpr double& operator[](std::size_t k) { return k == 0 ? x1 : (k == 1 ? x2 : x3); }

    constexpr Vec3& operator+=(const Vec3& o) { x1 += o.x1; x2 += o.x2; x3 += o.x3; return *this; }
    constexpr Vec3& operator-=(const Vec3& o) { x1 -= o.x1; x2 -= o.x2; x3 -= o.x3; return *this; }
    constexpr Vec3& operator*=(double a) { x1 *= a; x2 *= a; x3 *= a; return *this; }

    friend constexpr Vec3 operator+(Vec3 a, const Vec3& b) { return a += b; }
    friend constexpr Vec3 operator-(Vec3 a, const Vec3& b) { return a -= b; }
    friend constexpr Vec3 operator-(const Vec3& a) { return {-a.x1, -a.x2, -a.x3}; }
    friend constexpr Vec3 operator*(double a, Vec3 v) { return v *= a; }
    friend constexpr Vec3 operator*(Vec3 v, double a) { return v *= a; }
    friend constexpr bool operator==(const Vec3&, const Vec3&) = default;
};

constexpr double dot(const Vec3& a, const Vec3& b) { return a.x1 * b.x1 + a.x2 * b.x2 + a.x3 * b.x3; }
constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.x2 * b.x3 - a.x3 * b.x2, a.x3 * b.x1 - a.x1 * b.x3, a.x1 * b.x2 - a.x2 * b.x1};
}
inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

/// Purely vectorial biquaternion v1*i1 + v2*i2 + v3*i3 with complex components.
struct PureVector {
    std::array<cplx, 3> v{};

    static PureVector from_real(const Vec3& r) { return {{cplx(r.x1), cplx(r.x2), cplx(r.x3)}}; }

    Vec3 real() const { return {v[0].real(), v[1].real(), v[2].real()}; }
    Vec3 imag() const { return {v[0].imag(), v[1].imag(), v[2].imag()}; }

    friend bool operator==(const PureVector&, const PureVector&) = default;
};

/// Quaternion with complex coefficients: s + v1*i1 + v2*i2 + v3*i3.
///
/// The complex unit i commutes with i1, i2, i3; i1*i2 = i3, i2*i3 = i1,
/// i3*i1 = i2 and ik*ik = -1. Multiplication is complex-bilinear (no
/// conjugation) and non-commutative. There is no division: the algebra has
/// zero divisors.
struct Biquaternion {
    cplx s{};
    std::array<cplx, 3> v{};

    constexpr Biquaternion() = default;
    constexpr Biquaternion(cplx scalar) : s(scalar) {}
    constexpr Biquaternion(cplx scalar, cplx v1, cplx v2, cplx v3) : s(scalar), v{v1, v2, v3} {}
    constexpr Biquaternion(cplx scalar, const std::array<cplx, 3>& vec) : s(scalar), v(vec) {}
    constexpr Biquaternion(const PureVector& p) : v(p.v) {}

    /// Real point x embedded as x1*i1 + x2*i2 + x3*i3.
    static Biquaternion from_vector(const Vec3& x) { return {0.0, x.x1, x.x2, x.x3}; }

    static Biquaternion unit(int k) {
        Biquaternion q;
        if (k == 0) {
            q.s = 1.0;
        } else {
            q.v[static_cast<std::size_t>(k - 1)] = 1.0;
        }
        return q;
    }

    Biquaternion& operator+=(const Biquaternion& o) {
        s += o.s;
        v[0] += o.v[0]; v[1] += o.v[1]; v[2] += o.v[2];
        return *this;
    }
    Biquaternion& operator-=(const Biquaternion& o) {
        s -= o.s;
        v[0] -= o.v[0]; v[1] -= o.v[1]; v[2] -= o.v[2];
        return *this;
    }
    Biquaternion& operator*=(cplx a) {
        s *= a;
        v[0] *= a; v[1] *= a; v[2] *= a;
        return *this;
    }
    Biquaternion& operator*=(double a) {
        s *= a;
        v[0] *= a; v[1] *= a; v[2] *= a;
        return *this;
    }

    friend Biquaternion operator+(Biquaternion a, const Biquaternion& b) { return a += b; }
    friend Biquaternion operator-(Biquaternion a, const Biquaternion& b) { return a -= b; }
    friend Biquaternion operator-(Biquaternion a) { return a *= -1.0; }
    friend Biquaternion operator*(cplx a, Biquaternion b) { return b *= a; }
    friend Biquaternion operator*(Biquaternion b, cplx a) { return b *= a; }
    friend Biquaternion operator*(double a, Biquaternion b) { return b *= a; }
    friend Biquaternion operator*(Biquaternion b, double a) { return b *= a; }

    /// Quaternion product: (a.s b.s - <a.v,b.v>, a.s b.v + b.s a.v + a.v x b.v).
    friend Biquaternion operator*(const Biquaternion& a, const Biquaternion& b) {
        Biquaternion r;
        r.s = a.s * b.s - (a.v[0] * b.v[0] + a.v[1] * b.v[1] + a.v[2] * b.v[2]);
        r.v[0] = a.s * b.v[0] + b.s * a.v[0] + (a.v[1] * b.v[2] - a.v[2] * b.v[1]);
        r.v[1] = a.s * b.v[1] + b.s * a.v[1] + (a.v[2] * b.v[0] - a.v[0] * b.v[2]);
        r.v[2] = a.s * b.v[2] + b.s * a.v[2] + (a.v[0] * b.v[1] - a.v[1] * b.v[0]);
        return r;
    }

    friend bool operator==(const Biquaternion&, const Biquaternion&) = default;
};

/// Accumulates a*b into acc without temporaries; used in convolution loops.
inline void fma_product(Biquaternion& acc, const Biquaternion& a, const Biquaternion& b) {
    acc.s += a.s * b.s - (a.v[0] * b.v[0] + a.v[1] * b.v[1] + a.v[2] * b.v[2]);
    acc.v[0] += a.s * b.v[0] + b.s * a.v[0] + (a.v[1] * b.v[2] - a.v[2] * b.v[1]);
    acc.v[1] += a.s * b.v[1] + b.s * a.v[1] + (a.v[2] * b.v[0] - a.v[0] * b.v[2]);
    acc.v[2] += a.s * b.v[2] + b.s * a.v[2] + (a.v[0] * b.v[1] - a.v[1] * b.v[0]);
}

/// Quaternionic conjugate: scalar kept, vector negated.
Biquaternion conj_quaternionic(const Biquaternion& a);

/// Complex conjugate of every coefficient; the quaternion units are untouched.
Biquaternion conj_complex(const Biquaternion& a);

inline cplx scalar_part(const Biquaternion& a) { return a.s; }
inline PureVector vector_part(const Biquaternion& a) { return {a.v}; }

/// Euclidean norm of the eight real components.
double norm(const Biquaternion& a);

/// True when the scalar part is within `tol` of zero.
bool is_pure_vector(const Biquaternion& a, double tol = 0.0);

std::ostream& operator<<(std::ostream& os, const Biquaternion& a);

} // namespace chiralq
