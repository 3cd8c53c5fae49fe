#include "chiralq/biquaternion.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <sstream>

using namespace chiralq;

namespace {

const cplx I{0.0, 1.0};

double dist(const Biquaternion& a, const Biquaternion& b) { return norm(a - b); }

} // namespace

TEST_CASE("unit table") {
    const auto i1 = Biquaternion::unit(1);
    const auto i2 = Biquaternion::unit(2);
    const auto i3 = Biquaternion::unit(3);
    CHECK(i1 * i2 == i3);
    CHECK(i2 * i3 == i1);
    CHECK(i3 * i1 == i2);
    for (int k = 1; k <= 3; ++k) {
        CHECK(Biquaternion::unit(k) * Biquaternion::unit(k) == Biquaternion(-1.0));
    }
    CHECK(i1 * i2 == -(i2 * i1));
    CHECK(Biquaternion(2.0) * Biquaternion(3.0) == Biquaternion(6.0));
}

TEST_CASE("product agrees with the basis table on random inputs") {
    auto g = oracle::rng();
    for (int n = 0; n < 1000; ++n) {
        const auto a = oracle::random_bq(g);
        const auto b = oracle::random_bq(g);
        CHECK(dist(a * b, oracle::table_product(a, b)) <= 1e-15);
        Biquaternion acc = a;
        fma_product(acc, a, b);
        CHECK(dist(acc, a + oracle::table_product(a, b)) <= 1e-14);
    }
}

TEST_CASE("associativity") {
    auto g = oracle::rng(7);
    double worst = 0.0;
    for (int n = 0; n < 10000; ++n) {
        const auto a = oracle::random_bq(g, 3.0);
        const auto b = oracle::random_bq(g, 3.0);
        const auto c = oracle::random_bq(g, 3.0);
        worst = std::max(worst, dist((a * b) * c, a * (b * c)) / (norm(a) * norm(b) * norm(c)));
    }
    CHECK(worst <= 1e-12);
}

TEST_CASE("quaternionic conjugation") {
    CHECK(conj_quaternionic({1.0, 1.0, 0.0, 0.0}) == Biquaternion(1.0, -1.0, 0.0, 0.0));
    CHECK(conj_quaternionic(Biquaternion{}) == Biquaternion{});
    auto g = oracle::rng(3);
    for (int n = 0; n < 100; ++n) {
        const Biquaternion a(oracle::uniform(g, -1, 1), oracle::uniform(g, -1, 1), oracle::uniform(g, -1, 1),
                             oracle::uniform(g, -1, 1));
        const double n2 = norm(a) * norm(a);
        CHECK(dist(a * conj_quaternionic(a), Biquaternion(n2)) <= 1e-15);
    }
}

TEST_CASE("complex conjugation") {
    CHECK(conj_complex(Biquaternion(I)) == Biquaternion(-I));
    CHECK(conj_complex({1.0, I, 0.0, 0.0}) == Biquaternion(1.0, -I, 0.0, 0.0));
    auto g = oracle::rng(4);
    for (int n = 0; n < 100; ++n) {
        const auto a = oracle::random_bq(g);
        CHECK(conj_complex(conj_complex(a)) == a);
        // the units are untouched, so conjugation is multiplicative
        const auto b = oracle::random_bq(g);
        CHECK(dist(conj_complex(a * b), conj_complex(a) * conj_complex(b)) <= 1e-15);
    }
}

TEST_CASE("projections") {
    const Biquaternion a(5.0, 0.0, 1.0, 0.0);
    CHECK(scalar_part(a) == cplx(5.0));
    CHECK(vector_part(a) == PureVector{{0.0, 1.0, 0.0}});
    CHECK(scalar_part(Biquaternion(PureVector{{1.0, I, 2.0}})) == cplx(0.0));
    CHECK(is_pure_vector(Biquaternion(PureVector{{1.0, I, 2.0}})));
    CHECK_FALSE(is_pure_vector(a));
    CHECK(is_pure_vector(Biquaternion(1e-13), 1e-12));
    auto g = oracle::rng(5);
    for (int n = 0; n < 100; ++n) {
        const auto b = oracle::random_bq(g);
        CHECK(Biquaternion(scalar_part(b)) + Biquaternion(vector_part(b)) == b);
    }
}

TEST_CASE("square of a real vector") {
    auto g = oracle::rng(6);
    for (int n = 0; n < 1000; ++n) {
        const Vec3 x = oracle::random_vec(g, -10.0, 10.0);
        const auto q = Biquaternion::from_vector(x);
        const double r2 = dot(x, x);
        CHECK(dist(q * q, Biquaternion(-r2)) <= 1e-14 * r2);
    }
}

TEST_CASE("radiation factor annihilates the leading term") {
    auto g = oracle::rng(8);
    for (int n = 0; n < 1000; ++n) {
        Vec3 x = oracle::random_vec(g, -1.0, 1.0);
        x = (1.0 / norm(x)) * x;
        const cplx alpha = oracle::random_cplx(g, 5.0);
        const Biquaternion xh = Biquaternion::from_vector(x);
        const Biquaternion left = Biquaternion(1.0) + I * xh;
        const Biquaternion right = Biquaternion(alpha) - I * alpha * xh;
        CHECK(norm(left * right) <= 1e-14 * std::abs(alpha) + 1e-300);
    }
}

TEST_CASE("norm and printing") {
    CHECK(norm(Biquaternion(cplx(3.0, 4.0))) == doctest::Approx(5.0));
    CHECK(norm(Biquaternion(1.0, 1.0, I, cplx(1.0, 1.0))) == doctest::Approx(std::sqrt(5.0)));
    std::ostringstream os;
    os << Biquaternion::unit(2);
    CHECK_FALSE(os.str().empty());
}
