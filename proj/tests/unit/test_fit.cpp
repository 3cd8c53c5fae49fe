#include "chiralq/errors.hpp"
#include "chiralq/fit.hpp"

#include <doctest.h>

#include <cmath>

using namespace chiralq;

TEST_CASE("exact power laws") {
    const std::vector<double> h{0.1, 0.05, 0.025, 0.0125};
    for (double order : {1.0, 2.0, 4.0, -2.5}) {
        std::vector<double> e;
        for (double v : h) e.push_back(3.0 * std::pow(v, order));
        const PowerFit f = fit_loglog(h, e);
        CHECK(f.slope == doctest::Approx(order).epsilon(1e-12));
        CHECK(f.intercept == doctest::Approx(std::log(3.0)).epsilon(1e-12));
        CHECK(f.r2 == doctest::Approx(1.0));
        CHECK(observed_order(h, e) == doctest::Approx(order).epsilon(1e-12));
    }
}

TEST_CASE("two points") {
    const PowerFit f = fit_loglog({1.0, 2.0}, {1.0, 4.0});
    CHECK(f.slope == doctest::Approx(2.0));
    CHECK(f.r2 == 1.0);
}

TEST_CASE("noisy data lowers r2") {
    const PowerFit f = fit_loglog({1.0, 2.0, 4.0, 8.0}, {1.0, 5.0, 14.0, 70.0});
    CHECK(f.r2 < 0.999);
    CHECK(f.r2 > 0.9);
}

TEST_CASE("invalid input") {
    CHECK_THROWS_AS(fit_loglog({1.0}, {1.0}), DomainError);
    CHECK_THROWS_AS(fit_loglog({1.0, 2.0}, {1.0}), DomainError);
    CHECK_THROWS_AS(fit_loglog({1.0, 2.0}, {1.0, 0.0}), DomainError);
    CHECK_THROWS_AS(fit_loglog({-1.0, 2.0}, {1.0, 1.0}), DomainError);
    CHECK_THROWS_AS(fit_loglog({2.0, 2.0}, {1.0, 3.0}), DomainError);
}
