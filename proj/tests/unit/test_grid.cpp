#include "chiralq/grid.hpp"

#include <doctest.h>

using namespace chiralq;

namespace {

SpacetimeGrid small_grid() {
    SpacetimeGrid g;
    g.t0 = 0.5;
    g.x0 = {-1.0, 0.0, 2.0};
    g.dt = 0.1;
    g.dx = {0.2, 0.25, 0.5};
    g.n = {3, 4, 5, 6};
    return g;
}

} // namespace

TEST_CASE("addressing is bijective") {
    const auto g = small_grid();
    REQUIRE(g.size() == 360);
    std::size_t k = 0;
    for (std::size_t it = 0; it < 3; ++it)
        for (std::size_t ix = 0; ix < 4; ++ix)
            for (std::size_t iy = 0; iy < 5; ++iy)
                for (std::size_t iz = 0; iz < 6; ++iz) {
                    CHECK(g.index(it, ix, iy, iz) == k);
                    CHECK(g.unravel(k) == std::array<std::size_t, 4>{it, ix, iy, iz});
                    ++k;
                }
    CHECK(g.stride(0) == 120);
    CHECK(g.stride(3) == 1);
    CHECK(g.time(2) == doctest::Approx(0.7));
    const Vec3 x = g.point(1, 2, 3);
    CHECK(x.x1 == doctest::Approx(-0.8));
    CHECK(x.x2 == 0.5);
    CHECK(x.x3 == 3.5);
}

TEST_CASE("validation") {
    auto g = small_grid();
    CHECK_NOTHROW(g.validate(3));
    CHECK_THROWS_AS(g.validate(4), DimensionError);
    g.dt = 0.0;
    CHECK_THROWS_AS(g.validate(), DimensionError);
    g = small_grid();
    g.dx.x2 = -0.1;
    CHECK_THROWS_AS(g.validate(), DimensionError);
}

TEST_CASE("shrink, offset and crop") {
    const auto g = small_grid();
    const auto s = g.shrink(1);
    CHECK(s.n == std::array<std::size_t, 4>{1, 2, 3, 4});
    CHECK(s.t0 == doctest::Approx(0.6));
    CHECK(g.offset_of(s) == std::array<std::size_t, 4>{1, 1, 1, 1});
    CHECK_THROWS_AS(g.shrink(2), DimensionError);

    auto bad = s;
    bad.dt = 0.2;
    CHECK_THROWS_AS(g.offset_of(bad), DimensionError);
    bad = s;
    bad.x0.x1 += 0.05;
    CHECK_THROWS_AS(g.offset_of(bad), DimensionError);

    const auto f = sample(g, [](double t, const Vec3& x) { return t + 10.0 * x.x1 + 100.0 * x.x2 + 1000.0 * x.x3; });
    const auto c = crop(f, s);
    for (std::size_t k = 0; k < c.values.size(); ++k) {
        const auto i = s.unravel(k);
        const Vec3 x = s.point(i[1], i[2], i[3]);
        CHECK(c.values[k] == doctest::Approx(s.time(i[0]) + 10.0 * x.x1 + 100.0 * x.x2 + 1000.0 * x.x3));
    }
}

TEST_CASE("covering grid") {
    const auto g = SpacetimeGrid::covering(0.0, 1.0, {-1.0, -0.5, 0.0}, {1.0, 0.5, 0.25}, 0.25, {0.5, 0.25, 0.125});
    CHECK(g.n == std::array<std::size_t, 4>{5, 5, 5, 3});
    CHECK(g.time(4) == doctest::Approx(1.0));
    CHECK(g.point(4, 4, 2) == Vec3{1.0, 0.5, 0.25});
}

TEST_CASE("norms") {
    SpacetimeGrid g;
    g.dt = 0.5;
    g.dx = {0.5, 0.5, 0.5};
    g.n = {2, 1, 1, 1};
    ScalarField f(g);
    f.values = {3.0, -4.0};
    const auto n = norms(f);
    CHECK(n.max == 4.0);
    CHECK(n.l2 == doctest::Approx(std::sqrt(25.0 * 0.0625)));
}
