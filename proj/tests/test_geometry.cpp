#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "uavcic/geometry.hpp"

using namespace uavcic;

namespace {
constexpr double kSqrt3 = 1.7320508075688772;
}

TEST_CASE("zero tiers yields the single center site") {
    const Layout layout = hex_layout(800.0, 0);
    REQUIRE(layout.sites.size() == 1);
    CHECK(layout.helper_count == 0);
    CHECK(layout.sites[0].position.x == 0.0);
    CHECK(layout.sites[0].position.y == 0.0);
    CHECK(layout.sites[0].position.z == 25.0);
}

TEST_CASE("one tier yields 7 sites at the inter-site distance") {
    const Layout layout = hex_layout(800.0, 1);
    REQUIRE(layout.sites.size() == 7);
    CHECK(layout.helper_count == 6);
    for (int i = 1; i <= 6; ++i) {
        const auto& p = layout.sites[i].position;
        CHECK(std::hypot(p.x, p.y) ==
              doctest::Approx(kSqrt3 * 800.0).epsilon(1e-12));  // 1385.6406...
    }
    // Ring ordering: counterclockwise, first neighbor of a flat-top grid sits
    // at 30 degrees.
    for (int i = 1; i <= 6; ++i) {
        const auto& p = layout.sites[i].position;
        double ang = std::atan2(p.y, p.x) * 180.0 / M_PI;
        if (ang < 0.0) {
            ang += 360.0;
        }
        CHECK(ang == doctest::Approx(30.0 + 60.0 * (i - 1)).epsilon(1e-9));
    }
}

TEST_CASE("two tiers yields 19 sites") {
    const Layout layout = hex_layout(800.0, 2);
    CHECK(layout.sites.size() == 19);
    CHECK(layout.helper_count == 18);
}

TEST_CASE("adjacent sites are exactly sqrt(3) * radius apart") {
    const double radius = 800.0;
    const Layout layout = hex_layout(radius, 2);
    const double d_adj = kSqrt3 * radius;
    int adjacent_pairs = 0;
    for (std::size_t i = 0; i < layout.sites.size(); ++i) {
        for (std::size_t j = i + 1; j < layout.sites.size(); ++j) {
            const auto& a = layout.sites[i].position;
            const auto& b = layout.sites[j].position;
            const double d = std::hypot(a.x - b.x, a.y - b.y);
            CHECK(d > d_adj * (1.0 - 1e-9));
            if (d < 1.01 * d_adj) {
                CHECK(d == doctest::Approx(d_adj).epsilon(1e-9));
                ++adjacent_pairs;
            }
        }
    }
    CHECK(adjacent_pairs == 42);  // edges of the 19-site hex patch
}

TEST_CASE("invalid layout arguments throw") {
    CHECK_THROWS_AS(hex_layout(0.0, 1), std::invalid_argument);
    CHECK_THROWS_AS(hex_layout(800.0, -1), std::invalid_argument);
    Rng rng(99);
    CHECK_THROWS_AS(uniform_hex_point({0.0, 0.0}, 0.0, rng), std::invalid_argument);
}

TEST_CASE("uniform hex draws always land inside the hexagon") {
    Rng rng(101);
    const Point2 center{250.0, -140.0};
    const double radius = 800.0;
    for (int i = 0; i < 100000; ++i) {
        const Point2 p = uniform_hex_point(center, radius, rng);
        CHECK(point_in_hex(p.x, p.y, center.x, center.y, radius * (1.0 + 1e-12)));
    }
}

TEST_CASE("uniform hex draws pass a 6-sector chi-square test at the 1% level") {
    Rng rng(102);
    const double radius = 800.0;
    const int n = 100000;
    int counts[6] = {0, 0, 0, 0, 0, 0};
    for (int i = 0; i < n; ++i) {
        const Point2 p = uniform_hex_point({0.0, 0.0}, radius, rng);
        double ang = std::atan2(p.y, p.x);
        if (ang < 0.0) {
            ang += 2.0 * M_PI;
        }
        int sector = static_cast<int>(ang / (M_PI / 3.0));
        sector = std::min(sector, 5);
        ++counts[sector];
    }
    const double expected = n / 6.0;
    double chi2 = 0.0;
    for (int c : counts) {
        chi2 += (c - expected) * (c - expected) / expected;
    }
    CHECK(chi2 < 15.086);  // chi-square(5 dof) 1% critical value
}

TEST_CASE("uniform hex draws average to the center") {
    Rng rng(103);
    const Point2 center{100.0, -50.0};
    const double radius = 800.0;
    const int n = 1000000;
    double sx = 0.0;
    double sy = 0.0;
    for (int i = 0; i < n; ++i) {
        const Point2 p = uniform_hex_point(center, radius, rng);
        sx += p.x - center.x;
        sy += p.y - center.y;
    }
    // Var of each coordinate in a regular hexagon is (5/24) r^2.
    const double bound = 3.0 * radius * std::sqrt(5.0 / 24.0) / std::sqrt(static_cast<double>(n));
    CHECK(std::abs(sx / n) < bound);
    CHECK(std::abs(sy / n) < bound);
}

TEST_CASE("hex draws are scale-invariant in the radius") {
    Rng rng_a(104);
    Rng rng_b(104);
    for (int i = 0; i < 1000; ++i) {
        const Point2 big = uniform_hex_point({0.0, 0.0}, 800.0, rng_a);
        const Point2 unit = uniform_hex_point({0.0, 0.0}, 1.0, rng_b);
        CHECK(big.x / 800.0 == doctest::Approx(unit.x).epsilon(1e-12));
        CHECK(big.y / 800.0 == doctest::Approx(unit.y).epsilon(1e-12));
    }
}

TEST_CASE("link geometry of a vertical link") {
    const Site tx{{10.0, 20.0, 176.5}};
    const Site rx{{10.0, 20.0, 1.5}};
    const LinkGeom g = link_geom(tx, rx);
    CHECK(g.d2d_m == 0.0);
    CHECK(g.d3d_m == doctest::Approx(175.0).epsilon(1e-12));
    CHECK(g.elevation_deg == doctest::Approx(90.0).epsilon(1e-12));
}

TEST_CASE("link geometry of the default UAV offset") {
    const Site uav{{3000.0, 0.0, 200.0}};
    const Site bs{{0.0, 0.0, 25.0}};
    const LinkGeom g = link_geom(uav, bs);
    CHECK(g.d2d_m == doctest::Approx(3000.0).epsilon(1e-12));
    CHECK(g.d3d_m == doctest::Approx(3005.099831952343).epsilon(1e-12));
    CHECK(g.elevation_deg == doctest::Approx(3.3384705437643523).epsilon(1e-12));
}

TEST_CASE("link geometry of a horizontal link") {
    const Site tx{{100.0, 0.0, 25.0}};
    const Site rx{{0.0, 0.0, 25.0}};
    const LinkGeom g = link_geom(tx, rx);
    CHECK(g.d2d_m == doctest::Approx(100.0).epsilon(1e-12));
    CHECK(g.d3d_m == doctest::Approx(100.0).epsilon(1e-12));
    CHECK(g.elevation_deg == 0.0);
}

TEST_CASE("swapping endpoints preserves distances and flips elevation") {
    Rng rng(105);
    for (int i = 0; i < 200; ++i) {
        const Site a{{rng.uniform(-5000, 5000), rng.uniform(-5000, 5000), rng.uniform(1, 300)}};
        const Site b{{rng.uniform(-5000, 5000), rng.uniform(-5000, 5000), rng.uniform(1, 300)}};
        const LinkGeom ab = link_geom(a, b);
        const LinkGeom ba = link_geom(b, a);
        CHECK(ab.d2d_m == ba.d2d_m);
        CHECK(ab.d3d_m == ba.d3d_m);
        CHECK(ab.elevation_deg == -ba.elevation_deg);
        CHECK(ab.d3d_m >= ab.d2d_m);
        CHECK(std::abs(ab.elevation_deg) <= 90.0);
    }
}
