#include "uavcic/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace uavcic {

namespace {

constexpr double kDegPerRad = 180.0 / M_PI;

// Axial coordinates -> cartesian, flat-top orientation. Unit steps along
// either axial direction land sqrt(3) * radius away.
Point2 axial_to_xy(int q, int r, double radius) {
    const double s3 = std::sqrt(3.0);
    return {radius * 1.5 * q, radius * (0.5 * s3 * q + s3 * r)};
}

double ccw_angle(const Point2& p) {
    double a = std::atan2(p.y, p.x);
    if (a < 0.0) {
        a += 2.0 * M_PI;
    }
    return a;
}

}  // namespace

Layout hex_layout(double cell_radius_m, int tiers, double bs_height_m) {
    if (!(cell_radius_m > 0.0)) {
        throw std::invalid_argument("hex_layout: cell_radius_m must be > 0");
    }
    if (tiers < 0) {
        throw std::invalid_argument("hex_layout: tiers must be >= 0");
    }

    Layout layout;
    layout.cell_radius_m = cell_radius_m;
    layout.sites.push_back(Site{{0.0, 0.0, bs_height_m}});

    // Axial directions for walking one ring, starting from (ring, 0).
    static constexpr int kDirs[6][2] = {{-1, 1}, {-1, 0}, {0, -1}, {1, -1}, {1, 0}, {0, 1}};

    for (int ring = 1; ring <= tiers; ++ring) {
        std::vector<Point2> pts;
        int q = ring;
        int r = 0;
        for (const auto& dir : kDirs) {
            for (int step = 0; step < ring; ++step) {
                pts.push_back(axial_to_xy(q, r, cell_radius_m));
                q += dir[0];
                r += dir[1];
            }
        }
        std::sort(pts.begin(), pts.end(),
                  [](const Point2& a, const Point2& b) { return ccw_angle(a) < ccw_angle(b); });
        for (const auto& p : pts) {
            layout.sites.push_back(Site{{p.x, p.y, bs_height_m}});
        }
    }
    layout.helper_count = static_cast<int>(layout.sites.size()) - 1;
    return layout;
}

bool point_in_hex(double x, double y, double cx, double cy, double cell_radius_m) {
    const double s3 = std::sqrt(3.0);
    const double u = std::abs(x - cx);
    const double v = std::abs(y - cy);
    return v <= 0.5 * s3 * cell_radius_m && s3 * u + v <= s3 * cell_radius_m;
}

Point2 uniform_hex_point(Point2 center, double cell_radius_m, Rng& rng) {
    if (!(cell_radius_m > 0.0)) {
        throw std::invalid_argument("uniform_hex_point: cell_radius_m must be > 0");
    }
    const double s3 = std::sqrt(3.0);
    double u;
    double v;
    do {
        u = rng.uniform(-1.0, 1.0);
        v = rng.uniform(-0.5 * s3, 0.5 * s3);
    } while (!(std::abs(v) <= 0.5 * s3 && s3 * std::abs(u) + std::abs(v) <= s3));
    return {center.x + cell_radius_m * u, center.y + cell_radius_m * v};
}

LinkGeom link_geom(const Site& tx, const Site& rx) {
    const double dx = tx.position.x - rx.position.x;
    const double dy = tx.position.y - rx.position.y;
    const double dz = tx.position.z - rx.position.z;
    LinkGeom g;
    g.d2d_m = std::hypot(dx, dy);
    g.d3d_m = std::hypot(g.d2d_m, dz);
    g.elevation_deg = std::atan2(dz, g.d2d_m) * kDegPerRad;
    return g;
}

}  // namespace uavcic
