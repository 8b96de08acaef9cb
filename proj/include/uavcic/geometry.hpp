#pragma once

#include <vector>

#include "uavcic/rng.hpp"

namespace uavcic {

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

struct Point3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;  // height above ground, meters
};

struct Site {
    Point3 position;
};

// Hexagonal cell deployment around the victim cell. sites[0] is the serving
// base station at the origin; sites[1..] are the helper-tier base stations,
// ordered ring by ring, counterclockwise from the +x axis within each ring.
struct Layout {
    double cell_radius_m = 0.0;  // center-to-vertex
    std::vector<Site> sites;
    int helper_count = 0;  // sites.size() - 1
};

// 3D link geometry between a transmitter and a receiver. elevation_deg is the
// angle of the receive direction above the horizontal plane at the receiver,
// positive when the transmitter is higher.
struct LinkGeom {
    double d2d_m = 0.0;
    double d3d_m = 0.0;
    double elevation_deg = 0.0;
};

// Flat-top hexagonal grid: adjacent cell centers are sqrt(3) * cell_radius_m
// apart. tiers = 0 yields the single center site; tiers = M yields
// 1 + 3M(M+1) sites.
Layout hex_layout(double cell_radius_m, int tiers, double bs_height_m = 25.0);

// Membership test for the flat-top hexagon (center-to-vertex radius) centered
// at (cx, cy). Boundary points count as inside.
bool point_in_hex(double x, double y, double cx, double cy, double cell_radius_m);

// Uniform point inside the hexagon, by rejection from the bounding box. The
// accept/reject decision is made in radius-normalized coordinates, so the
// consumed random sequence is independent of cell_radius_m.
Point2 uniform_hex_point(Point2 center, double cell_radius_m, Rng& rng);

LinkGeom link_geom(const Site& tx, const Site& rx);

}  // namespace uavcic
