#include "uavcic/channel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace uavcic {

namespace {

// Model constants shared by the UMa formulas (TR 38.901 Table 7.4.1-1).
constexpr double kBsHeightM = 25.0;
constexpr double kUtHeightM = 1.5;
constexpr double kEffEnvHeightM = 1.0;
constexpr double kSpeedOfLight = 3.0e8;
constexpr double kMinDistance2dM = 10.0;

// Clamps d2d to the validity floor, preserving the height difference implied
// by the original (d2d, d3d) pair.
void clamp_geometry(double& d2d, double& d3d) {
    if (d2d >= kMinDistance2dM) {
        return;
    }
    const double dh2 = std::max(d3d * d3d - d2d * d2d, 0.0);
    d2d = kMinDistance2dM;
    d3d = std::sqrt(d2d * d2d + dh2);
}

double uma_los_db(double d2d, double d3d, double fc_ghz) {
    const double fc_hz = fc_ghz * 1e9;
    const double d_bp =
        4.0 * (kBsHeightM - kEffEnvHeightM) * (kUtHeightM - kEffEnvHeightM) * fc_hz / kSpeedOfLight;
    if (d2d <= d_bp) {
        return 28.0 + 22.0 * std::log10(d3d) + 20.0 * std::log10(fc_ghz);
    }
    const double dh = kBsHeightM - kUtHeightM;
    return 28.0 + 40.0 * std::log10(d3d) + 20.0 * std::log10(fc_ghz) -
           9.0 * std::log10(d_bp * d_bp + dh * dh);
}

}  // namespace

double ChannelDraw::linear_power_gain() const {
    return std::pow(10.0, (-pathloss_db + shadowing_db + antenna_gain_db) / 10.0) *
           std::norm(fading);
}

ComplexGain ChannelDraw::amplitude() const {
    return std::pow(10.0, (-pathloss_db + shadowing_db + antenna_gain_db) / 20.0) * fading;
}

double los_probability_terrestrial(double d2d_m) {
    if (d2d_m < 0.0) {
        throw std::invalid_argument("los_probability_terrestrial: d2d_m must be >= 0");
    }
    if (d2d_m <= 18.0) {
        return 1.0;
    }
    return 18.0 / d2d_m + std::exp(-d2d_m / 63.0) * (1.0 - 18.0 / d2d_m);
}

double pathloss_terrestrial_db(const LinkGeom& geom, double fc_ghz, bool los) {
    double d2d = geom.d2d_m;
    double d3d = geom.d3d_m;
    clamp_geometry(d2d, d3d);

    const double pl_los = uma_los_db(d2d, d3d, fc_ghz);
    if (los) {
        return pl_los;
    }
    const double pl_nlos = 13.54 + 39.08 * std::log10(d3d) + 20.0 * std::log10(fc_ghz) -
                           0.6 * (kUtHeightM - 1.5);
    return std::max(pl_los, pl_nlos);
}

double los_probability_aerial(double d2d_m, double h_uav_m) {
    if (!(h_uav_m > 0.0)) {
        throw std::invalid_argument("los_probability_aerial: h_uav_m must be > 0");
    }
    if (h_uav_m <= 22.5) {
        return los_probability_terrestrial(d2d_m);
    }
    if (h_uav_m > 100.0) {
        return 1.0;
    }
    const double d1 = std::max(460.0 * std::log10(h_uav_m) - 700.0, 18.0);
    const double p1 = 4300.0 * std::log10(h_uav_m) - 3800.0;
    if (d2d_m <= d1) {
        return 1.0;
    }
    return d1 / d2d_m + std::exp(-d2d_m / p1) * (1.0 - d1 / d2d_m);
}

double pathloss_aerial_db(const LinkGeom& geom, double fc_ghz, double h_uav_m, bool los) {
    if (h_uav_m <= 22.5) {
        return pathloss_terrestrial_db(geom, fc_ghz, los);
    }
    double d2d = geom.d2d_m;
    double d3d = geom.d3d_m;
    clamp_geometry(d2d, d3d);

    const double pl_los = 28.0 + 22.0 * std::log10(d3d) + 20.0 * std::log10(fc_ghz);
    if (los) {
        return pl_los;
    }
    const double h = std::clamp(h_uav_m, 22.5, 100.0);
    const double pl_nlos = -17.5 + (46.0 - 7.0 * std::log10(h)) * std::log10(d3d) +
                           20.0 * std::log10(40.0 * M_PI * fc_ghz / 3.0);
    return std::max(pl_los, pl_nlos);
}

double antenna_gain_db(double elevation_deg, const AntennaPattern& pattern) {
    const double off_boresight = elevation_deg - (-pattern.downtilt_deg);
    const double ratio = off_boresight / pattern.theta3db_deg;
    return pattern.gmax_db - std::min(12.0 * ratio * ratio, pattern.sla_db);
}

double shadowing_std_terrestrial_db(bool los) { return los ? 4.0 : 6.0; }

double shadowing_std_aerial_db(double h_uav_m, bool los) {
    if (h_uav_m <= 22.5) {
        return shadowing_std_terrestrial_db(los);
    }
    if (los) {
        return 4.64 * std::exp(-0.0066 * h_uav_m);
    }
    return 6.0;
}

double shadowing_sample_db(double std_db, Rng& rng) {
    if (std_db < 0.0) {
        throw std::invalid_argument("shadowing_sample_db: std_db must be >= 0");
    }
    if (std_db == 0.0) {
        return 0.0;
    }
    return std_db * rng.gaussian();
}

ComplexGain rayleigh_sample(Rng& rng) { return rng.complex_gaussian(); }

ComplexGain rician_sample(double k_linear, Rng& rng) {
    const double phase = rng.uniform(0.0, 2.0 * M_PI);
    const ComplexGain los_part = std::polar(std::sqrt(k_linear / (k_linear + 1.0)), phase);
    return los_part + std::sqrt(1.0 / (k_linear + 1.0)) * rng.complex_gaussian();
}

ChannelDraw draw_link(LinkKind kind, const LinkGeom& geom, const AntennaPattern& pattern,
                      double fc_ghz, double tx_height_m, Rng& rng) {
    ChannelDraw draw;
    const bool aerial = kind == LinkKind::Aerial;

    const double p_los = aerial ? los_probability_aerial(geom.d2d_m, tx_height_m)
                                : los_probability_terrestrial(geom.d2d_m);
    draw.los = rng.uniform01() < p_los;

    draw.pathloss_db = aerial ? pathloss_aerial_db(geom, fc_ghz, tx_height_m, draw.los)
                              : pathloss_terrestrial_db(geom, fc_ghz, draw.los);

    const double sh_std = aerial ? shadowing_std_aerial_db(tx_height_m, draw.los)
                                 : shadowing_std_terrestrial_db(draw.los);
    draw.shadowing_db = shadowing_sample_db(sh_std, rng);

    draw.antenna_gain_db = antenna_gain_db(geom.elevation_deg, pattern);

    if (aerial && draw.los) {
        draw.fading = rician_sample(std::pow(10.0, kAerialLosRicianKDb / 10.0), rng);
    } else {
        draw.fading = rayleigh_sample(rng);
    }
    return draw;
}

}  // namespace uavcic
