#pragma once

#include <complex>

#include "uavcic/geometry.hpp"
#include "uavcic/rng.hpp"

namespace uavcic {

using ComplexGain = std::complex<double>;

// Vertical-cut base-station antenna pattern: parabolic attenuation around the
// downtilted boresight, floored at sla_db, isotropic in azimuth.
struct AntennaPattern {
    double downtilt_deg = 10.0;
    double theta3db_deg = 10.0;
    double sla_db = 20.0;
    double gmax_db = 8.0;
};

enum class LinkKind { Terrestrial, Aerial };

// One large-scale + small-scale channel draw. The linear power gain of the
// link is 10^((-pathloss_db + shadowing_db + antenna_gain_db)/10) * |fading|^2.
struct ChannelDraw {
    double pathloss_db = 0.0;
    double shadowing_db = 0.0;
    double antenna_gain_db = 0.0;
    ComplexGain fading{1.0, 0.0};  // unit mean power
    bool los = false;

    double linear_power_gain() const;
    ComplexGain amplitude() const;  // complex channel coefficient
};

// LoS probability for ground-user links, 3GPP TR 38.901 Table 7.4.2-1 (UMa,
// h_UT <= 13 m so the high-rise correction term vanishes).
double los_probability_terrestrial(double d2d_m);

// UMa pathloss, TR 38.901 Table 7.4.1-1, with the model constants h_BS = 25 m,
// h_UT = 1.5 m, h_E = 1 m. NLoS takes max(LoS, NLoS') per the table.
// 2D distances below 10 m are clamped to 10 m (model validity floor).
double pathloss_terrestrial_db(const LinkGeom& geom, double fc_ghz, bool los);

// LoS probability for BS-UAV links, TR 36.777 Table B-1 (UMa-AV). Equals 1 for
// UAV heights above 100 m; delegates to the terrestrial formula at or below
// 22.5 m.
double los_probability_aerial(double d2d_m, double h_uav_m);

// UMa-AV pathloss, TR 36.777 Table B-2. The NLoS branch takes
// max(LoS, NLoS') so NLoS never undercuts LoS; its height coefficient is
// evaluated with h clamped to the table's [22.5, 100] m validity range.
double pathloss_aerial_db(const LinkGeom& geom, double fc_ghz, double h_uav_m, bool los);

// gmax_db - min(12 * ((elev - (-downtilt)) / theta3db)^2, sla_db)
double antenna_gain_db(double elevation_deg, const AntennaPattern& pattern);

double shadowing_std_terrestrial_db(bool los);                 // 4 dB LoS / 6 dB NLoS
double shadowing_std_aerial_db(double h_uav_m, bool los);      // 4.64 e^{-0.0066 h} / 6 dB
double shadowing_sample_db(double std_db, Rng& rng);

ComplexGain rayleigh_sample(Rng& rng);
// Rician fading with linear K-factor; LoS phase drawn uniformly. E[|g|^2] = 1.
ComplexGain rician_sample(double k_linear, Rng& rng);

// Rician K-factor applied to LoS aerial links, in dB.
inline constexpr double kAerialLosRicianKDb = 15.0;

// Full draw for one link: LoS state, pathloss, shadowing, receive antenna
// gain from the elevation angle, and small-scale fading (Rayleigh for
// terrestrial and aerial NLoS, Rician for aerial LoS). tx_height_m is the
// transmitter height; the aerial sub-models need it, terrestrial ones use
// their fixed model constants.
ChannelDraw draw_link(LinkKind kind, const LinkGeom& geom, const AntennaPattern& pattern,
                      double fc_ghz, double tx_height_m, Rng& rng);

}  // namespace uavcic
