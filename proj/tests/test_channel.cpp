#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "uavcic/channel.hpp"

using namespace uavcic;

namespace {

LinkGeom geom_from(double d2d, double dh) {
    LinkGeom g;
    g.d2d_m = d2d;
    g.d3d_m = std::hypot(d2d, dh);
    g.elevation_deg = std::atan2(dh, d2d) * 180.0 / M_PI;
    return g;
}

}  // namespace

TEST_CASE("terrestrial LoS probability saturates below 18 m and decays") {
    CHECK(los_probability_terrestrial(10.0) == 1.0);
    CHECK(los_probability_terrestrial(18.0) == 1.0);
    CHECK(los_probability_terrestrial(18.0001) < 1.0);
    CHECK(los_probability_terrestrial(100.0) ==
          doctest::Approx(0.3476708368442312).epsilon(1e-12));
    CHECK(los_probability_terrestrial(1e9) < 1e-6);
    double prev = 1.0;
    for (double d = 0.0; d < 5000.0; d += 25.0) {
        const double p = los_probability_terrestrial(d);
        CHECK(p <= prev + 1e-15);
        CHECK(p >= 0.0);
        CHECK(p <= 1.0);
        prev = p;
    }
}

TEST_CASE("terrestrial UMa pathloss reference values at 2 GHz") {
    // d3d = 100 m with the 23.5 m BS-UE height gap, below the 320 m breakpoint
    const LinkGeom g = geom_from(97.19953703593448, 23.5);
    CHECK(pathloss_terrestrial_db(g, 2.0, true) ==
          doctest::Approx(78.02059991327963).epsilon(1e-12));
    CHECK(pathloss_terrestrial_db(g, 2.0, false) ==
          doctest::Approx(97.72059991327961).epsilon(1e-12));
    CHECK(pathloss_terrestrial_db(g, 2.0, false) >= pathloss_terrestrial_db(g, 2.0, true));
}

TEST_CASE("terrestrial pathloss distance-doubling slopes") {
    const double dh = 23.5;
    // below the breakpoint: 22 log10(2)
    const double below = pathloss_terrestrial_db(geom_from(std::sqrt(100.0 * 100.0 - dh * dh), dh),
                                                 2.0, true) -
                         pathloss_terrestrial_db(geom_from(std::sqrt(50.0 * 50.0 - dh * dh), dh),
                                                 2.0, true);
    CHECK(below == doctest::Approx(6.622659904607587).epsilon(1e-9));
    // beyond the breakpoint: 40 log10(2)
    const double beyond =
        pathloss_terrestrial_db(geom_from(std::sqrt(2000.0 * 2000.0 - dh * dh), dh), 2.0, true) -
        pathloss_terrestrial_db(geom_from(std::sqrt(1000.0 * 1000.0 - dh * dh), dh), 2.0, true);
    CHECK(beyond == doctest::Approx(12.041199826559248).epsilon(1e-9));
}

TEST_CASE("sub-10 m distances clamp to the validity floor") {
    CHECK(pathloss_terrestrial_db(geom_from(5.0, 0.0), 2.0, true) ==
          pathloss_terrestrial_db(geom_from(10.0, 0.0), 2.0, true));
}

TEST_CASE("terrestrial pathloss is nondecreasing in distance") {
    for (const bool los : {true, false}) {
        double prev = 0.0;
        for (double d2d = 10.0; d2d < 6000.0; d2d += 10.0) {
            const double pl = pathloss_terrestrial_db(geom_from(d2d, 23.5), 2.0, los);
            CHECK(pl >= prev);
            prev = pl;
        }
    }
}

TEST_CASE("aerial LoS probability: certain above 100 m, decaying at low heights") {
    CHECK(los_probability_aerial(3000.0, 200.0) == 1.0);
    CHECK(los_probability_aerial(0.0, 50.0) == 1.0);
    CHECK(los_probability_aerial(5000.0, 50.0) ==
          doctest::Approx(0.25258451875050036).epsilon(1e-12));
    const double far = los_probability_aerial(1e5, 50.0);
    CHECK(far == doctest::Approx(0.0008152620203539599).epsilon(1e-12));
    CHECK(far > 0.0);
    CHECK(los_probability_aerial(500.0, 10.0) == los_probability_terrestrial(500.0));
}

TEST_CASE("aerial UMa-AV pathloss reference values") {
    const LinkGeom g = geom_from(3000.0, 175.0);  // d3d = 3005.0998...
    CHECK(pathloss_aerial_db(g, 2.0, 200.0, true) ==
          doctest::Approx(110.53349580584664).epsilon(1e-12));
    CHECK(pathloss_aerial_db(g, 2.0, 90.0, false) ==
          doctest::Approx(133.3678237058357).epsilon(1e-12));
    CHECK(pathloss_aerial_db(g, 2.0, 90.0, false) >= pathloss_aerial_db(g, 2.0, 90.0, true));
    // near-free-space exponent: one distance doubling costs 22 log10(2), i.e.
    // 6 dB within a 1 dB margin
    const double delta = pathloss_aerial_db(geom_from(6000.0, 350.0), 2.0, 200.0, true) -
                         pathloss_aerial_db(g, 2.0, 200.0, true);
    CHECK(delta == doctest::Approx(6.622659904607587).epsilon(1e-9));
    CHECK(std::abs(delta - 6.0) < 1.0);
}

TEST_CASE("antenna gain pattern") {
    const AntennaPattern pattern;  // 10 deg downtilt, 10 deg theta3db, SLA 20, 8 dBi
    CHECK(antenna_gain_db(-10.0, pattern) == 8.0);                 // boresight
    CHECK(antenna_gain_db(-5.0, pattern) == doctest::Approx(5.0)); // theta3db/2 -> -3 dB
    CHECK(antenna_gain_db(60.0, pattern) == -12.0);                // sidelobe floor
    CHECK(antenna_gain_db(90.0, pattern) == -12.0);
    // even about boresight
    for (double off = 0.0; off <= 100.0; off += 0.7) {
        CHECK(antenna_gain_db(-10.0 + off, pattern) ==
              doctest::Approx(antenna_gain_db(-10.0 - off, pattern)).epsilon(1e-12));
    }
    // maximum attenuation is exactly the sidelobe level, and the pattern is
    // continuous (bounded increments on a fine grid)
    double min_gain = 1e9;
    double prev = antenna_gain_db(-90.0, pattern);
    for (double e = -90.0; e <= 90.0; e += 0.01) {
        const double g = antenna_gain_db(e, pattern);
        min_gain = std::min(min_gain, g);
        CHECK(std::abs(g - prev) < 0.5);
        prev = g;
    }
    CHECK(min_gain == pattern.gmax_db - pattern.sla_db);
}

TEST_CASE("shadowing sampler") {
    Rng rng(21);
    CHECK(shadowing_sample_db(0.0, rng) == 0.0);
    const int n = 1000000;
    double sum = 0.0;
    double ss = 0.0;
    for (int i = 0; i < n; ++i) {
        const double s = shadowing_sample_db(4.0, rng);
        sum += s;
        ss += s * s;
    }
    CHECK(std::abs(sum / n) < 3.0 * 4.0 / 1000.0);
    CHECK(std::sqrt(ss / n) == doctest::Approx(4.0).epsilon(0.01));
    CHECK_THROWS_AS(shadowing_sample_db(-1.0, rng), std::invalid_argument);
}

TEST_CASE("Rayleigh fading statistics") {
    Rng rng(22);
    const int n = 1000000;
    double power = 0.0;
    std::complex<double> mean{0.0, 0.0};
    int phase_bins[8] = {0};
    for (int i = 0; i < n; ++i) {
        const ComplexGain g = rayleigh_sample(rng);
        power += std::norm(g);
        mean += g;
        double ang = std::arg(g);
        if (ang < 0.0) {
            ang += 2.0 * M_PI;
        }
        ++phase_bins[std::min(static_cast<int>(ang / (M_PI / 4.0)), 7)];
    }
    CHECK(power / n == doctest::Approx(1.0).epsilon(0.01));
    CHECK(std::abs(mean.real() / n) < 3.0 / 1000.0);
    CHECK(std::abs(mean.imag() / n) < 3.0 / 1000.0);
    const double expected = n / 8.0;
    double chi2 = 0.0;
    for (int c : phase_bins) {
        chi2 += (c - expected) * (c - expected) / expected;
    }
    CHECK(chi2 < 18.475);  // chi-square(7 dof) 1% critical value
}

TEST_CASE("Rician fading has unit mean power") {
    Rng rng(23);
    const double k = std::pow(10.0, 1.5);
    const int n = 1000000;
    double power = 0.0;
    for (int i = 0; i < n; ++i) {
        power += std::norm(rician_sample(k, rng));
    }
    CHECK(power / n == doctest::Approx(1.0).epsilon(0.01));
}

TEST_CASE("channel draw composition law") {
    ChannelDraw d;
    d.pathloss_db = 0.0;
    d.shadowing_db = 0.0;
    d.antenna_gain_db = 0.0;
    d.fading = {1.0, 0.0};
    CHECK(d.linear_power_gain() == 1.0);
    d.pathloss_db = 100.0;
    CHECK(d.linear_power_gain() == doctest::Approx(1e-10).epsilon(1e-12));

    Rng rng(24);
    const LinkGeom g = geom_from(450.0, -23.5);
    for (int i = 0; i < 1000; ++i) {
        const ChannelDraw draw =
            draw_link(LinkKind::Terrestrial, g, AntennaPattern{}, 2.0, 1.5, rng);
        const double expected =
            std::pow(10.0,
                     (-draw.pathloss_db + draw.shadowing_db + draw.antenna_gain_db) / 10.0) *
            std::norm(draw.fading);
        CHECK(draw.linear_power_gain() == expected);
        CHECK(std::norm(draw.amplitude()) ==
              doctest::Approx(draw.linear_power_gain()).epsilon(1e-12));
    }
}

TEST_CASE("aerial links at 200 m are always line-of-sight") {
    Rng rng(25);
    const LinkGeom g = geom_from(3000.0, 175.0);
    for (int i = 0; i < 1000; ++i) {
        const ChannelDraw draw = draw_link(LinkKind::Aerial, g, AntennaPattern{}, 2.0, 200.0, rng);
        CHECK(draw.los);
    }
}

TEST_CASE("gain is nonincreasing in distance at fixed elevation and fading") {
    // Same elevation, growing range; identical substream gives identical LoS,
    // shadowing and fading samples, so only the deterministic terms move.
    for (const auto kind : {LinkKind::Terrestrial, LinkKind::Aerial}) {
        double prev = 1e9;
        for (double scale = 1.0; scale <= 8.0; scale *= 2.0) {
            Rng rng(26);
            const ChannelDraw draw = draw_link(kind, geom_from(800.0 * scale, 80.0 * scale),
                                               AntennaPattern{}, 2.0, 200.0, rng);
            CHECK(draw.linear_power_gain() <= prev);
            prev = draw.linear_power_gain();
        }
    }
}
