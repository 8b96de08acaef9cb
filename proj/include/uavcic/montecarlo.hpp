#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "uavcic/channel.hpp"
#include "uavcic/cic.hpp"
#include "uavcic/geometry.hpp"

namespace uavcic {

// Full scenario parameterization. Defaults follow the standard evaluation
// setup: one 180 kHz resource block at 2 GHz, 800 m hexagonal cells with
// 25 m base stations, a 200 m UAV 3 km from the victim cell, 15 dBm user and
// UAV transmit power, first-tier cooperation and 6-bit quantization.
struct ScenarioConfig {
    double fc_ghz = 2.0;
    double rb_bandwidth_hz = 180e3;
    double noise_psd_dbm_hz = -164.0;
    double cell_radius_m = 800.0;
    double bs_height_m = 25.0;
    double ue_height_m = 1.5;
    double uav_altitude_m = 200.0;
    double uav_bs1_horizontal_distance_m = 3000.0;
    double p1_dbm = 15.0;
    double pu_dbm = 15.0;
    double ru_bps_hz = 5.0;
    int tiers_m = 1;
    int uniform_bits = 6;
    std::vector<int> bits_per_helper;  // empty -> uniform_bits everywhere
    int n_trials = 1000;
    std::uint64_t seed = 1;
    AntennaPattern antenna;

    int helper_count() const { return 3 * tiers_m * (tiers_m + 1); }
    std::vector<int> bits_vector() const;  // resolved per-helper list, size J
    void validate() const;                 // throws ConfigError
};

// Raised for out-of-range or malformed configuration; the message names the
// offending key and bound.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TrialResult {
    SchemeOutcome baseline;
    SchemeOutcome df;
    SchemeOutcome qf1;
    SchemeOutcome qf2;
    double interference_free_rate_bpshz = 0.0;
    CompareReport compare;
};

// Addresses the random streams of one trial. Every randomized object of the
// trial (user position, each individual link) draws from its own substream,
// so changing one scenario parameter never desynchronizes the rest.
struct TrialRng {
    std::uint64_t seed = 0;
    std::uint64_t trial = 0;

    static constexpr std::uint64_t kTagUePosition = 1;
    static constexpr std::uint64_t kTagUeToBs = 2;
    static constexpr std::uint64_t kTagUavToBs = 3;

    Rng stream(std::uint64_t tag, std::uint64_t index = 0) const {
        return substream(seed, {trial, tag, index});
    }
};

// Draws one full realization: user placed uniformly in the victim cell (35 m
// minimum distance to its BS), terrestrial links to every cooperating BS,
// aerial links from the UAV to every cooperating BS, noise and quantization
// noise powers.
LinkRealization build_realization(const ScenarioConfig& cfg, const TrialRng& rng);

TrialResult evaluate_trial(const ScenarioConfig& cfg, const LinkRealization& r);

struct SchemeStats {
    double mean_rate_bpshz = 0.0;
    double stderr_bpshz = 0.0;
};

struct RunStats {
    std::array<SchemeStats, 4> per_scheme;  // indexed by Scheme
    double mean_interference_free_rate_bpshz = 0.0;
    double decode_fraction_df = 0.0;
    double decode_fraction_qf1 = 0.0;
    double frac_qf1_over_df = 0.0;
    double frac_df_over_qf1 = 0.0;
    double frac_qf2_over_df = 0.0;
    double frac_qf2_over_qf1 = 0.0;
    int n_trials = 0;
    std::uint64_t seed = 0;

    const SchemeStats& scheme(Scheme s) const { return per_scheme[static_cast<int>(s)]; }
};

// Runs cfg.n_trials independent trials. Trials are distributed over
// n_threads workers into per-trial result slots and reduced in trial order,
// so the aggregate is identical for every worker count.
RunStats run_trials(const ScenarioConfig& cfg, int n_threads = 1);

enum class SweepVariable { Ru, PuDbm, DistanceM, Bits };

const char* to_string(SweepVariable v);
SweepVariable sweep_variable_from_string(const std::string& name);  // throws ConfigError

// Returns a copy of cfg with the swept variable set. Bits values must be
// nonnegative integers.
ScenarioConfig apply_sweep_value(const ScenarioConfig& cfg, SweepVariable variable, double value);

struct SweepRow {
    std::string variable;
    double value = 0.0;
    Scheme scheme = Scheme::Baseline;
    double mean_rate_bpshz = 0.0;
    double stderr_bpshz = 0.0;
    int n_trials = 0;
    std::uint64_t seed = 0;
};

// One run_trials per grid value with common random numbers (the same seed and
// trial substreams at every grid point). Emits four rows (one per scheme) per
// grid value.
std::vector<SweepRow> sweep(const ScenarioConfig& cfg, SweepVariable variable,
                            const std::vector<double>& grid, int n_threads = 1);

}  // namespace uavcic
