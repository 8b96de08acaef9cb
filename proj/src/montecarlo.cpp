#include "uavcic/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <thread>

namespace uavcic {

namespace {

// Minimum 2D distance between the user and its serving BS (standard UMa
// deployment floor).
constexpr double kMinUeBsDistanceM = 35.0;

double dbm_to_w(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

void require(bool ok, const std::string& message) {
    if (!ok) {
        throw ConfigError(message);
    }
}

}  // namespace

std::vector<int> ScenarioConfig::bits_vector() const {
    if (!bits_per_helper.empty()) {
        return bits_per_helper;
    }
    return std::vector<int>(static_cast<std::size_t>(helper_count()), uniform_bits);
}

void ScenarioConfig::validate() const {
    require(fc_ghz > 0.0, "config key 'fc_ghz': must be > 0");
    require(rb_bandwidth_hz > 0.0, "config key 'rb_bandwidth_hz': must be > 0");
    require(cell_radius_m > 0.0, "config key 'cell_radius_m': must be > 0");
    // the 35 m exclusion disk must not swallow the hexagon (inradius > 35 m)
    require(cell_radius_m > kMinUeBsDistanceM * 2.0 / std::sqrt(3.0),
            "config key 'cell_radius_m': must exceed 40.5 m so user placement "
            "clears the 35 m minimum BS-UE distance");
    require(bs_height_m > 0.0, "config key 'bs_height_m': must be > 0");
    require(ue_height_m >= 0.0, "config key 'ue_height_m': must be >= 0");
    require(uav_altitude_m > 0.0, "config key 'uav_altitude_m': must be > 0");
    require(uav_bs1_horizontal_distance_m >= 0.0,
            "config key 'uav_bs1_horizontal_distance_m': must be >= 0");
    require(ru_bps_hz > 0.0, "config key 'ru_bps_hz': must be > 0");
    require(tiers_m >= 0, "config key 'tiers_m': must be >= 0");
    require(uniform_bits >= 0, "config key 'bits_per_helper': bits must be >= 0");
    for (int b : bits_per_helper) {
        require(b >= 0, "config key 'bits_per_helper': bits must be >= 0");
    }
    if (!bits_per_helper.empty()) {
        std::ostringstream msg;
        msg << "config key 'bits_per_helper': list must have " << helper_count()
            << " entries (3M(M+1) helpers for tiers_m = " << tiers_m << ")";
        require(static_cast<int>(bits_per_helper.size()) == helper_count(), msg.str());
    }
    require(n_trials >= 1, "config key 'n_trials': must be >= 1");
    require(antenna.theta3db_deg > 0.0, "config key 'antenna_theta3db_deg': must be > 0");
    require(antenna.sla_db >= 0.0, "config key 'antenna_sla_db': must be >= 0");
}

LinkRealization build_realization(const ScenarioConfig& cfg, const TrialRng& rng) {
    const Layout layout = hex_layout(cfg.cell_radius_m, cfg.tiers_m, cfg.bs_height_m);
    const int j = layout.helper_count;
    const std::vector<int> bits = cfg.bits_vector();

    Rng pos_rng = rng.stream(TrialRng::kTagUePosition);
    Point2 ue_xy;
    do {
        ue_xy = uniform_hex_point({0.0, 0.0}, cfg.cell_radius_m, pos_rng);
    } while (std::hypot(ue_xy.x, ue_xy.y) < kMinUeBsDistanceM);
    const Site ue1{{ue_xy.x, ue_xy.y, cfg.ue_height_m}};
    const Site uav{{cfg.uav_bs1_horizontal_distance_m, 0.0, cfg.uav_altitude_m}};

    const double noise_w = noise_power_w(cfg.noise_psd_dbm_hz, cfg.rb_bandwidth_hz);

    LinkRealization r;
    r.p1_w = dbm_to_w(cfg.p1_dbm);
    r.pu_w = dbm_to_w(cfg.pu_dbm);
    r.f.resize(j + 1);
    r.sigma2_w.resize(j + 1);
    r.q_w.resize(j + 1);

    for (int i = 0; i <= j; ++i) {
        const Site& bs = layout.sites[i];

        Rng t_rng = rng.stream(TrialRng::kTagUeToBs, static_cast<std::uint64_t>(i));
        const ChannelDraw terr = draw_link(LinkKind::Terrestrial, link_geom(ue1, bs), cfg.antenna,
                                           cfg.fc_ghz, cfg.ue_height_m, t_rng);
        if (i == 0) {
            r.h1 = terr.amplitude();
            // Terrestrial inter-cell interference is assumed coordinated away,
            // so the victim BS sees thermal noise only.
            r.sigma2_w[0] = noise_w;
        } else {
            // Helpers share no RB with their own users but still hear UE1.
            r.sigma2_w[i] = noise_w + r.p1_w * std::norm(terr.amplitude());
        }

        Rng a_rng = rng.stream(TrialRng::kTagUavToBs, static_cast<std::uint64_t>(i));
        const ChannelDraw air = draw_link(LinkKind::Aerial, link_geom(uav, bs), cfg.antenna,
                                          cfg.fc_ghz, cfg.uav_altitude_m, a_rng);
        r.f[i] = air.amplitude();
    }

    r.q_w[0] = 0.0;
    for (int i = 1; i <= j; ++i) {
        r.q_w[i] = quantization_noise_w(r.pu_w * std::norm(r.f[i]), r.sigma2_w[i], bits[i - 1]);
    }
    return r;
}

TrialResult evaluate_trial(const ScenarioConfig& cfg, const LinkRealization& r) {
    TrialResult t;
    t.baseline = evaluate_baseline(r);
    t.df = evaluate_df(r, cfg.ru_bps_hz);
    t.qf1 = evaluate_qf1(r, cfg.ru_bps_hz);
    t.qf2 = evaluate_qf2(r);
    t.interference_free_rate_bpshz = std::log2(1.0 + interference_free_sinr(r));
    t.compare = compare_schemes(r, cfg.ru_bps_hz);
    return t;
}

RunStats run_trials(const ScenarioConfig& cfg, int n_threads) {
    cfg.validate();
    const int n = cfg.n_trials;
    std::vector<TrialResult> results(static_cast<std::size_t>(n));

    const int workers = std::clamp(n_threads, 1, n);
    auto run_range = [&](int begin, int end) {
        for (int t = begin; t < end; ++t) {
            const TrialRng trial_rng{cfg.seed, static_cast<std::uint64_t>(t)};
            results[static_cast<std::size_t>(t)] =
                evaluate_trial(cfg, build_realization(cfg, trial_rng));
        }
    };
    if (workers == 1) {
        run_range(0, n);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        const int chunk = (n + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            const int begin = w * chunk;
            const int end = std::min(n, begin + chunk);
            if (begin < end) {
                pool.emplace_back(run_range, begin, end);
            }
        }
        for (auto& th : pool) {
            th.join();
        }
    }

    // Fixed-order reduction over the per-trial slots keeps the aggregate
    // independent of the worker count.
    RunStats stats;
    stats.n_trials = n;
    stats.seed = cfg.seed;

    std::array<std::vector<double>, 4> rates;
    for (auto& v : rates) {
        v.reserve(static_cast<std::size_t>(n));
    }
    int decoded_df = 0;
    int decoded_qf1 = 0;
    int qf1_over_df = 0;
    int df_over_qf1 = 0;
    int qf2_over_df = 0;
    int qf2_over_qf1 = 0;
    double free_sum = 0.0;
    for (const TrialResult& t : results) {
        rates[0].push_back(t.baseline.ue1_rate_bpshz);
        rates[1].push_back(t.df.ue1_rate_bpshz);
        rates[2].push_back(t.qf1.ue1_rate_bpshz);
        rates[3].push_back(t.qf2.ue1_rate_bpshz);
        free_sum += t.interference_free_rate_bpshz;
        decoded_df += t.df.uav_decoded.value() ? 1 : 0;
        decoded_qf1 += t.qf1.uav_decoded.value() ? 1 : 0;
        qf1_over_df += t.compare.qf1_vs_df == Dominance::First ? 1 : 0;
        df_over_qf1 += t.compare.qf1_vs_df == Dominance::Second ? 1 : 0;
        qf2_over_df += t.compare.qf2_vs_df == Dominance::First ? 1 : 0;
        qf2_over_qf1 += t.compare.qf2_vs_qf1 == Dominance::First ? 1 : 0;
    }
    for (int s = 0; s < 4; ++s) {
        double sum = 0.0;
        for (double x : rates[s]) {
            sum += x;
        }
        const double mean = sum / n;
        double ss = 0.0;
        for (double x : rates[s]) {
            ss += (x - mean) * (x - mean);
        }
        stats.per_scheme[s].mean_rate_bpshz = mean;
        stats.per_scheme[s].stderr_bpshz = n > 1 ? std::sqrt(ss / (n - 1) / n) : 0.0;
    }
    stats.mean_interference_free_rate_bpshz = free_sum / n;
    stats.decode_fraction_df = static_cast<double>(decoded_df) / n;
    stats.decode_fraction_qf1 = static_cast<double>(decoded_qf1) / n;
    stats.frac_qf1_over_df = static_cast<double>(qf1_over_df) / n;
    stats.frac_df_over_qf1 = static_cast<double>(df_over_qf1) / n;
    stats.frac_qf2_over_df = static_cast<double>(qf2_over_df) / n;
    stats.frac_qf2_over_qf1 = static_cast<double>(qf2_over_qf1) / n;
    return stats;
}

const char* to_string(SweepVariable v) {
    switch (v) {
        case SweepVariable::Ru: return "ru";
        case SweepVariable::PuDbm: return "pu_dbm";
        case SweepVariable::DistanceM: return "distance_m";
        case SweepVariable::Bits: return "bits";
    }
    return "?";
}

SweepVariable sweep_variable_from_string(const std::string& name) {
    if (name == "ru") {
        return SweepVariable::Ru;
    }
    if (name == "pu_dbm") {
        return SweepVariable::PuDbm;
    }
    if (name == "distance_m") {
        return SweepVariable::DistanceM;
    }
    if (name == "bits") {
        return SweepVariable::Bits;
    }
    throw ConfigError("unknown sweep variable '" + name +
                      "' (expected ru, pu_dbm, distance_m or bits)");
}

ScenarioConfig apply_sweep_value(const ScenarioConfig& cfg, SweepVariable variable, double value) {
    ScenarioConfig out = cfg;
    switch (variable) {
        case SweepVariable::Ru:
            out.ru_bps_hz = value;
            break;
        case SweepVariable::PuDbm:
            out.pu_dbm = value;
            break;
        case SweepVariable::DistanceM:
            out.uav_bs1_horizontal_distance_m = value;
            break;
        case SweepVariable::Bits: {
            if (value < 0.0 || value != std::floor(value)) {
                throw ConfigError("sweep variable 'bits': values must be nonnegative integers");
            }
            out.uniform_bits = static_cast<int>(value);
            out.bits_per_helper.clear();
            break;
        }
    }
    return out;
}

std::vector<SweepRow> sweep(const ScenarioConfig& cfg, SweepVariable variable,
                            const std::vector<double>& grid, int n_threads) {
    if (grid.empty()) {
        throw ConfigError("sweep: grid must be nonempty");
    }
    std::vector<SweepRow> rows;
    rows.reserve(grid.size() * 4);
    for (double value : grid) {
        const ScenarioConfig point = apply_sweep_value(cfg, variable, value);
        const RunStats stats = run_trials(point, n_threads);
        for (Scheme s : {Scheme::Baseline, Scheme::DF, Scheme::QF1, Scheme::QF2}) {
            SweepRow row;
            row.variable = to_string(variable);
            row.value = value;
            row.scheme = s;
            row.mean_rate_bpshz = stats.scheme(s).mean_rate_bpshz;
            row.stderr_bpshz = stats.scheme(s).stderr_bpshz;
            row.n_trials = stats.n_trials;
            row.seed = stats.seed;
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

}  // namespace uavcic
