#include "uavcic/commands.hpp"

#include <charconv>
#include <cmath>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <system_error>
#include <vector>

namespace uavcic {

namespace {

std::string utc_timestamp() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<double> parse_list(const std::string& list) {
    std::vector<double> values;
    std::size_t pos = 0;
    while (pos <= list.size()) {
        std::size_t comma = list.find(',', pos);
        if (comma == std::string::npos) {
            comma = list.size();
        }
        const std::string item = list.substr(pos, comma - pos);
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
        if (ec != std::errc{} || ptr != item.data() + item.size()) {
            throw UsageError("--list: cannot parse value '" + item + "'");
        }
        values.push_back(v);
        pos = comma + 1;
    }
    return values;
}

std::vector<double> build_grid(const SweepArgs& args) {
    if (!args.list.empty()) {
        if (args.from || args.to || args.steps) {
            throw UsageError("--list cannot be combined with --from/--to/--steps");
        }
        return parse_list(args.list);
    }
    if (!args.from || !args.to || !args.steps) {
        throw UsageError("sweep grid requires --from, --to and --steps (or --list)");
    }
    const int steps = *args.steps;
    if (steps < 1) {
        throw UsageError("--steps: must be >= 1");
    }
    std::vector<double> values;
    values.reserve(static_cast<std::size_t>(steps));
    if (steps == 1) {
        values.push_back(*args.from);
        return values;
    }
    const double span = (*args.to - *args.from) / (steps - 1);
    for (int k = 0; k < steps; ++k) {
        values.push_back(*args.from + span * k);
    }
    return values;
}

void write_csv(const std::string& path, const std::vector<SweepRow>& rows) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::ios_base::failure("cannot write output file '" + path + "'");
    }
    out << "variable,value,scheme,mean_rate_bpshz,stderr,n_trials,seed\n";
    for (const SweepRow& row : rows) {
        out << row.variable << ',' << format_double(row.value) << ',' << to_string(row.scheme)
            << ',' << format_double(row.mean_rate_bpshz) << ','
            << format_double(row.stderr_bpshz) << ',' << row.n_trials << ',' << row.seed << '\n';
    }
    if (!out) {
        throw std::ios_base::failure("error while writing '" + path + "'");
    }
}

}  // namespace

std::string format_double(double value) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return ec == std::errc{} ? std::string(buf, ptr) : std::string("nan");
}

int cmd_sweep(const SweepArgs& args, std::ostream& err) {
    try {
        ScenarioConfig cfg;
        SweepSpec spec;
        std::string out_path = args.out_path;

        if (!args.manifest_path.empty()) {
            const RunManifest recorded = read_manifest(args.manifest_path);
            if (recorded.sweep.variable.empty()) {
                throw ConfigError("manifest '" + args.manifest_path +
                                  "' does not describe a sweep");
            }
            cfg = recorded.config;
            spec = recorded.sweep;
            if (out_path.empty()) {
                out_path = recorded.output_path;
            }
        } else {
            if (!args.config_path.empty()) {
                cfg = parse_config(args.config_path);
            }
            if (args.var.empty()) {
                throw UsageError("sweep requires --var (or --manifest)");
            }
            spec.variable = args.var;
            spec.values = build_grid(args);
        }
        if (out_path.empty()) {
            throw UsageError("sweep requires --out");
        }
        if (args.seed) {
            cfg.seed = *args.seed;
        }
        if (args.trials) {
            cfg.n_trials = *args.trials;
        }
        cfg.validate();

        const SweepVariable variable = sweep_variable_from_string(spec.variable);
        for (double v : spec.values) {
            apply_sweep_value(cfg, variable, v);  // validates grid values
        }

        const std::vector<SweepRow> rows = sweep(cfg, variable, spec.values, args.threads);
        write_csv(out_path, rows);

        RunManifest manifest;
        manifest.tool_version = kToolVersion;
        manifest.timestamp_utc = utc_timestamp();
        manifest.seed = cfg.seed;
        manifest.n_trials = cfg.n_trials;
        manifest.output_path = out_path;
        manifest.config = cfg;
        manifest.sweep = spec;
        write_manifest(manifest, manifest_path_for(out_path));
        return kExitOk;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::ios_base::failure& e) {
        err << "io error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitIo;
    }
}

int cmd_single(const SingleArgs& args, std::ostream& out, std::ostream& err) {
    try {
        ScenarioConfig cfg;
        if (!args.config_path.empty()) {
            cfg = parse_config(args.config_path);
        }
        if (args.seed) {
            cfg.seed = *args.seed;
        }
        if (args.trials) {
            cfg.n_trials = *args.trials;
        }
        cfg.validate();

        const RunStats stats = run_trials(cfg, args.threads);

        out << "trials " << stats.n_trials << ", seed " << stats.seed << ", ru "
            << format_double(cfg.ru_bps_hz) << " bps/Hz, pu " << format_double(cfg.pu_dbm)
            << " dBm\n";
        out << std::left << std::setw(10) << "scheme" << std::setw(24) << "mean_rate_bpshz"
            << std::setw(24) << "stderr" << "decoded_frac\n";
        const auto decoded = [&](Scheme s) -> std::string {
            if (s == Scheme::DF) {
                return format_double(stats.decode_fraction_df);
            }
            if (s == Scheme::QF1) {
                return format_double(stats.decode_fraction_qf1);
            }
            return "-";
        };
        for (Scheme s : {Scheme::Baseline, Scheme::DF, Scheme::QF1, Scheme::QF2}) {
            out << std::left << std::setw(10) << to_string(s) << std::setw(24)
                << format_double(stats.scheme(s).mean_rate_bpshz) << std::setw(24)
                << format_double(stats.scheme(s).stderr_bpshz) << decoded(s) << "\n";
        }
        out << "interference-free mean rate: "
            << format_double(stats.mean_interference_free_rate_bpshz) << "\n";
        out << "dominance fractions: "
            << "QF1>DF " << format_double(stats.frac_qf1_over_df) << ", DF>QF1 "
            << format_double(stats.frac_df_over_qf1) << ", QF2>DF "
            << format_double(stats.frac_qf2_over_df) << ", QF2>QF1 "
            << format_double(stats.frac_qf2_over_qf1) << "\n";
        return kExitOk;
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::ios_base::failure& e) {
        err << "io error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitIo;
    }
}

}  // namespace uavcic
