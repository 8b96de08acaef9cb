#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "uavcic/config.hpp"

namespace uavcic {

// Exit codes shared by the CLI commands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;   // bad flags, bad grid, bad variable
inline constexpr int kExitConfig = 3;  // malformed/out-of-range configuration
inline constexpr int kExitIo = 4;      // unreadable input, unwritable output

struct SweepArgs {
    std::string config_path;    // empty -> defaults
    std::string manifest_path;  // set -> rerun the recorded sweep
    std::string out_path;       // CSV destination (required unless manifest provides one)
    std::string var;
    std::optional<double> from;
    std::optional<double> to;
    std::optional<int> steps;
    std::string list;  // comma-separated explicit grid
    std::optional<std::uint64_t> seed;
    std::optional<int> trials;
    int threads = 1;
};

struct SingleArgs {
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::optional<int> trials;
    int threads = 1;
};

// Runs a sweep, writes the CSV (header
// `variable,value,scheme,mean_rate_bpshz,stderr,n_trials,seed`) and its
// manifest. Returns an exit code; diagnostics go to err.
int cmd_sweep(const SweepArgs& args, std::ostream& err);

// Runs the configured trial batch once and prints per-scheme mean rates,
// decode fractions and pairwise dominance fractions.
int cmd_single(const SingleArgs& args, std::ostream& out, std::ostream& err);

// Shortest decimal form that round-trips to the same double.
std::string format_double(double value);

}  // namespace uavcic
