#include <iostream>

#include "CLI11.hpp"
#include "uavcic/commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Link-level simulator for uplink UAV interference cancellation"};
    app.require_subcommand(1);

    uavcic::SingleArgs single_args;
    CLI::App* single = app.add_subcommand(
        "single", "Run one trial batch and print per-scheme statistics");
    single->add_option("--config", single_args.config_path, "Scenario config (JSON)");
    single->add_option("--seed", single_args.seed, "Override the RNG seed");
    single->add_option("--trials", single_args.trials, "Override the trial count");
    single->add_option("--threads", single_args.threads, "Worker threads")
        ->check(CLI::PositiveNumber);

    uavcic::SweepArgs sweep_args;
    CLI::App* sweep = app.add_subcommand(
        "sweep", "Sweep one scenario variable and write a CSV plus its manifest");
    sweep->add_option("--config", sweep_args.config_path, "Scenario config (JSON)");
    sweep->add_option("--manifest", sweep_args.manifest_path,
                      "Re-run the sweep recorded in this manifest");
    sweep->add_option("--out", sweep_args.out_path, "Output CSV path");
    sweep->add_option("--var", sweep_args.var, "Swept variable: ru, pu_dbm, distance_m, bits");
    sweep->add_option("--from", sweep_args.from, "First grid value");
    sweep->add_option("--to", sweep_args.to, "Last grid value");
    sweep->add_option("--steps", sweep_args.steps, "Number of grid points");
    sweep->add_option("--list", sweep_args.list, "Explicit comma-separated grid");
    sweep->add_option("--seed", sweep_args.seed, "Override the RNG seed");
    sweep->add_option("--trials", sweep_args.trials, "Override the trial count");
    sweep->add_option("--threads", sweep_args.threads, "Worker threads")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : uavcic::kExitUsage;
    }

    if (single->parsed()) {
        return uavcic::cmd_single(single_args, std::cout, std::cerr);
    }
    return uavcic::cmd_sweep(sweep_args, std::cerr);
}
