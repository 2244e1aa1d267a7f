#include <optional>
#include <string>

#include <CLI11.hpp>

#include "smenc/pipeline.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Rigorous slow-manifold enclosures for slow-fast systems"};
    app.require_subcommand(1);

    int threads = 0;
    long seed = 0;
    app.add_option("--threads", threads, "Worker threads for independent epsilon runs");
    app.add_option("--seed", seed,
                   "Reserved; the pipeline is deterministic and ignores it");

    std::string enclose_config, enclose_out;
    CLI::App* enclose = app.add_subcommand("enclose", "Enclose one epsilon and export surfaces");
    enclose->add_option("--config", enclose_config, "Configuration file")->required();
    enclose->add_option("--out", enclose_out, "Output directory")->required();

    std::string sweep_config, sweep_csv;
    bool no_tighten = false;
    double factor = 0.0;
    CLI::App* sweep = app.add_subcommand("sweep", "Run an epsilon sweep and write CSV");
    sweep->add_option("--config", sweep_config, "Configuration file")->required();
    sweep->add_option("--csv", sweep_csv, "Output CSV path")->required();
    sweep->add_flag("--no-tighten", no_tighten, "Skip the tightening phase");
    sweep->add_option("--factor", factor, "Override run.update_factor");

    CLI11_PARSE(app, argc, argv);

    smenc::CommandOverrides overrides;
    if (threads > 0) overrides.threads = threads;

    if (enclose->parsed())
        return smenc::cmd_enclose(enclose_config, enclose_out, overrides);

    if (no_tighten) overrides.tighten = false;
    if (factor > 0.0) overrides.update_factor = factor;
    return smenc::cmd_sweep(sweep_config, sweep_csv, overrides);
}
