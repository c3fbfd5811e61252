#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "vaoi/config.hpp"
#include "vaoi/experiments.hpp"

namespace {

struct VerbOptions {
    std::string config_path;
    std::string out_dir = ".";
    bool dump_trace = false;
};

CLI::App* add_verb(CLI::App& app, VerbOptions& opts, const std::string& name,
                   const std::string& description) {
    CLI::App* verb = app.add_subcommand(name, description);
    verb->add_option("--config", opts.config_path, "scenario/experiment config file (INI)")
        ->required();
    verb->add_option("--out", opts.out_dir, "output directory for CSV files (default: .)");
    return verb;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"update-policy toolkit for an energy-harvesting device feeding a satellite ring"};
    app.require_subcommand(1);

    VerbOptions opts;
    CLI::App* solve = add_verb(app, opts, "solve", "solve the optimal update policy");
    CLI::App* structure =
        add_verb(app, opts, "structure", "export the optimal policy's action map and thresholds");
    CLI::App* beta_sweep = add_verb(app, opts, "beta-sweep",
                                    "compare policies across energy arrival rates");
    CLI::App* horizon_error = add_verb(app, opts, "horizon-error",
                                       "closed-form vs large-horizon network average by trace length");
    CLI::App* evaluate = add_verb(app, opts, "evaluate", "Monte Carlo evaluation of one policy");
    evaluate->add_flag("--dump-trace", opts.dump_trace, "also write one per-slot link trace");

    CLI11_PARSE(app, argc, argv);

    try {
        const vaoi::Config cfg = vaoi::Config::from_file(opts.config_path);
        using vaoi::ExperimentKind;
        if (solve->parsed()) {
            vaoi::run_solve(vaoi::spec_from_config(cfg, ExperimentKind::solve, opts.out_dir));
        } else if (structure->parsed()) {
            vaoi::run_structure(vaoi::spec_from_config(cfg, ExperimentKind::structure, opts.out_dir));
        } else if (beta_sweep->parsed()) {
            vaoi::run_beta_sweep(vaoi::spec_from_config(cfg, ExperimentKind::beta_sweep, opts.out_dir));
        } else if (horizon_error->parsed()) {
            vaoi::run_horizon_error(
                vaoi::spec_from_config(cfg, ExperimentKind::horizon_error, opts.out_dir));
        } else if (evaluate->parsed()) {
            vaoi::ExperimentSpec spec =
                vaoi::spec_from_config(cfg, ExperimentKind::evaluate, opts.out_dir);
            spec.dump_trace = opts.dump_trace;
            vaoi::run_evaluate(spec);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
