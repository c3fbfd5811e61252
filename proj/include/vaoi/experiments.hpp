#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vaoi/config.hpp"
#include "vaoi/params.hpp"
#include "vaoi/sim.hpp"

namespace vaoi {

enum class ExperimentKind { solve, structure, beta_sweep, horizon_error, evaluate };

/// A fully resolved experiment: validated scenario constants, sweep grids,
/// and the output directory for the CSV files.
struct ExperimentSpec {
    ExperimentKind kind = ExperimentKind::solve;
    SystemParams params;
    std::vector<double> beta_grid;   ///< energy arrival rates for the sweep
    std::vector<double> alpha_grid;  ///< randomized-policy probabilities for the sweep
    std::vector<int> horizon_grid;   ///< trace lengths for the horizon-error study
    std::string out_dir = ".";
    std::string eval_policy = "optimal";  ///< "optimal" | "greedy" | "rs"
    double eval_alpha = 0.3;
    bool dump_trace = false;
};

/// Reads scenario + experiment keys from a config. Sweep kinds require their
/// grid ([sweep] beta / alpha / T); every grid value is validated against the
/// core parameter constraints before anything runs.
ExperimentSpec spec_from_config(const Config& cfg, ExperimentKind kind, std::string out_dir);

/// One sweep point: a policy evaluated at one energy arrival rate.
struct SweepRow {
    std::string policy;  ///< "optimal" | "greedy" | "rs"
    double beta = 0.0;
    std::optional<double> alpha;  ///< set for "rs" rows only
    MetricsSummary metrics;
};

/// Evaluates optimal (re-solved per beta), greedy, and RS(alpha) for every
/// alpha in the grid, at every beta in the grid.
std::vector<SweepRow> beta_sweep_rows(const ExperimentSpec& spec);

/// One horizon-error point: the closed-form network average against its
/// large-horizon shortcut, both averaged over the Monte Carlo runs.
struct HorizonRow {
    int horizon = 0;
    double exact_mean = 0.0;
    double approx_mean = 0.0;
    double rel_error_pct = 0.0;
};

/// Evaluates the formula pair under the optimal policy for every horizon in
/// the grid (the policy is solved once; only the trace length varies).
std::vector<HorizonRow> horizon_error_rows(const ExperimentSpec& spec);

void write_beta_sweep_csv(const std::vector<SweepRow>& rows, const std::string& path);
void write_horizon_error_csv(const std::vector<HorizonRow>& rows, const std::string& path);

/// CLI entry points. Each writes its CSV outputs under spec.out_dir and
/// lets validation/convergence errors propagate to the caller.
void run_solve(const ExperimentSpec& spec);           ///< policy.csv, values.csv
void run_structure(const ExperimentSpec& spec);       ///< structure.csv, thresholds.csv
void run_beta_sweep(const ExperimentSpec& spec);      ///< beta_sweep.csv
void run_horizon_error(const ExperimentSpec& spec);   ///< horizon_error.csv
void run_evaluate(const ExperimentSpec& spec);        ///< metrics.csv, nodes.csv [, trace.csv]

}  // namespace vaoi
