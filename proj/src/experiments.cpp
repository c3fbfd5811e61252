#include "vaoi/experiments.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <stdexcept>

#include "vaoi/kernel.hpp"
#include "vaoi/network.hpp"
#include "vaoi/parallel.hpp"
#include "vaoi/solver.hpp"

namespace vaoi {

namespace {

std::string num_full(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string num_short(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%g", x);
    return buf;
}

std::ofstream open_output(const std::string& dir, const std::string& name) {
    std::filesystem::create_directories(dir);
    const std::string path = (std::filesystem::path(dir) / name).string();
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    return out;
}

std::string output_path(const std::string& dir, const std::string& name) {
    return (std::filesystem::path(dir) / name).string();
}

SystemParams with_beta(SystemParams params, double beta) {
    params.p_energy = beta;
    return validate_params(params);
}

PolicyTable named_policy(const ExperimentSpec& spec, const SystemParams& params) {
    if (spec.eval_policy == "optimal")
        return solve_rvia(build_kernel(params)).policy;
    if (spec.eval_policy == "greedy") return greedy_policy(params);
    if (spec.eval_policy == "rs") return rs_policy(params, spec.eval_alpha);
    throw std::invalid_argument("unknown policy name: " + spec.eval_policy);
}

}  // namespace

ExperimentSpec spec_from_config(const Config& cfg, ExperimentKind kind, std::string out_dir) {
    ExperimentSpec spec;
    spec.kind = kind;
    spec.params = params_from_config(cfg);
    spec.out_dir = std::move(out_dir);

    if (kind == ExperimentKind::beta_sweep) {
        spec.beta_grid = cfg.get_double_list("sweep.beta");
        if (spec.beta_grid.empty()) throw std::invalid_argument("sweep.beta grid is empty");
        for (double beta : spec.beta_grid) with_beta(spec.params, beta);  // range-check every point
        spec.alpha_grid = cfg.has("sweep.alpha") ? cfg.get_double_list("sweep.alpha")
                                                 : std::vector<double>{0.1, 0.2, 0.3};
        if (spec.alpha_grid.empty()) throw std::invalid_argument("sweep.alpha grid is empty");
        for (double alpha : spec.alpha_grid)
            if (!(alpha >= 0.0 && alpha <= 1.0))
                throw std::invalid_argument("alpha must lie in [0,1]");
    }

    if (kind == ExperimentKind::horizon_error) {
        spec.horizon_grid = cfg.get_int_list("sweep.T");
        if (spec.horizon_grid.empty()) throw std::invalid_argument("sweep.T grid is empty");
        for (int horizon : spec.horizon_grid) {
            SystemParams p = spec.params;
            p.horizon = horizon;
            validate_params(p);
        }
    }

    if (kind == ExperimentKind::evaluate) {
        spec.eval_policy = cfg.get_string("evaluate.policy", "optimal");
        if (spec.eval_policy != "optimal" && spec.eval_policy != "greedy" &&
            spec.eval_policy != "rs")
            throw std::invalid_argument("unknown policy name: " + spec.eval_policy);
        spec.eval_alpha = cfg.get_double("evaluate.alpha", 0.3);
        if (!(spec.eval_alpha >= 0.0 && spec.eval_alpha <= 1.0))
            throw std::invalid_argument("alpha must lie in [0,1]");
    }

    return spec;
}

std::vector<SweepRow> beta_sweep_rows(const ExperimentSpec& spec) {
    if (spec.beta_grid.empty()) throw std::invalid_argument("sweep.beta grid is empty");
    std::vector<SweepRow> rows;
    for (double beta : spec.beta_grid) {
        const SystemParams at_beta = with_beta(spec.params, beta);

        const SolverResult solved = solve_rvia(build_kernel(at_beta));
        rows.push_back({"optimal", beta, std::nullopt, evaluate_policy(at_beta, solved.policy)});
        rows.push_back({"greedy", beta, std::nullopt, evaluate_policy(at_beta, greedy_policy(at_beta))});
        for (double alpha : spec.alpha_grid)
            rows.push_back({"rs", beta, alpha, evaluate_policy(at_beta, rs_policy(at_beta, alpha))});
    }
    return rows;
}

std::vector<HorizonRow> horizon_error_rows(const ExperimentSpec& spec) {
    if (spec.horizon_grid.empty()) throw std::invalid_argument("sweep.T grid is empty");
    const SolverResult solved = solve_rvia(build_kernel(spec.params));

    std::vector<HorizonRow> rows;
    for (int horizon : spec.horizon_grid) {
        SystemParams at_horizon = spec.params;
        at_horizon.horizon = horizon;
        validate_params(at_horizon);

        const int runs = at_horizon.mc_iterations;
        std::vector<double> exact(static_cast<std::size_t>(runs));
        std::vector<double> approx(static_cast<std::size_t>(runs));
        parallel_for(runs, 0, [&](int j) {
            RunRngs rngs = RunRngs::for_run(at_horizon.rng_seed, static_cast<std::uint64_t>(j));
            const LinkTrace trace = simulate_link(at_horizon, solved.policy, rngs);
            const std::vector<double> raw = trace.raw_vaoi_sequence_d();
            exact[static_cast<std::size_t>(j)] = network_avg_exact(raw, at_horizon);
            approx[static_cast<std::size_t>(j)] =
                network_avg_approx(trace.time_avg_raw_vaoi(), at_horizon);
        });

        KahanSum se, sa;
        for (double x : exact) se.add(x);
        for (double x : approx) sa.add(x);
        HorizonRow row;
        row.horizon = horizon;
        row.exact_mean = se.value() / runs;
        row.approx_mean = sa.value() / runs;
        row.rel_error_pct = row.exact_mean != 0.0
                                ? 100.0 * std::abs(row.approx_mean - row.exact_mean) / row.exact_mean
                                : (row.approx_mean == 0.0 ? 0.0
                                                          : std::numeric_limits<double>::infinity());
        rows.push_back(row);
    }
    return rows;
}

void write_beta_sweep_csv(const std::vector<SweepRow>& rows, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << "policy,beta,alpha,avg_vaoi_cs,avg_vaoi_network,se,updates,energy,"
           "avg_vaoi_network_exact,avg_vaoi_network_approx\n";
    for (const SweepRow& r : rows) {
        out << r.policy << ',' << num_short(r.beta) << ',';
        if (r.alpha) out << num_short(*r.alpha);
        out << ',' << num_full(r.metrics.cs_avg.mean) << ',' << num_full(r.metrics.network_avg.mean)
            << ',' << num_full(r.metrics.network_avg.se) << ',' << num_full(r.metrics.updates_mean)
            << ',' << num_full(r.metrics.energy_mean) << ','
            << num_full(r.metrics.network_exact.mean) << ','
            << num_full(r.metrics.network_approx.mean) << '\n';
    }
}

void write_horizon_error_csv(const std::vector<HorizonRow>& rows, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << "T,avg_vaoi_exact,avg_vaoi_approx,rel_error_pct\n";
    for (const HorizonRow& r : rows)
        out << r.horizon << ',' << num_full(r.exact_mean) << ',' << num_full(r.approx_mean) << ','
            << num_full(r.rel_error_pct) << '\n';
}

void run_solve(const ExperimentSpec& spec) {
    const SolverResult solved = solve_rvia(build_kernel(spec.params));
    std::filesystem::create_directories(spec.out_dir);
    write_policy_csv(solved.policy, output_path(spec.out_dir, "policy.csv"));
    write_values_csv(solved.policy.space, solved.relative_values,
                     output_path(spec.out_dir, "values.csv"));
    std::cout << "average VAoI at the connected satellite: " << num_full(solved.average_cost)
              << " (" << solved.iterations_used << " iterations, span " << num_short(solved.span_at_exit)
              << ")\n";
}

void run_structure(const ExperimentSpec& spec) {
    const SolverResult solved = solve_rvia(build_kernel(spec.params));
    const ThresholdStructure ths = extract_thresholds(solved.policy);
    std::filesystem::create_directories(spec.out_dir);
    write_policy_csv(solved.policy, output_path(spec.out_dir, "structure.csv"));
    write_thresholds_csv(ths, output_path(spec.out_dir, "thresholds.csv"));
    if (!ths.is_threshold())
        std::cerr << "warning: solved policy is not of threshold type (first break at b="
                  << ths.violation->battery << ", delta=" << ths.violation->vaoi << ")\n";
    std::cout << "wrote structure.csv and thresholds.csv to " << spec.out_dir << '\n';
}

void run_beta_sweep(const ExperimentSpec& spec) {
    const std::vector<SweepRow> rows = beta_sweep_rows(spec);
    std::filesystem::create_directories(spec.out_dir);
    write_beta_sweep_csv(rows, output_path(spec.out_dir, "beta_sweep.csv"));
    std::cout << "wrote beta_sweep.csv (" << rows.size() << " rows) to " << spec.out_dir << '\n';
}

void run_horizon_error(const ExperimentSpec& spec) {
    const std::vector<HorizonRow> rows = horizon_error_rows(spec);
    std::filesystem::create_directories(spec.out_dir);
    write_horizon_error_csv(rows, output_path(spec.out_dir, "horizon_error.csv"));
    std::cout << "wrote horizon_error.csv (" << rows.size() << " rows) to " << spec.out_dir << '\n';
}

void run_evaluate(const ExperimentSpec& spec) {
    const PolicyTable policy = named_policy(spec, spec.params);
    const MetricsSummary metrics = evaluate_policy(spec.params, policy);

    std::vector<SweepRow> rows;
    rows.push_back({spec.eval_policy, spec.params.p_energy,
                    spec.eval_policy == "rs" ? std::optional<double>(spec.eval_alpha) : std::nullopt,
                    metrics});
    std::filesystem::create_directories(spec.out_dir);
    write_beta_sweep_csv(rows, output_path(spec.out_dir, "metrics.csv"));

    {
        std::ofstream out = open_output(spec.out_dir, "nodes.csv");
        out << "n,avg_vaoi_exact,avg_vaoi_approx\n";
        const int half = spec.params.ring_n / 2;
        for (int node = -half; node <= half; ++node) {
            const double exact = metrics.hop_exact[static_cast<std::size_t>(std::abs(node))].mean;
            const double approx = node_avg_approx(metrics.cs_raw_avg.mean, node, spec.params);
            out << node << ',' << num_full(exact) << ',' << num_full(approx) << '\n';
        }
    }

    if (spec.dump_trace) {
        RunRngs rngs = RunRngs::for_run(spec.params.rng_seed, 0);
        const LinkTrace trace = simulate_link(spec.params, policy, rngs);
        std::ofstream out = open_output(spec.out_dir, "trace.csv");
        out << "t,b,a,e,c,z,delta0\n";
        for (int t = 0; t < trace.slots(); ++t)
            out << t << ',' << trace.battery[static_cast<std::size_t>(t)] << ','
                << int(trace.action[static_cast<std::size_t>(t)]) << ','
                << int(trace.energy[static_cast<std::size_t>(t)]) << ','
                << int(trace.channel[static_cast<std::size_t>(t)]) << ','
                << int(trace.version[static_cast<std::size_t>(t)]) << ','
                << trace.vaoi[static_cast<std::size_t>(t)] << '\n';
    }

    std::cout << "policy " << spec.eval_policy << ": CS average "
              << num_full(metrics.cs_avg.mean) << " +- " << num_short(metrics.cs_avg.se)
              << ", network average " << num_full(metrics.network_avg.mean) << " +- "
              << num_short(metrics.network_avg.se) << '\n';
}

}  // namespace vaoi
