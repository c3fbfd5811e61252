// Acceptance checks for the update-policy toolkit. Each criterion prints the
// measured quantities and one [PASS]/[FAIL] verdict line; the exit code is
// the number of failed criteria.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "vaoi/experiments.hpp"
#include "vaoi/kernel.hpp"
#include "vaoi/network.hpp"
#include "vaoi/sim.hpp"
#include "vaoi/solver.hpp"
#include "vaoi/stats.hpp"

using namespace vaoi;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void verdict(bool ok, const std::string& what) {
    std::cout << (ok ? "  [PASS] " : "  [FAIL] ") << what << '\n';
    if (!ok) ++failures;
}

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void banner(int index, const std::string& title) {
    std::cout << "\n=== Criterion " << index << ": " << title << " ===\n";
}

// Shared scenario: ring of 65 satellites, p_g=0.3, p_s=0.5, B=20,
// delta cap 30, beta=0.1, T=3000, 2000 Monte Carlo runs.
SystemParams defaults() { return SystemParams{}; }

}  // namespace

static void criterion_1_threshold_structure() {
    banner(1, "optimal policy has battery-monotone VAoI thresholds");
    const auto start = Clock::now();
    const SolverResult solved = solve_rvia(build_kernel(defaults()));
    const double elapsed = seconds_since(start);
    const ThresholdStructure ths = extract_thresholds(solved.policy);

    std::cout << "  solved in " << elapsed << " s (" << solved.iterations_used
              << " iterations), average VAoI " << solved.average_cost << '\n';
    std::cout << "  thresholds by battery level:";
    for (const auto& th : ths.threshold)
        if (th)
            std::cout << ' ' << *th;
        else
            std::cout << " inf";
    std::cout << '\n';

    verdict(ths.is_threshold(), "every battery level acts by a VAoI threshold");
    verdict(ths.non_increasing_in_battery(), "thresholds never grow with battery level");
    verdict(elapsed < 10.0, "solver finished in under 10 s");
}

static void criterion_2_solver_simulator_consistency() {
    banner(2, "solver average cost matches the simulated CS time average");
    const SystemParams p = defaults();
    const SolverResult solved = solve_rvia(build_kernel(p));

    // Warm-started Monte Carlo: simulate warmup + measurement slots and
    // average the VAoI state over the final `window` slots, so the estimate
    // targets the same long-run average the solver reports.
    const int window = p.horizon;  // 3000
    const int warmup = p.horizon;
    SystemParams sim = p;
    sim.horizon = warmup + window;

    std::vector<double> run_avg(static_cast<std::size_t>(p.mc_iterations));
    for (int j = 0; j < p.mc_iterations; ++j) {
        RunRngs rngs = RunRngs::for_run(p.rng_seed, static_cast<std::uint64_t>(j));
        const LinkTrace tr = simulate_link(sim, solved.policy, rngs);
        long long sum = 0;
        for (int t = warmup; t < warmup + window; ++t)
            sum += tr.vaoi[static_cast<std::size_t>(t)];
        run_avg[static_cast<std::size_t>(j)] = static_cast<double>(sum) / window;
    }
    const MeanSe mc = mean_se(run_avg);
    const double diff = std::abs(solved.average_cost - mc.mean);

    std::cout << "  solver average " << solved.average_cost << ", Monte Carlo "
              << mc.mean << " +- " << mc.se << " (" << p.mc_iterations << " runs x " << window
              << " slots), |diff| = " << diff << " = " << diff / mc.se << " SE\n";
    verdict(diff <= 3.0 * mc.se, "agreement within 3 standard errors");
}

static void criterion_3_dissemination_identity() {
    banner(3, "flooding simulator equals the analytic per-node decomposition");
    SystemParams p = defaults();
    p.ring_n = 8;
    p.horizon = 200;
    p.p_energy = 0.5;
    const PolicyTable pol = rs_policy(p, 0.5);

    const int seeds = 100;
    long long mismatches = 0;
    long long compared = 0;
    for (int run = 0; run < seeds; ++run) {
        RunRngs rngs = RunRngs::for_run(2025, static_cast<std::uint64_t>(run));
        const RingTrace ring = simulate_ring(p, pol, rngs);
        const auto cs = ring.link.raw_vaoi_sequence();
        const auto inc = ring.link.version_increments();
        for (int node = -p.ring_n / 2; node <= p.ring_n / 2; ++node) {
            const auto analytic = node_vaoi_from_cs(cs, node, inc);
            const auto simulated = ring.node_vaoi(node);
            for (int t = 0; t < p.horizon; ++t) {
                ++compared;
                if (analytic[static_cast<std::size_t>(t)] != simulated[static_cast<std::size_t>(t)])
                    ++mismatches;
            }
        }
    }
    std::cout << "  compared " << compared << " node-slot values over " << seeds
              << " seeds, mismatches: " << mismatches << '\n';
    verdict(mismatches == 0, "slot-exact equality across 100 seeds (zero tolerance)");
}

static void criterion_4_constant_trace_closed_form() {
    banner(4, "closed-form network average on a constant CS sequence");
    const SystemParams p = defaults();
    const double offset = network_hop_offset(p);
    const double expected_offset = 4.873846153846154;  // N(N+2)/(4(N+1)) * p_g at N=64, p_g=0.3

    const double c = 2.5;
    const std::vector<double> trace(300, c);
    const double exact = network_avg_exact(trace, p);

    std::cout << "  hop offset " << offset << " (expected " << expected_offset
              << "), constant " << c << ", network average " << exact << '\n';
    verdict(std::abs(offset - expected_offset) < 1e-12, "hop offset matches the closed form");
    verdict(std::abs(exact - (offset + c)) < 1e-9, "constant sequence shifts into offset + c");
}

static void criterion_5_horizon_error_bounds() {
    banner(5, "large-horizon shortcut error bounds at T = 2N and T = 10N");
    ExperimentSpec spec;
    spec.kind = ExperimentKind::horizon_error;
    spec.params = defaults();
    spec.horizon_grid = {2 * spec.params.ring_n, 10 * spec.params.ring_n};  // 128, 640
    const std::vector<HorizonRow> rows = horizon_error_rows(spec);

    for (const HorizonRow& r : rows)
        std::cout << "  T = " << r.horizon << ": exact " << r.exact_mean << ", approx "
                  << r.approx_mean << ", relative error " << r.rel_error_pct << " %\n";
    verdict(rows[0].rel_error_pct < 12.0, "error below 12% at T = 2N");
    verdict(rows[1].rel_error_pct < 3.0, "error below 3% at T = 10N");
}

static void criteria_6_7_8_beta_sweep() {
    ExperimentSpec spec;
    spec.kind = ExperimentKind::beta_sweep;
    spec.params = defaults();
    spec.beta_grid = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
    spec.alpha_grid = {0.3, 1.0};

    banner(8, "desk-scale energy sweep runtime");
    const auto start = Clock::now();
    const std::vector<SweepRow> rows = beta_sweep_rows(spec);
    const auto out_dir = std::filesystem::temp_directory_path() / "vaoi_acceptance_sweep";
    std::filesystem::create_directories(out_dir);
    write_beta_sweep_csv(rows, (out_dir / "beta_sweep.csv").string());
    const double elapsed = seconds_since(start);
    std::cout << "  " << rows.size() << " sweep rows (9 energy rates x 4 policies, 2000 runs x "
              << spec.params.horizon << " slots each) in " << elapsed << " s\n";
    verdict(elapsed < 600.0, "full sweep in under 10 minutes");

    banner(6, "policy ordering across the energy sweep");
    const std::size_t per_beta = 4;  // optimal, greedy, rs(0.3), rs(1.0)
    bool optimal_ok = true;
    bool greedy_ok = true;
    bool rs1_ok = true;
    for (std::size_t k = 0; k < spec.beta_grid.size(); ++k) {
        const SweepRow& opt = rows[k * per_beta + 0];
        const SweepRow& greedy = rows[k * per_beta + 1];
        const SweepRow& rs03 = rows[k * per_beta + 2];
        const SweepRow& rs10 = rows[k * per_beta + 3];

        const double m_og = 3.0 * std::sqrt(opt.metrics.network_avg.se * opt.metrics.network_avg.se +
                                            greedy.metrics.network_avg.se * greedy.metrics.network_avg.se);
        const double m_gr = 3.0 * std::sqrt(greedy.metrics.network_avg.se * greedy.metrics.network_avg.se +
                                            rs03.metrics.network_avg.se * rs03.metrics.network_avg.se);
        const bool opt_le = opt.metrics.network_avg.mean <= greedy.metrics.network_avg.mean + m_og;
        const bool greedy_le = greedy.metrics.network_avg.mean <= rs03.metrics.network_avg.mean + m_gr;
        const bool rs1_eq = rs10.metrics.cs_avg.mean == greedy.metrics.cs_avg.mean &&
                            rs10.metrics.cs_avg.se == greedy.metrics.cs_avg.se &&
                            rs10.metrics.network_avg.mean == greedy.metrics.network_avg.mean &&
                            rs10.metrics.network_avg.se == greedy.metrics.network_avg.se &&
                            rs10.metrics.network_exact.mean == greedy.metrics.network_exact.mean &&
                            rs10.metrics.updates_mean == greedy.metrics.updates_mean;

        std::printf("  beta %.1f: optimal %.4f, greedy %.4f, rs(0.3) %.4f, rs(1.0) %.4f\n",
                    opt.beta, opt.metrics.network_avg.mean, greedy.metrics.network_avg.mean,
                    rs03.metrics.network_avg.mean, rs10.metrics.network_avg.mean);

        optimal_ok = optimal_ok && opt_le;
        if (opt.beta >= 0.5) greedy_ok = greedy_ok && greedy_le;
        rs1_ok = rs1_ok && rs1_eq;
    }
    verdict(optimal_ok, "optimal <= greedy + 3 SE at every energy rate");
    verdict(greedy_ok, "greedy <= rs(0.3) + 3 SE at every energy rate >= 0.5");
    verdict(rs1_ok, "rs(1.0) reproduces greedy exactly under shared seeds");

    banner(7, "half the energy with comparable network freshness");
    const SweepRow& opt_01 = rows[0 * per_beta + 0];
    const SweepRow& greedy_02 = rows[1 * per_beta + 1];
    const double a = opt_01.metrics.network_avg.mean;
    const double b = greedy_02.metrics.network_avg.mean;
    std::cout << "  optimal at beta 0.1: " << a << ", greedy at beta 0.2: " << b
              << ", relative gap " << 100.0 * std::abs(a - b) / b << " %\n";
    verdict(std::abs(a - b) <= 0.2 * b, "optimal at half the energy stays within 20%");
    verdict(a >= 6.4 && a <= 9.6 && b >= 6.4 && b <= 9.6, "both sit near level 8 (within 20%)");
}

int main() {
    std::cout << "Acceptance checks: semantics-aware update policy toolkit\n";
    const auto start = Clock::now();

    criterion_1_threshold_structure();
    criterion_2_solver_simulator_consistency();
    criterion_3_dissemination_identity();
    criterion_4_constant_trace_closed_form();
    criterion_5_horizon_error_bounds();
    criteria_6_7_8_beta_sweep();

    std::cout << "\nTotal runtime: " << seconds_since(start) << " s\n";
    if (failures == 0)
        std::cout << "ACCEPTANCE: all criteria passed\n";
    else
        std::cout << "ACCEPTANCE: " << failures << " check(s) failed\n";
    return failures;
}
