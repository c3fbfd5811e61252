#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vaoi/kernel.hpp"
#include "vaoi/policy.hpp"
#include "vaoi/state.hpp"

namespace vaoi {

/// One Bellman sweep over all states.
struct BellmanResult {
    std::vector<double> values;  ///< (T h)(s): minimal expected cost-plus-continuation
    std::vector<Action> greedy;  ///< argmin actions; exact ties prefer idle
};

/// Applies the average-cost Bellman operator (T h)(s) = min_a sum_s' P(s'|s,a)
/// * (cost(s,a,s') + h(s')) over the legal actions of each state.
BellmanResult bellman_apply(const TransitionKernel& kernel, const std::vector<double>& h);

struct SolverResult {
    PolicyTable policy;                   ///< optimal deterministic policy
    double average_cost = 0.0;            ///< optimal long-run average VAoI at the CS
    std::vector<double> relative_values;  ///< differential value function, 0 at the reference
    int iterations_used = 0;
    double span_at_exit = 0.0;
};

/// Relative value iteration for the long-run average-cost criterion.
///
/// Iterates h <- T h - (T h)(reference) from h = 0 and stops once the span
/// (max minus min) of T h - h falls below `tolerance`; the average cost
/// reported is (T h)(reference) at exit. Throws std::runtime_error if the
/// span test still fails after `max_iterations` sweeps.
SolverResult solve_rvia(const TransitionKernel& kernel, double tolerance = 1e-9,
                        int max_iterations = 100000, State reference = {0, 0});

/// Per-battery threshold view of a deterministic policy.
struct ThresholdStructure {
    /// threshold[b] = smallest VAoI at which battery level b transmits;
    /// nullopt means level b never transmits (an infinite threshold).
    std::vector<std::optional<int>> threshold;

    /// First (battery, vaoi) where the action map is not non-decreasing in
    /// the VAoI coordinate, if any.
    std::optional<State> violation;

    bool is_threshold() const { return !violation.has_value(); }

    /// True when thresholds never grow with battery level (never-transmit
    /// levels count as +infinity).
    bool non_increasing_in_battery() const;
};

/// Scans a deterministic policy battery level by battery level. Requires a
/// deterministic table; throws std::invalid_argument otherwise.
ThresholdStructure extract_thresholds(const PolicyTable& policy);

/// Exact expected time-average VAoI at the CS over slots 0..horizon-1 for a
/// (possibly randomized) policy, starting from `start`: pushes the state
/// distribution forward one slot at a time. Independent of the simulator;
/// useful as a bias-free cross-check of Monte Carlo estimates.
double policy_finite_avg(const TransitionKernel& kernel, const PolicyTable& policy, int horizon,
                         State start = {0, 0});

/// Writes "b,delta,h" rows of a differential value function.
void write_values_csv(const StateSpace& space, const std::vector<double>& values,
                      const std::string& path);

/// Writes "b,threshold" rows; never-transmit levels emit "inf".
void write_thresholds_csv(const ThresholdStructure& ths, const std::string& path);

}  // namespace vaoi
