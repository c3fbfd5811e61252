#pragma once

#include <string>
#include <vector>

#include "vaoi/params.hpp"
#include "vaoi/rng.hpp"
#include "vaoi/state.hpp"

namespace vaoi {

/// Stationary update policy: one transmit probability per state.
///
/// Deterministic policies hold only 0 or 1. Every empty-battery state is
/// pinned to probability 0 -- transmitting costs one energy unit, so it is
/// infeasible at battery 0.
struct PolicyTable {
    StateSpace space;
    std::vector<double> transmit_prob;

    double at(State s) const { return transmit_prob[space.index(s)]; }

    bool deterministic() const;
};

/// Transmit whenever the battery holds at least one unit.
PolicyTable greedy_policy(const SystemParams& params);

/// Randomized stationary policy: transmit with fixed probability alpha
/// whenever the battery is nonempty. rs_policy(p, 1.0) equals
/// greedy_policy(p) entry for entry. Throws for alpha outside [0,1].
PolicyTable rs_policy(const SystemParams& params, double alpha);

/// Deterministic table from per-state solver actions.
PolicyTable policy_from_actions(const StateSpace& space, const std::vector<Action>& actions);

/// Samples the policy at a state.
///
/// Never transmits from battery 0, whatever the table holds. Deterministic
/// entries (0 or 1) consume no randomness, so two policies with identical
/// tables produce identical trajectories under shared seeds.
Action act(const PolicyTable& policy, State s, RunRngs& rngs);

/// Writes "b,delta,action" rows (plus a probability column when the table is
/// randomized; the action column then carries the more likely action).
void write_policy_csv(const PolicyTable& policy, const std::string& path);

}  // namespace vaoi
