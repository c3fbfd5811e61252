#pragma once

#include <vector>

#include "vaoi/params.hpp"
#include "vaoi/state.hpp"

namespace vaoi {

/// One possible successor of a (state, action) pair. The per-transition cost
/// equals the successor's VAoI coordinate, so minimizing expected cost
/// minimizes the long-run average VAoI at the connected satellite.
struct Transition {
    int next = 0;       ///< successor state index
    double prob = 0.0;  ///< transition probability, > 0
    double cost = 0.0;  ///< VAoI of the successor state
};

/// Sparse transition model of the update problem.
///
/// Rows exist for every legal (state, action); transmitting on an empty
/// battery is illegal and its row stays empty. Each row's probabilities sum
/// to 1 and hold at most 8 successors (2 battery branches x 4 VAoI branches,
/// fewer after the cap merges duplicates).
struct TransitionKernel {
    StateSpace space;
    SystemParams params;
    std::vector<std::vector<Transition>> rows;  ///< indexed 2 * state + action

    const std::vector<Transition>& row(int state_index, Action a) const {
        return rows[2 * state_index + action_index(a)];
    }

    bool legal(int state_index, Action a) const {
        return a == Action::idle || space.state(state_index).battery > 0;
    }
};

/// Builds the kernel by crossing the battery branches with the VAoI branches.
///
/// Battery, idle: +1 unit with probability beta (saturating at B), unchanged
/// otherwise. Battery, transmit: unchanged with probability beta (the
/// harvested unit replaces the spent one), -1 otherwise.
///
/// VAoI, idle: +1 with probability p_g (saturating at Delta_max), unchanged
/// otherwise. VAoI, transmit: the four generation x channel outcomes --
/// success resets to the number of versions generated this slot (0 or 1),
/// failure behaves like idle.
TransitionKernel build_kernel(const SystemParams& params);

}  // namespace vaoi
