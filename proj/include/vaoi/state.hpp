#pragma once

namespace vaoi {

/// MDP state of the device/CS link: battery fill and the truncated
/// version-AoI of the connected satellite.
struct State {
    int battery = 0;
    int vaoi = 0;

    friend bool operator==(const State&, const State&) = default;
};

/// The device either idles or spends one energy unit on a transmission.
enum class Action : int { idle = 0, transmit = 1 };

inline int action_index(Action a) { return static_cast<int>(a); }

/// Dense enumeration of the (B+1) x (Delta_max+1) state grid, battery major.
struct StateSpace {
    int battery_capacity = 0;
    int vaoi_cap = 0;

    int size() const { return (battery_capacity + 1) * (vaoi_cap + 1); }

    int index(State s) const { return s.battery * (vaoi_cap + 1) + s.vaoi; }

    State state(int idx) const { return {idx / (vaoi_cap + 1), idx % (vaoi_cap + 1)}; }

    bool contains(State s) const {
        return s.battery >= 0 && s.battery <= battery_capacity && s.vaoi >= 0 &&
               s.vaoi <= vaoi_cap;
    }

    friend bool operator==(const StateSpace&, const StateSpace&) = default;
};

}  // namespace vaoi
