#pragma once

#include <cstdint>

namespace vaoi {

/// Scenario constants for the satellite-ring update problem.
///
/// The constellation is a bidirectional ring of N+1 satellites indexed
/// -N/2..N/2; node 0 is the connected satellite (CS) that an
/// energy-harvesting device on the ground keeps up to date. Instances that
/// passed validate_params() satisfy every range constraint noted below.
struct SystemParams {
    int ring_n = 64;             ///< N: ring holds N+1 satellites; must be even and >= 0.
    double p_generate = 0.3;     ///< p_g in [0,1]: per-slot probability the source emits a new version.
    double p_success = 0.5;      ///< p_s in (0,1]: per-slot device-to-CS transmission success probability.
    double p_energy = 0.1;       ///< beta in [0,1]: per-slot probability one energy unit is harvested.
    int battery_capacity = 20;   ///< B >= 1: energy units the device battery can hold.
    int vaoi_cap = 30;           ///< Delta_max >= 1: truncation of the version-AoI state coordinate.
    int horizon = 3000;          ///< T >= 1: slots per simulated trace.
    int mc_iterations = 2000;    ///< Monte Carlo runs per evaluation; >= 1 (>= 2 for standard errors).
    std::uint64_t rng_seed = 1;  ///< master seed; per-run, per-process streams derive from it.
};

/// Checks every SystemParams constraint and returns the record unchanged.
/// Throws std::invalid_argument naming the offending field, e.g.
/// "N must be even" or "degenerate channel: p_s must be positive".
SystemParams validate_params(const SystemParams& raw);

}  // namespace vaoi
