#pragma once

#include <cstdint>
#include <vector>

#include "vaoi/params.hpp"
#include "vaoi/policy.hpp"
#include "vaoi/rng.hpp"
#include "vaoi/state.hpp"
#include "vaoi/stats.hpp"

namespace vaoi {

/// Cold-start override for a simulated trace. The default (0, 0) starts with
/// an empty battery and a fresh CS. A nonzero vaoi seeds both the truncated
/// state and the raw version gap.
struct InitialState {
    int battery = 0;
    int vaoi = 0;
};

/// Slot-by-slot record of the device/CS link: the state observed at t plus
/// the action and draws consumed during slot t, for t = 0..T-1.
struct LinkTrace {
    std::vector<int> battery;
    std::vector<std::uint8_t> action;
    std::vector<std::uint8_t> energy;
    std::vector<std::uint8_t> channel;
    std::vector<std::uint8_t> version;
    std::vector<int> vaoi;                     ///< truncated MDP state
    std::vector<std::int64_t> source_version;  ///< V_S(t), untruncated counter
    std::vector<std::int64_t> cs_version;      ///< V_0(t), untruncated counter

    int slots() const { return static_cast<int>(vaoi.size()); }

    /// Untruncated CS VAoI: V_S(t) - V_0(t).
    std::int64_t raw_vaoi(int t) const { return source_version[t] - cs_version[t]; }

    std::vector<std::int64_t> raw_vaoi_sequence() const;
    std::vector<double> raw_vaoi_sequence_d() const;

    /// Per-slot source-version increments V_S(t) - V_S(t-1); 0 at t = 0.
    std::vector<std::uint8_t> version_increments() const;

    double time_avg_vaoi() const;      ///< truncated state, matches the MDP cost
    double time_avg_raw_vaoi() const;  ///< untruncated version gap
    long updates_attempted() const;    ///< transmissions, i.e. energy units spent
};

/// Simulates the device/CS link for params.horizon slots.
///
/// Per slot: sample the action from the policy at the truncated state, draw
/// (e, c, z), then step -- a successful transmission delivers the current
/// source version, the counters advance by z, the battery gains e and spends
/// one unit per transmission (saturating at B).
LinkTrace simulate_link(const SystemParams& params, const PolicyTable& policy, RunRngs& rngs,
                        InitialState init = {});

/// Full constellation record: the CS link trace plus every satellite's
/// stored version per slot.
struct RingTrace {
    int ring_n = 0;
    LinkTrace link;
    std::vector<std::int64_t> node_version;  ///< (N+1) rows x T columns; row = node + N/2

    int node_count() const { return ring_n + 1; }

    std::int64_t version_at(int node, int t) const;

    /// VAoI of a node: source version minus its stored version (untruncated).
    std::int64_t vaoi_at(int node, int t) const;

    std::vector<std::int64_t> node_vaoi(int node) const;

    double node_time_avg(int node) const;
};

/// Simulates the CS link and floods versions around the ring by neighbor
/// relay: each slot every satellite forwards its stored version one hop in
/// both directions and keeps the freshest version it holds or receives.
/// Deliberately implemented by message passing, not by shifting the CS
/// sequence, so it can serve as an independent check of the analytic
/// decomposition in node_vaoi_from_cs.
RingTrace simulate_ring(const SystemParams& params, const PolicyTable& policy, RunRngs& rngs,
                        InitialState init = {});

/// Monte Carlo aggregate over params.mc_iterations independent runs.
/// Means and standard errors are taken across runs.
struct MetricsSummary {
    int iterations = 0;

    MeanSe cs_avg;          ///< time-average truncated CS VAoI (the MDP objective)
    MeanSe cs_raw_avg;      ///< time-average untruncated CS version gap
    MeanSe network_avg;     ///< mean over nodes of measured per-node time averages
    MeanSe network_exact;   ///< closed-form network average of the raw CS sequence
    MeanSe network_approx;  ///< hop offset + raw CS time average

    std::vector<MeanSe> node_avg;    ///< measured per node; row = node + N/2
    std::vector<MeanSe> hop_exact;   ///< closed-form per hop count 0..N/2

    double updates_mean = 0.0;  ///< transmissions attempted per run
    double energy_mean = 0.0;   ///< energy units consumed per run (= transmissions)
};

/// Runs the ring simulation params.mc_iterations times (run j uses streams
/// derived from (params.rng_seed, j)) and aggregates. Requires
/// mc_iterations >= 2. Bit-reproducible for a fixed seed and any worker
/// count; workers == 0 uses the hardware concurrency.
MetricsSummary evaluate_policy(const SystemParams& params, const PolicyTable& policy,
                               InitialState init = {}, int workers = 0);

}  // namespace vaoi
