#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "vaoi/params.hpp"

namespace vaoi {

/// Count of source versions generated over a trailing window of `hops`
/// slots: a sum of `hops` Bernoulli(p) draws, so binomial with mean hops*p.
/// This is the extra staleness a node `hops` relay hops from the CS carries
/// on top of the (shifted) CS VAoI.
struct BinomialShift {
    int hops = 0;
    double p = 0.0;

    double mean() const { return hops * p; }
};

/// Reconstructs the VAoI sequence of the node `node` (signed ring index)
/// from the CS sequence and the source-version increments:
///
///   value(t) = sum of increments over slots (t-|node|, t] + cs(t - |node|)
///
/// where increments[t] is the source-version step between slots t-1 and t.
/// Slots before 0 follow the cold-start convention: increments read as 0 and
/// cs(t<0) reads as cs(0). The sequences must have equal length.
std::vector<std::int64_t> node_vaoi_from_cs(std::span<const std::int64_t> cs_vaoi, int node,
                                            std::span<const std::uint8_t> version_increments);

/// (1/T) * sum_t cs(t - hops) with the constant pre-history convention.
double shifted_time_average(std::span<const double> cs_vaoi, int hops);

/// Shifted time averages for every hop count 0..max_hops in one pass.
std::vector<double> shifted_time_averages(std::span<const double> cs_vaoi, int max_hops);

/// Time-average VAoI of the node `node`: the binomial mean |node| * p_g plus
/// the |node|-shifted CS time average.
double node_avg_exact(std::span<const double> cs_vaoi, int node, const SystemParams& params);

/// Large-horizon shortcut: |node| * p_g plus the unshifted CS time average.
double node_avg_approx(double cs_time_avg, int node, const SystemParams& params);

/// Mean over the ring of the per-node offsets |n| * p_g:
/// N(N+2) / (4(N+1)) * p_g.
double network_hop_offset(const SystemParams& params);

/// Network-average VAoI from the CS sequence: the hop offset plus the mean
/// over all N+1 nodes of their |n|-shifted CS time averages.
double network_avg_exact(std::span<const double> cs_vaoi, const SystemParams& params);

/// Large-horizon shortcut: the hop offset plus the unshifted CS time
/// average. The gap to network_avg_exact shrinks as the horizon grows past a
/// few multiples of N.
double network_avg_approx(double cs_time_avg, const SystemParams& params);

}  // namespace vaoi
