#include "vaoi/network.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "vaoi/stats.hpp"

namespace vaoi {

namespace {

void require_node_in_ring(int node, const SystemParams& params) {
    if (std::abs(node) > params.ring_n / 2)
        throw std::out_of_range("node index outside the ring: " + std::to_string(node));
}

}  // namespace

std::vector<std::int64_t> node_vaoi_from_cs(std::span<const std::int64_t> cs_vaoi, int node,
                                            std::span<const std::uint8_t> version_increments) {
    if (cs_vaoi.size() != version_increments.size())
        throw std::invalid_argument("CS sequence and increment sequence lengths differ");
    const int hops = std::abs(node);
    const int T = static_cast<int>(cs_vaoi.size());
    std::vector<std::int64_t> out(static_cast<std::size_t>(T));
    std::int64_t window = 0;  // increments over the trailing `hops` slots
    for (int t = 0; t < T; ++t) {
        window += version_increments[static_cast<std::size_t>(t)];
        if (t - hops >= 0) window -= version_increments[static_cast<std::size_t>(t - hops)];
        const int base = std::max(t - hops, 0);  // cs(t<0) reads as cs(0)
        out[static_cast<std::size_t>(t)] = window + cs_vaoi[static_cast<std::size_t>(base)];
    }
    return out;
}

double shifted_time_average(std::span<const double> cs_vaoi, int hops) {
    if (cs_vaoi.empty()) throw std::invalid_argument("empty CS sequence");
    if (hops < 0) throw std::invalid_argument("hops must be non-negative");
    const int T = static_cast<int>(cs_vaoi.size());
    KahanSum acc;
    for (int t = 0; t < T; ++t) acc.add(cs_vaoi[static_cast<std::size_t>(std::max(t - hops, 0))]);
    return acc.value() / static_cast<double>(T);
}

std::vector<double> shifted_time_averages(std::span<const double> cs_vaoi, int max_hops) {
    if (cs_vaoi.empty()) throw std::invalid_argument("empty CS sequence");
    if (max_hops < 0) throw std::invalid_argument("max_hops must be non-negative");
    const int T = static_cast<int>(cs_vaoi.size());

    // Shifting by m replaces the last m in-range samples with copies of
    // cs(0), so each average follows from one suffix sum.
    KahanSum full;
    for (int t = 0; t < T; ++t) full.add(cs_vaoi[static_cast<std::size_t>(t)]);

    std::vector<double> out(static_cast<std::size_t>(max_hops) + 1);
    KahanSum tail;  // sum of cs(T-m .. T-1)
    for (int m = 0; m <= max_hops; ++m) {
        const int clipped = std::min(m, T);
        out[static_cast<std::size_t>(m)] =
            (full.value() - tail.value() + static_cast<double>(clipped) * cs_vaoi[0]) /
            static_cast<double>(T);
        if (m < T) tail.add(cs_vaoi[static_cast<std::size_t>(T - 1 - m)]);
    }
    return out;
}

double node_avg_exact(std::span<const double> cs_vaoi, int node, const SystemParams& params) {
    require_node_in_ring(node, params);
    const BinomialShift shift{std::abs(node), params.p_generate};
    return shift.mean() + shifted_time_average(cs_vaoi, shift.hops);
}

double node_avg_approx(double cs_time_avg, int node, const SystemParams& params) {
    require_node_in_ring(node, params);
    const BinomialShift shift{std::abs(node), params.p_generate};
    return shift.mean() + cs_time_avg;
}

double network_hop_offset(const SystemParams& params) {
    const double n = static_cast<double>(params.ring_n);
    return n * (n + 2.0) / (4.0 * (n + 1.0)) * params.p_generate;
}

double network_avg_exact(std::span<const double> cs_vaoi, const SystemParams& params) {
    const int half = params.ring_n / 2;
    const std::vector<double> shifted = shifted_time_averages(cs_vaoi, half);
    KahanSum acc;
    acc.add(shifted[0]);
    for (int m = 1; m <= half; ++m) acc.add(2.0 * shifted[static_cast<std::size_t>(m)]);  // nodes +-m
    return network_hop_offset(params) + acc.value() / static_cast<double>(params.ring_n + 1);
}

double network_avg_approx(double cs_time_avg, const SystemParams& params) {
    return network_hop_offset(params) + cs_time_avg;
}

}  // namespace vaoi
