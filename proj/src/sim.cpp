#include "vaoi/sim.hpp"

#include <algorithm>
#include <stdexcept>

#include "vaoi/network.hpp"
#include "vaoi/parallel.hpp"

namespace vaoi {

namespace {

void check_sim_inputs(const SystemParams& params, const PolicyTable& policy, InitialState init) {
    validate_params(params);
    const StateSpace space{params.battery_capacity, params.vaoi_cap};
    if (!(policy.space == space))
        throw std::invalid_argument("policy state space does not match the parameters");
    if (!space.contains({init.battery, init.vaoi}))
        throw std::invalid_argument("initial state lies outside the state space");
}

// Shared per-slot device/CS logic so the link-only and full-ring simulators
// consume draws identically and stay trajectory-for-trajectory comparable.
struct DeviceLink {
    const SystemParams& params;
    const PolicyTable& policy;
    int battery;
    int vaoi;                  // truncated MDP state
    std::int64_t source = 0;   // V_S
    std::int64_t stored = 0;   // V_0

    DeviceLink(const SystemParams& p, const PolicyTable& pol, InitialState init)
        : params(p), policy(pol), battery(init.battery), vaoi(init.vaoi) {
        source = init.vaoi;  // raw gap starts equal to the truncated state
        stored = 0;
    }

    struct SlotOutcome {
        Action action;
        BernoulliDraws draws;
        bool delivered;
    };

    SlotOutcome step(RunRngs& rngs) {
        const Action a = act(policy, {battery, vaoi}, rngs);
        const BernoulliDraws dr = draw_slot(rngs, params);
        const bool delivered = a == Action::transmit && dr.channel;
        const int z = dr.version ? 1 : 0;

        if (delivered) stored = source;  // the device sampled V_S(t) this slot
        source += z;
        vaoi = delivered ? z : std::min(vaoi + z, params.vaoi_cap);
        battery = std::min(battery + (dr.energy ? 1 : 0) - (a == Action::transmit ? 1 : 0),
                           params.battery_capacity);
        return {a, dr, delivered};
    }
};

void record_slot(LinkTrace& trace, const DeviceLink& link) {
    trace.battery.push_back(link.battery);
    trace.vaoi.push_back(link.vaoi);
    trace.source_version.push_back(link.source);
    trace.cs_version.push_back(link.stored);
}

void record_outcome(LinkTrace& trace, const DeviceLink::SlotOutcome& out) {
    trace.action.push_back(out.action == Action::transmit ? 1 : 0);
    trace.energy.push_back(out.draws.energy ? 1 : 0);
    trace.channel.push_back(out.draws.channel ? 1 : 0);
    trace.version.push_back(out.draws.version ? 1 : 0);
}

void reserve_trace(LinkTrace& trace, int T) {
    const std::size_t n = static_cast<std::size_t>(T);
    trace.battery.reserve(n);
    trace.action.reserve(n);
    trace.energy.reserve(n);
    trace.channel.reserve(n);
    trace.version.reserve(n);
    trace.vaoi.reserve(n);
    trace.source_version.reserve(n);
    trace.cs_version.reserve(n);
}

}  // namespace

std::vector<std::int64_t> LinkTrace::raw_vaoi_sequence() const {
    std::vector<std::int64_t> out(vaoi.size());
    for (std::size_t t = 0; t < out.size(); ++t) out[t] = source_version[t] - cs_version[t];
    return out;
}

std::vector<double> LinkTrace::raw_vaoi_sequence_d() const {
    std::vector<double> out(vaoi.size());
    for (std::size_t t = 0; t < out.size(); ++t)
        out[t] = static_cast<double>(source_version[t] - cs_version[t]);
    return out;
}

std::vector<std::uint8_t> LinkTrace::version_increments() const {
    std::vector<std::uint8_t> out(vaoi.size(), 0);
    for (std::size_t t = 1; t < out.size(); ++t)
        out[t] = static_cast<std::uint8_t>(source_version[t] - source_version[t - 1]);
    return out;
}

double LinkTrace::time_avg_vaoi() const {
    std::int64_t sum = 0;
    for (int v : vaoi) sum += v;
    return static_cast<double>(sum) / static_cast<double>(vaoi.size());
}

double LinkTrace::time_avg_raw_vaoi() const {
    std::int64_t sum = 0;
    for (std::size_t t = 0; t < vaoi.size(); ++t) sum += source_version[t] - cs_version[t];
    return static_cast<double>(sum) / static_cast<double>(vaoi.size());
}

long LinkTrace::updates_attempted() const {
    long sum = 0;
    for (std::uint8_t a : action) sum += a;
    return sum;
}

LinkTrace simulate_link(const SystemParams& params, const PolicyTable& policy, RunRngs& rngs,
                        InitialState init) {
    check_sim_inputs(params, policy, init);
    LinkTrace trace;
    reserve_trace(trace, params.horizon);
    DeviceLink link(params, policy, init);
    for (int t = 0; t < params.horizon; ++t) {
        record_slot(trace, link);
        record_outcome(trace, link.step(rngs));
    }
    return trace;
}

std::int64_t RingTrace::version_at(int node, int t) const {
    const int half = ring_n / 2;
    if (node < -half || node > half) throw std::out_of_range("node index outside the ring");
    if (t < 0 || t >= link.slots()) throw std::out_of_range("slot index outside the trace");
    const std::size_t row = static_cast<std::size_t>(node + half);
    return node_version[row * static_cast<std::size_t>(link.slots()) + static_cast<std::size_t>(t)];
}

std::int64_t RingTrace::vaoi_at(int node, int t) const {
    return link.source_version[static_cast<std::size_t>(t)] - version_at(node, t);
}

std::vector<std::int64_t> RingTrace::node_vaoi(int node) const {
    std::vector<std::int64_t> out(static_cast<std::size_t>(link.slots()));
    for (int t = 0; t < link.slots(); ++t) out[static_cast<std::size_t>(t)] = vaoi_at(node, t);
    return out;
}

double RingTrace::node_time_avg(int node) const {
    const int half = ring_n / 2;
    if (node < -half || node > half) throw std::out_of_range("node index outside the ring");
    const std::size_t row = static_cast<std::size_t>(node + half);
    const std::size_t T = static_cast<std::size_t>(link.slots());
    std::int64_t sum = 0;
    for (std::size_t t = 0; t < T; ++t)
        sum += link.source_version[t] - node_version[row * T + t];
    return static_cast<double>(sum) / static_cast<double>(T);
}

RingTrace simulate_ring(const SystemParams& params, const PolicyTable& policy, RunRngs& rngs,
                        InitialState init) {
    check_sim_inputs(params, policy, init);
    const int nodes = params.ring_n + 1;
    const int T = params.horizon;
    const std::size_t cs_row = static_cast<std::size_t>(params.ring_n / 2);

    RingTrace trace;
    trace.ring_n = params.ring_n;
    reserve_trace(trace.link, T);
    trace.node_version.assign(static_cast<std::size_t>(nodes) * static_cast<std::size_t>(T), 0);

    // Every satellite starts holding the initial source version 0; a nonzero
    // init.vaoi means the source is already that many versions ahead.
    std::vector<std::int64_t> current(static_cast<std::size_t>(nodes), 0);
    std::vector<std::int64_t> incoming(static_cast<std::size_t>(nodes), 0);

    DeviceLink link(params, policy, init);
    for (int t = 0; t < T; ++t) {
        for (std::size_t k = 0; k < current.size(); ++k)
            trace.node_version[k * static_cast<std::size_t>(T) + static_cast<std::size_t>(t)] =
                current[k];
        record_slot(trace.link, link);

        const std::int64_t sampled = link.source;  // V_S(t), what a transmission delivers
        const DeviceLink::SlotOutcome out = link.step(rngs);
        record_outcome(trace.link, out);

        // One-hop relay in both directions around the ring; every node keeps
        // the freshest of its own copy and the two arrivals.
        const std::size_t n = current.size();
        for (std::size_t k = 0; k < n; ++k) {
            const std::size_t left = k == 0 ? n - 1 : k - 1;
            const std::size_t right = k + 1 == n ? 0 : k + 1;
            incoming[k] = std::max({current[k], current[left], current[right]});
        }
        if (out.delivered) incoming[cs_row] = std::max(incoming[cs_row], sampled);
        current.swap(incoming);
    }
    return trace;
}

MetricsSummary evaluate_policy(const SystemParams& params, const PolicyTable& policy,
                               InitialState init, int workers) {
    check_sim_inputs(params, policy, init);
    if (params.mc_iterations < 2)
        throw std::invalid_argument("iterations must be at least 2 for standard errors");

    const int runs = params.mc_iterations;
    const int nodes = params.ring_n + 1;
    const int half = params.ring_n / 2;

    std::vector<double> cs_avg(static_cast<std::size_t>(runs));
    std::vector<double> cs_raw_avg(static_cast<std::size_t>(runs));
    std::vector<double> net_avg(static_cast<std::size_t>(runs));
    std::vector<double> net_exact(static_cast<std::size_t>(runs));
    std::vector<double> net_approx(static_cast<std::size_t>(runs));
    std::vector<double> updates(static_cast<std::size_t>(runs));
    std::vector<double> node_avg(static_cast<std::size_t>(runs) * static_cast<std::size_t>(nodes));
    std::vector<double> hop_exact(static_cast<std::size_t>(runs) * static_cast<std::size_t>(half + 1));

    parallel_for(runs, workers, [&](int j) {
        RunRngs rngs = RunRngs::for_run(params.rng_seed, static_cast<std::uint64_t>(j));
        const RingTrace trace = simulate_ring(params, policy, rngs, init);
        const std::size_t row = static_cast<std::size_t>(j);

        cs_avg[row] = trace.link.time_avg_vaoi();
        cs_raw_avg[row] = trace.link.time_avg_raw_vaoi();
        updates[row] = static_cast<double>(trace.link.updates_attempted());

        KahanSum net;
        for (int nd = -half; nd <= half; ++nd) {
            const double avg = trace.node_time_avg(nd);
            node_avg[row * static_cast<std::size_t>(nodes) + static_cast<std::size_t>(nd + half)] = avg;
            net.add(avg);
        }
        net_avg[row] = net.value() / static_cast<double>(nodes);

        // Closed-form evaluations on the raw CS sequence of the same run.
        const std::vector<double> raw = trace.link.raw_vaoi_sequence_d();
        const std::vector<double> shifted = shifted_time_averages(raw, half);
        KahanSum per_node;
        per_node.add(shifted[0]);
        for (int m = 0; m <= half; ++m) {
            const double exact = BinomialShift{m, params.p_generate}.mean() +
                                 shifted[static_cast<std::size_t>(m)];
            hop_exact[row * static_cast<std::size_t>(half + 1) + static_cast<std::size_t>(m)] = exact;
            if (m >= 1) per_node.add(2.0 * shifted[static_cast<std::size_t>(m)]);
        }
        net_exact[row] = network_hop_offset(params) +
                         per_node.value() / static_cast<double>(params.ring_n + 1);
        net_approx[row] = network_avg_approx(cs_raw_avg[row], params);
    });

    MetricsSummary summary;
    summary.iterations = runs;
    summary.cs_avg = mean_se(cs_avg);
    summary.cs_raw_avg = mean_se(cs_raw_avg);
    summary.network_avg = mean_se(net_avg);
    summary.network_exact = mean_se(net_exact);
    summary.network_approx = mean_se(net_approx);
    summary.updates_mean = mean_se(updates).mean;
    summary.energy_mean = summary.updates_mean;  // one unit per transmission

    summary.node_avg.resize(static_cast<std::size_t>(nodes));
    std::vector<double> column(static_cast<std::size_t>(runs));
    for (int k = 0; k < nodes; ++k) {
        for (int j = 0; j < runs; ++j)
            column[static_cast<std::size_t>(j)] =
                node_avg[static_cast<std::size_t>(j) * static_cast<std::size_t>(nodes) +
                         static_cast<std::size_t>(k)];
        summary.node_avg[static_cast<std::size_t>(k)] = mean_se(column);
    }
    summary.hop_exact.resize(static_cast<std::size_t>(half) + 1);
    for (int m = 0; m <= half; ++m) {
        for (int j = 0; j < runs; ++j)
            column[static_cast<std::size_t>(j)] =
                hop_exact[static_cast<std::size_t>(j) * static_cast<std::size_t>(half + 1) +
                          static_cast<std::size_t>(m)];
        summary.hop_exact[static_cast<std::size_t>(m)] = mean_se(column);
    }
    return summary;
}

}  // namespace vaoi
