#include "vaoi/solver.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <stdexcept>

#include "vaoi/stats.hpp"

namespace vaoi {

namespace {

double action_value(const std::vector<Transition>& row, const std::vector<double>& h) {
    double q = 0.0;
    for (const Transition& t : row) q += t.prob * (t.cost + h[static_cast<std::size_t>(t.next)]);
    return q;
}

}  // namespace

BellmanResult bellman_apply(const TransitionKernel& kernel, const std::vector<double>& h) {
    const int n = kernel.space.size();
    if (static_cast<int>(h.size()) != n)
        throw std::invalid_argument("value table size does not match the state space");

    BellmanResult result{std::vector<double>(static_cast<std::size_t>(n)),
                         std::vector<Action>(static_cast<std::size_t>(n), Action::idle)};
    for (int s = 0; s < n; ++s) {
        double best = action_value(kernel.row(s, Action::idle), h);
        Action arg = Action::idle;
        if (kernel.legal(s, Action::transmit)) {
            const double q = action_value(kernel.row(s, Action::transmit), h);
            if (q < best) {  // exact ties keep the idle action
                best = q;
                arg = Action::transmit;
            }
        }
        result.values[static_cast<std::size_t>(s)] = best;
        result.greedy[static_cast<std::size_t>(s)] = arg;
    }
    return result;
}

SolverResult solve_rvia(const TransitionKernel& kernel, double tolerance, int max_iterations,
                        State reference) {
    if (!(tolerance > 0.0)) throw std::invalid_argument("tolerance must be positive");
    if (max_iterations < 1) throw std::invalid_argument("max_iterations must be at least 1");
    if (!kernel.space.contains(reference))
        throw std::invalid_argument("reference state lies outside the state space");

    const int n = kernel.space.size();
    const std::size_t ref = static_cast<std::size_t>(kernel.space.index(reference));
    std::vector<double> h(static_cast<std::size_t>(n), 0.0);

    double span = std::numeric_limits<double>::infinity();
    for (int it = 1; it <= max_iterations; ++it) {
        BellmanResult sweep = bellman_apply(kernel, h);

        double lo = sweep.values[0] - h[0];
        double hi = lo;
        for (std::size_t s = 1; s < h.size(); ++s) {
            const double diff = sweep.values[s] - h[s];
            lo = std::min(lo, diff);
            hi = std::max(hi, diff);
        }
        span = hi - lo;

        const double gain = sweep.values[ref];
        for (std::size_t s = 0; s < h.size(); ++s) h[s] = sweep.values[s] - gain;

        if (span < tolerance) {
            SolverResult result;
            result.policy = policy_from_actions(kernel.space, sweep.greedy);
            result.average_cost = gain;
            result.relative_values = std::move(h);
            result.iterations_used = it;
            result.span_at_exit = span;
            return result;
        }
    }
    throw std::runtime_error("relative value iteration did not converge: span " +
                             std::to_string(span) + " after " + std::to_string(max_iterations) +
                             " iterations");
}

bool ThresholdStructure::non_increasing_in_battery() const {
    const double inf = std::numeric_limits<double>::infinity();
    double prev = inf;
    bool first = true;
    for (const auto& th : threshold) {
        const double cur = th ? static_cast<double>(*th) : inf;
        if (!first && cur > prev) return false;
        prev = cur;
        first = false;
    }
    return true;
}

ThresholdStructure extract_thresholds(const PolicyTable& policy) {
    if (!policy.deterministic())
        throw std::invalid_argument("extract_thresholds requires a deterministic policy");

    ThresholdStructure out;
    out.threshold.resize(static_cast<std::size_t>(policy.space.battery_capacity) + 1);
    for (int b = 0; b <= policy.space.battery_capacity; ++b) {
        std::optional<int> first_transmit;
        for (int d = 0; d <= policy.space.vaoi_cap; ++d) {
            const bool transmit = policy.at({b, d}) == 1.0;
            if (transmit && !first_transmit) first_transmit = d;
            if (!transmit && first_transmit && !out.violation)
                out.violation = State{b, d};  // idle above the first transmit level
        }
        out.threshold[static_cast<std::size_t>(b)] = first_transmit;
    }
    return out;
}

double policy_finite_avg(const TransitionKernel& kernel, const PolicyTable& policy, int horizon,
                         State start) {
    if (horizon < 1) throw std::invalid_argument("horizon must be at least 1");
    if (!(policy.space == kernel.space))
        throw std::invalid_argument("policy and kernel state spaces differ");
    if (!kernel.space.contains(start))
        throw std::invalid_argument("start state lies outside the state space");

    const int n = kernel.space.size();
    std::vector<double> dist(static_cast<std::size_t>(n), 0.0);
    dist[static_cast<std::size_t>(kernel.space.index(start))] = 1.0;

    KahanSum total;
    std::vector<double> next(static_cast<std::size_t>(n), 0.0);
    for (int t = 0; t < horizon; ++t) {
        KahanSum slot;
        for (int s = 0; s < n; ++s)
            if (dist[static_cast<std::size_t>(s)] > 0.0)
                slot.add(dist[static_cast<std::size_t>(s)] * kernel.space.state(s).vaoi);
        total.add(slot.value());

        if (t == horizon - 1) break;
        std::fill(next.begin(), next.end(), 0.0);
        for (int s = 0; s < n; ++s) {
            const double mass = dist[static_cast<std::size_t>(s)];
            if (mass == 0.0) continue;
            const double p_tx =
                kernel.space.state(s).battery > 0 ? policy.transmit_prob[static_cast<std::size_t>(s)] : 0.0;
            if (p_tx < 1.0)
                for (const Transition& tr : kernel.row(s, Action::idle))
                    next[static_cast<std::size_t>(tr.next)] += mass * (1.0 - p_tx) * tr.prob;
            if (p_tx > 0.0)
                for (const Transition& tr : kernel.row(s, Action::transmit))
                    next[static_cast<std::size_t>(tr.next)] += mass * p_tx * tr.prob;
        }
        dist.swap(next);
    }
    return total.value() / static_cast<double>(horizon);
}

void write_values_csv(const StateSpace& space, const std::vector<double>& values,
                      const std::string& path) {
    if (static_cast<int>(values.size()) != space.size())
        throw std::invalid_argument("value table size does not match the state space");
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << "b,delta,h\n";
    char buf[40];
    for (int b = 0; b <= space.battery_capacity; ++b)
        for (int d = 0; d <= space.vaoi_cap; ++d) {
            std::snprintf(buf, sizeof buf, "%.17g", values[static_cast<std::size_t>(space.index({b, d}))]);
            out << b << ',' << d << ',' << buf << '\n';
        }
}

void write_thresholds_csv(const ThresholdStructure& ths, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << "b,threshold\n";
    for (std::size_t b = 0; b < ths.threshold.size(); ++b) {
        out << b << ',';
        if (ths.threshold[b])
            out << *ths.threshold[b];
        else
            out << "inf";
        out << '\n';
    }
}

}  // namespace vaoi
