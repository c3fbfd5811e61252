#include "vaoi/policy.hpp"

#include <fstream>
#include <stdexcept>

namespace vaoi {

bool PolicyTable::deterministic() const {
    for (double p : transmit_prob)
        if (p != 0.0 && p != 1.0) return false;
    return true;
}

namespace {

PolicyTable constant_above_empty(const SystemParams& params, double prob) {
    const SystemParams p = validate_params(params);
    PolicyTable table;
    table.space = StateSpace{p.battery_capacity, p.vaoi_cap};
    table.transmit_prob.assign(static_cast<std::size_t>(table.space.size()), 0.0);
    for (int b = 1; b <= p.battery_capacity; ++b)
        for (int d = 0; d <= p.vaoi_cap; ++d)
            table.transmit_prob[static_cast<std::size_t>(table.space.index({b, d}))] = prob;
    return table;
}

}  // namespace

PolicyTable greedy_policy(const SystemParams& params) {
    return constant_above_empty(params, 1.0);
}

PolicyTable rs_policy(const SystemParams& params, double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw std::invalid_argument("alpha must lie in [0,1]");
    return constant_above_empty(params, alpha);
}

PolicyTable policy_from_actions(const StateSpace& space, const std::vector<Action>& actions) {
    if (static_cast<int>(actions.size()) != space.size())
        throw std::invalid_argument("action table size does not match the state space");
    PolicyTable table;
    table.space = space;
    table.transmit_prob.assign(actions.size(), 0.0);
    for (std::size_t i = 0; i < actions.size(); ++i)
        table.transmit_prob[i] = actions[i] == Action::transmit ? 1.0 : 0.0;
    return table;
}

Action act(const PolicyTable& policy, State s, RunRngs& rngs) {
    if (s.battery <= 0) return Action::idle;  // transmitting needs a stored unit
    const double p = policy.at(s);
    if (p <= 0.0) return Action::idle;
    if (p >= 1.0) return Action::transmit;
    return bernoulli(rngs.action, p) ? Action::transmit : Action::idle;
}

void write_policy_csv(const PolicyTable& policy, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    const bool det = policy.deterministic();
    out << (det ? "b,delta,action\n" : "b,delta,action,probability\n");
    for (int b = 0; b <= policy.space.battery_capacity; ++b) {
        for (int d = 0; d <= policy.space.vaoi_cap; ++d) {
            const double p = policy.at({b, d});
            out << b << ',' << d << ',' << (p >= 0.5 ? 1 : 0);
            if (!det) {
                char buf[40];
                std::snprintf(buf, sizeof buf, "%.17g", p);
                out << ',' << buf;
            }
            out << '\n';
        }
    }
}

}  // namespace vaoi
