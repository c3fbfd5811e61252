#include "vaoi/kernel.hpp"

#include <algorithm>
#include <array>

namespace vaoi {

namespace {

struct Branch {
    int value = 0;
    double prob = 0.0;
};

void add_merged(std::vector<Transition>& row, int next, double prob, double cost) {
    if (prob <= 0.0) return;
    const auto it =
        std::find_if(row.begin(), row.end(), [next](const Transition& t) { return t.next == next; });
    if (it != row.end())
        it->prob += prob;  // saturation folded two branches onto one successor
    else
        row.push_back({next, prob, cost});
}

}  // namespace

TransitionKernel build_kernel(const SystemParams& params) {
    const SystemParams p = validate_params(params);
    TransitionKernel kernel;
    kernel.space = StateSpace{p.battery_capacity, p.vaoi_cap};
    kernel.params = p;
    kernel.rows.assign(static_cast<std::size_t>(2 * kernel.space.size()), {});

    const double pg = p.p_generate;
    const double ps = p.p_success;
    const double beta = p.p_energy;

    for (int b = 0; b <= p.battery_capacity; ++b) {
        for (int d = 0; d <= p.vaoi_cap; ++d) {
            const int s = kernel.space.index({b, d});
            const int d_up = std::min(d + 1, p.vaoi_cap);
            for (int a = 0; a <= 1; ++a) {
                if (a == 1 && b == 0) continue;  // no energy, no transmission

                std::array<Branch, 2> battery;
                if (a == 0)
                    battery = {{{std::min(b + 1, p.battery_capacity), beta}, {b, 1.0 - beta}}};
                else
                    battery = {{{b, beta}, {b - 1, 1.0 - beta}}};

                // Idle leaves the gap to grow by the generation draw; a
                // transmission resets it on channel success.
                std::array<Branch, 4> age;
                std::size_t n_age = 0;
                if (a == 0) {
                    age[n_age++] = {d_up, pg};
                    age[n_age++] = {d, 1.0 - pg};
                } else {
                    age[n_age++] = {d_up, pg * (1.0 - ps)};
                    age[n_age++] = {d, (1.0 - pg) * (1.0 - ps)};
                    age[n_age++] = {1, pg * ps};
                    age[n_age++] = {0, (1.0 - pg) * ps};
                }

                auto& row = kernel.rows[static_cast<std::size_t>(2 * s + a)];
                for (const Branch& bb : battery)
                    for (std::size_t i = 0; i < n_age; ++i)
                        add_merged(row, kernel.space.index({bb.value, age[i].value}),
                                   bb.prob * age[i].prob, static_cast<double>(age[i].value));
            }
        }
    }
    return kernel;
}

}  // namespace vaoi
