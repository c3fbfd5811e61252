#include "vaoi/params.hpp"

#include <stdexcept>

namespace vaoi {

namespace {

bool in_unit_interval(double x) { return x >= 0.0 && x <= 1.0; }

}  // namespace

SystemParams validate_params(const SystemParams& raw) {
    if (raw.ring_n < 0) throw std::invalid_argument("N must be non-negative");
    if (raw.ring_n % 2 != 0) throw std::invalid_argument("N must be even");
    if (!in_unit_interval(raw.p_generate))
        throw std::invalid_argument("p_g must lie in [0,1]");
    if (!(raw.p_success > 0.0))
        throw std::invalid_argument("degenerate channel: p_s must be positive");
    if (!(raw.p_success <= 1.0)) throw std::invalid_argument("p_s must lie in (0,1]");
    if (!in_unit_interval(raw.p_energy))
        throw std::invalid_argument("beta must lie in [0,1]");
    if (raw.battery_capacity < 1)
        throw std::invalid_argument("B must be at least 1");
    if (raw.vaoi_cap < 1) throw std::invalid_argument("delta_max must be at least 1");
    if (raw.horizon < 1) throw std::invalid_argument("T must be at least 1");
    if (raw.mc_iterations < 1)
        throw std::invalid_argument("iterations must be at least 1");
    return raw;
}

}  // namespace vaoi
