#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "vaoi/params.hpp"

namespace vaoi {

/// Minimal INI-style configuration reader.
///
/// Accepts `[section]` headers and `key = value` lines; `#` or `;` start a
/// comment. Keys are exposed in dotted form, e.g. the N under `[ring]` is
/// looked up as "ring.N". Lists are comma- or whitespace-separated values.
class Config {
public:
    static Config from_file(const std::string& path);
    static Config from_string(const std::string& text);

    bool has(const std::string& key) const;

    std::string get_string(const std::string& key) const;
    std::string get_string(const std::string& key, const std::string& fallback) const;
    int get_int(const std::string& key) const;
    int get_int(const std::string& key, int fallback) const;
    std::uint64_t get_uint64(const std::string& key, std::uint64_t fallback) const;
    double get_double(const std::string& key) const;
    double get_double(const std::string& key, double fallback) const;
    std::vector<double> get_double_list(const std::string& key) const;
    std::vector<int> get_int_list(const std::string& key) const;

private:
    std::map<std::string, std::string> values_;
};

/// Builds validated SystemParams from the scenario keys:
///   ring.N, source.p_g, link.p_s, energy.beta, device.B, mdp.delta_max,
///   sim.T, sim.iterations (default 2000), sim.seed (default 1).
/// Missing required keys and range violations throw.
SystemParams params_from_config(const Config& cfg);

}  // namespace vaoi
