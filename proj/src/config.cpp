#include "vaoi/config.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace vaoi {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

std::string strip_comment(const std::string& line) {
    const std::size_t pos = line.find_first_of("#;");
    return pos == std::string::npos ? line : line.substr(0, pos);
}

[[noreturn]] void parse_fail(int lineno, const std::string& what) {
    throw std::runtime_error("config parse error at line " + std::to_string(lineno) + ": " + what);
}

template <typename T>
T parse_number(const std::string& key, const std::string& text) {
    const std::string v = trim(text);
    T out{};
    const char* first = v.data();
    const char* last = v.data() + v.size();
    std::from_chars_result r;
    if constexpr (std::is_floating_point_v<T>)
        r = std::from_chars(first, last, out, std::chars_format::general);
    else
        r = std::from_chars(first, last, out);
    if (r.ec != std::errc{} || r.ptr != last)
        throw std::runtime_error("config key '" + key + "' has a malformed value: '" + v + "'");
    return out;
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> items;
    std::string cur;
    for (char ch : text) {
        if (ch == ',' || std::isspace(static_cast<unsigned char>(ch))) {
            if (!cur.empty()) items.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) items.push_back(cur);
    return items;
}

}  // namespace

Config Config::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_string(buf.str());
}

Config Config::from_string(const std::string& text) {
    Config cfg;
    std::istringstream in(text);
    std::string line, section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string body = trim(strip_comment(line));
        if (body.empty()) continue;
        if (body.front() == '[') {
            if (body.back() != ']') parse_fail(lineno, "unterminated section header");
            section = trim(body.substr(1, body.size() - 2));
            if (section.empty()) parse_fail(lineno, "empty section name");
            continue;
        }
        const std::size_t eq = body.find('=');
        if (eq == std::string::npos) parse_fail(lineno, "expected 'key = value'");
        const std::string key = trim(body.substr(0, eq));
        const std::string value = trim(body.substr(eq + 1));
        if (key.empty()) parse_fail(lineno, "empty key");
        cfg.values_[section.empty() ? key : section + "." + key] = value;
    }
    return cfg;
}

bool Config::has(const std::string& key) const { return values_.count(key) != 0; }

std::string Config::get_string(const std::string& key) const {
    const auto it = values_.find(key);
    if (it == values_.end()) throw std::runtime_error("missing config key: " + key);
    return it->second;
}

std::string Config::get_string(const std::string& key, const std::string& fallback) const {
    const auto it = values_.find(key);
    return it == values_.end() ? fallback : it->second;
}

int Config::get_int(const std::string& key) const {
    return parse_number<int>(key, get_string(key));
}

int Config::get_int(const std::string& key, int fallback) const {
    return has(key) ? get_int(key) : fallback;
}

std::uint64_t Config::get_uint64(const std::string& key, std::uint64_t fallback) const {
    return has(key) ? parse_number<std::uint64_t>(key, get_string(key)) : fallback;
}

double Config::get_double(const std::string& key) const {
    return parse_number<double>(key, get_string(key));
}

double Config::get_double(const std::string& key, double fallback) const {
    return has(key) ? get_double(key) : fallback;
}

std::vector<double> Config::get_double_list(const std::string& key) const {
    std::vector<double> out;
    for (const auto& item : split_list(get_string(key))) out.push_back(parse_number<double>(key, item));
    return out;
}

std::vector<int> Config::get_int_list(const std::string& key) const {
    std::vector<int> out;
    for (const auto& item : split_list(get_string(key))) out.push_back(parse_number<int>(key, item));
    return out;
}

SystemParams params_from_config(const Config& cfg) {
    SystemParams p;
    p.ring_n = cfg.get_int("ring.N");
    p.p_generate = cfg.get_double("source.p_g");
    p.p_success = cfg.get_double("link.p_s");
    p.p_energy = cfg.get_double("energy.beta");
    p.battery_capacity = cfg.get_int("device.B");
    p.vaoi_cap = cfg.get_int("mdp.delta_max");
    p.horizon = cfg.get_int("sim.T");
    p.mc_iterations = cfg.get_int("sim.iterations", 2000);
    p.rng_seed = cfg.get_uint64("sim.seed", 1);
    return validate_params(p);
}

}  // namespace vaoi
