#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "vaoi/policy.hpp"

using namespace vaoi;

namespace {

SystemParams defaults() { return SystemParams{}; }

}  // namespace

TEST_CASE("greedy transmits exactly when the battery is nonempty") {
    const SystemParams p = defaults();
    const PolicyTable g = greedy_policy(p);
    CHECK(g.at({0, 10}) == 0.0);
    CHECK(g.at({1, 0}) == 1.0);
    CHECK(g.at({p.battery_capacity, p.vaoi_cap}) == 1.0);
    CHECK(g.deterministic());
}

TEST_CASE("randomized policy holds alpha above battery zero") {
    const SystemParams p = defaults();
    const PolicyTable rs = rs_policy(p, 0.3);
    CHECK(rs.at({5, 2}) == 0.3);
    CHECK(rs.at({0, 2}) == 0.0);
    CHECK_FALSE(rs.deterministic());

    CHECK(rs_policy(p, 0.0).deterministic());
    for (double bad : {-0.1, 1.1})
        CHECK_THROWS_WITH_AS(rs_policy(p, bad), "alpha must lie in [0,1]", std::invalid_argument);
}

TEST_CASE("alpha one reproduces greedy entry for entry") {
    const SystemParams p = defaults();
    CHECK(rs_policy(p, 1.0).transmit_prob == greedy_policy(p).transmit_prob);
}

TEST_CASE("acting never transmits from an empty battery, whatever the table says") {
    const SystemParams p = defaults();
    PolicyTable forced;
    forced.space = StateSpace{p.battery_capacity, p.vaoi_cap};
    forced.transmit_prob.assign(forced.space.size(), 1.0);  // even battery-zero rows
    RunRngs rngs = RunRngs::for_run(5, 0);
    for (int d = 0; d <= p.vaoi_cap; ++d) CHECK(act(forced, {0, d}, rngs) == Action::idle);
    CHECK(act(forced, {1, 0}, rngs) == Action::transmit);
}

TEST_CASE("deterministic entries consume no randomness") {
    const SystemParams p = defaults();
    const PolicyTable g = greedy_policy(p);

    RunRngs used = RunRngs::for_run(77, 0);
    for (int i = 0; i < 100; ++i) {
        act(g, {3, 5}, used);
        act(g, {0, 5}, used);
    }
    RunRngs fresh = RunRngs::for_run(77, 0);
    // the action stream was never touched, so it still matches a fresh one
    CHECK(used.action() == fresh.action());
}

TEST_CASE("sampled transmit frequency tracks alpha") {
    const SystemParams p = defaults();
    const PolicyTable rs = rs_policy(p, 0.5);
    RunRngs rngs = RunRngs::for_run(123, 0);
    const int n = 100000;
    int transmits = 0;
    for (int i = 0; i < n; ++i) transmits += act(rs, {4, 7}, rngs) == Action::transmit;
    CHECK(std::abs(double(transmits) / n - 0.5) < 0.01);
}

TEST_CASE("policy construction validates its parameters") {
    SystemParams p = defaults();
    p.ring_n = 63;
    CHECK_THROWS_AS(greedy_policy(p), std::invalid_argument);

    const StateSpace space{2, 3};
    CHECK_THROWS_AS(policy_from_actions(space, std::vector<Action>(3, Action::idle)),
                    std::invalid_argument);
}

TEST_CASE("deterministic policy export lists every state with its action") {
    SystemParams p = defaults();
    p.battery_capacity = 1;
    p.vaoi_cap = 2;
    const std::filesystem::path path =
        std::filesystem::temp_directory_path() / "vaoi_policy_test.csv";
    write_policy_csv(greedy_policy(p), path.string());

    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str() ==
          "b,delta,action\n"
          "0,0,0\n0,1,0\n0,2,0\n"
          "1,0,1\n1,1,1\n1,2,1\n");
    std::filesystem::remove(path);
}

TEST_CASE("randomized policy export appends the probability column") {
    SystemParams p = defaults();
    p.battery_capacity = 1;
    p.vaoi_cap = 1;
    const std::filesystem::path path =
        std::filesystem::temp_directory_path() / "vaoi_policy_rs_test.csv";
    write_policy_csv(rs_policy(p, 0.25), path.string());

    std::ifstream in(path);
    std::string header;
    std::getline(in, header);
    CHECK(header == "b,delta,action,probability");
    std::string row;
    std::getline(in, row);
    CHECK(row == "0,0,0,0");  // battery zero: never transmits
    std::getline(in, row);
    std::getline(in, row);
    CHECK(row == "1,0,0,0.25");  // mode is idle; probability retained
    std::filesystem::remove(path);
}
