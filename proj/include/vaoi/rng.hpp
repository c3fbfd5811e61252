#pragma once

#include <cstdint>
#include <random>

#include "vaoi/params.hpp"

namespace vaoi {

/// Identifies one of the independent Bernoulli sub-streams of a run.
enum class Stream : std::uint32_t { energy = 1, channel = 2, version = 3, action = 4 };

/// Deterministically derives the engine for (seed, run, stream).
///
/// Every Monte Carlo run owns four private streams, so trajectories depend
/// only on (seed, run index) -- never on how many runs execute, their order,
/// or which worker thread picked them up.
inline std::mt19937_64 make_stream(std::uint64_t seed, std::uint64_t run, Stream which) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed & 0xffffffffu),
                      static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(run & 0xffffffffu),
                      static_cast<std::uint32_t>(run >> 32),
                      static_cast<std::uint32_t>(which)};
    return std::mt19937_64(seq);
}

/// Uniform double in [0,1) from the top 53 bits of one engine output.
inline double uniform01(std::mt19937_64& g) {
    return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

/// Bernoulli(p) draw; exact at the endpoints (p=0 never, p=1 always).
inline bool bernoulli(std::mt19937_64& g, double p) { return uniform01(g) < p; }

/// One slot's worth of exogenous randomness.
struct BernoulliDraws {
    bool energy = false;   ///< e(t): an energy unit arrived this slot.
    bool channel = false;  ///< c(t): a transmission would succeed this slot.
    bool version = false;  ///< z(t): the source generated a new version this slot.
};

/// The per-run engines: three exogenous processes plus policy randomization.
struct RunRngs {
    std::mt19937_64 energy;
    std::mt19937_64 channel;
    std::mt19937_64 version;
    std::mt19937_64 action;

    static RunRngs for_run(std::uint64_t seed, std::uint64_t run) {
        return RunRngs{make_stream(seed, run, Stream::energy),
                       make_stream(seed, run, Stream::channel),
                       make_stream(seed, run, Stream::version),
                       make_stream(seed, run, Stream::action)};
    }
};

/// Draws the slot triple (e, c, z), one value from each dedicated stream.
inline BernoulliDraws draw_slot(RunRngs& rngs, const SystemParams& params) {
    BernoulliDraws d;
    d.energy = bernoulli(rngs.energy, params.p_energy);
    d.channel = bernoulli(rngs.channel, params.p_success);
    d.version = bernoulli(rngs.version, params.p_generate);
    return d;
}

}  // namespace vaoi
