#pragma once

#include "zonospace/body.hpp"
#include "zonospace/lifted.hpp"

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace zonospace {

inline std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// mt19937_64 with draws mapped by hand, so sequences are identical on
/// every standard library (std distributions are implementation-defined).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    double log_uniform(double lo, double hi) { return lo * std::exp(std::log(hi / lo) * uniform()); }
    /// Uniform integer in [lo, hi].
    std::size_t integer(std::size_t lo, std::size_t hi) { return lo + static_cast<std::size_t>(engine_() % (hi - lo + 1)); }
    bool bernoulli(double p) { return uniform() < p; }

private:
    std::mt19937_64 engine_;
};

/// Independent stream for trial i of a campaign seeded with `seed`.
inline Rng trial_rng(std::uint64_t seed, std::uint64_t trial)
{
    return Rng(splitmix64(splitmix64(seed) ^ (trial * 0xd1342543de82ef95ULL + 1)));
}

struct BodyGenOptions {
    std::size_t max_diangles = 10;
    double min_half_length = 0.01;
    double max_half_length = 10.0;
    double disc_probability = 0.25;
};

/// Diangle count uniform in [1, max], angles uniform in [0, pi), half
/// lengths log-uniform; a log-uniform disc radius with disc_probability.
inline Body random_body(Rng& rng, const BodyGenOptions& opt = {})
{
    const std::size_t n = rng.integer(1, opt.max_diangles);
    std::vector<Diangle> g;
    g.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double angle = rng.uniform(0.0, pi);
        g.push_back({Direction(angle), rng.log_uniform(opt.min_half_length, opt.max_half_length)});
    }
    double r = 0.0;
    if (opt.disc_probability > 0.0 && rng.bernoulli(opt.disc_probability)) {
        r = rng.log_uniform(opt.min_half_length, opt.max_half_length);
    }
    return Body(std::move(g), r);
}

inline Body random_zonogon(Rng& rng, std::size_t max_diangles)
{
    BodyGenOptions opt;
    opt.max_diangles = max_diangles;
    opt.disc_probability = 0.0;
    return random_body(rng, opt);
}

inline LiftedVector random_lifted(Rng& rng, const BodyGenOptions& opt = {})
{
    Body u = random_body(rng, opt);
    Body v = random_body(rng, opt);
    return lift(u, v);
}

} // namespace zonospace
