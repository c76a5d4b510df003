#pragma once

#include "zonospace/inequalities.hpp"
#include "zonospace/lifted.hpp"
#include "zonospace/random.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace zonospace {

/// Runs fn(i) for i in [0, trials) on a small worker pool. Results land in
/// trial order, so anything aggregated from them is thread-count independent.
template <class Fn>
auto run_trials(std::size_t trials, Fn fn, unsigned threads = 0)
{
    using R = decltype(fn(std::size_t{0}));
    std::vector<R> out(trials);
    if (threads == 0) {
        threads = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
    }
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(trials, 1)));
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            for (std::size_t i = t; i < trials; i += threads) {
                out[i] = fn(i);
            }
        });
    }
    for (std::thread& th : pool) {
        th.join();
    }
    return out;
}

enum class CheckKind { isoperimetric, bm_classical, bm_generalized, schwarz };

inline const char* check_name(CheckKind k)
{
    switch (k) {
    case CheckKind::isoperimetric: return "iso";
    case CheckKind::bm_classical: return "bm";
    case CheckKind::bm_generalized: return "bmgen";
    case CheckKind::schwarz: return "schwarz";
    }
    return "?";
}

struct CampaignOptions {
    CheckKind kind = CheckKind::isoperimetric;
    std::size_t trials = 1000;
    std::uint64_t seed = 0;
    std::size_t max_diangles = 10;
    double tol = 1e-9;
    unsigned threads = 0;
};

struct CampaignReport {
    CheckKind kind = CheckKind::isoperimetric;
    std::size_t trials = 0;
    std::size_t evaluated = 0;
    std::size_t skipped = 0;
    std::size_t violations = 0;
    double min_slack = 0.0;
    // min over trials of slack / tolerance band; below -1 is a violation
    double min_scaled_slack = 0.0;
    std::size_t worst_trial = 0;
};

/// One fuzz trial; nullopt when the random sample misses the check's
/// precondition (bmgen needs positive measures on both sides).
inline std::optional<CheckReport> run_check_trial(const CampaignOptions& opt, std::size_t i)
{
    Rng rng = trial_rng(opt.seed, i);
    BodyGenOptions gen;
    gen.max_diangles = opt.max_diangles;
    const Tolerance tol{opt.tol, opt.tol};
    switch (opt.kind) {
    case CheckKind::isoperimetric:
        return check_isoperimetric(random_lifted(rng, gen), tol);
    case CheckKind::bm_classical: {
        const Body u = random_body(rng, gen);
        const Body v = random_body(rng, gen);
        return check_bm_classical(u, v, tol);
    }
    case CheckKind::bm_generalized: {
        const LiftedVector x = random_lifted(rng, gen);
        const LiftedVector y = random_lifted(rng, gen);
        if (!(measure_ext(x) > 0.0) || !(measure_ext(y) > 0.0)) {
            return std::nullopt;
        }
        return check_bm_generalized(x, y, tol);
    }
    case CheckKind::schwarz: {
        const LiftedVector x = random_lifted(rng, gen);
        const LiftedVector y = random_lifted(rng, gen);
        return check_schwarz_deficit(x, y, tol);
    }
    }
    return std::nullopt;
}

inline CampaignReport run_campaign(const CampaignOptions& opt)
{
    const auto results = run_trials(opt.trials, [&](std::size_t i) { return run_check_trial(opt, i); }, opt.threads);
    CampaignReport rep;
    rep.kind = opt.kind;
    rep.trials = opt.trials;
    bool first = true;
    for (std::size_t i = 0; i < results.size(); ++i) {
        if (!results[i]) {
            ++rep.skipped;
            continue;
        }
        const CheckReport& r = *results[i];
        ++rep.evaluated;
        if (!r.holds) {
            ++rep.violations;
        }
        const double scaled = r.slack / r.tolerance;
        if (first || scaled < rep.min_scaled_slack) {
            rep.min_scaled_slack = scaled;
            rep.worst_trial = i;
        }
        rep.min_slack = first ? r.slack : std::min(rep.min_slack, r.slack);
        first = false;
    }
    return rep;
}

} // namespace zonospace
