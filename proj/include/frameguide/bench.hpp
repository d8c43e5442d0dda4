#pragma once

// Wall-clock latency of engine steps over synthetic frames.

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "frameguide/engine.hpp"
#include "frameguide/rng.hpp"

namespace frameguide {

struct LatencyStats {
    std::size_t samples = 0;
    double median_ns = 0.0;
    double p99_ns = 0.0;
    double max_ns = 0.0;
};

/// Median averages the two middle samples for even counts; p99 is the
/// nearest-rank percentile.
inline LatencyStats summarize_latency(std::vector<double> samples_ns) {
    LatencyStats s;
    s.samples = samples_ns.size();
    if (samples_ns.empty()) return s;
    std::sort(samples_ns.begin(), samples_ns.end());
    const std::size_t n = samples_ns.size();
    s.median_ns = n % 2 ? samples_ns[n / 2] : 0.5 * (samples_ns[n / 2 - 1] + samples_ns[n / 2]);
    const std::size_t rank = (99 * n + 99) / 100;  // ceil(0.99 n)
    s.p99_ns = samples_ns[std::clamp<std::size_t>(rank, 1, n) - 1];
    s.max_ns = samples_ns.back();
    return s;
}

/// Synthetic session at 30 fps: jittered faces, a short dropout every 200
/// frames, and a 64x48 frame attached to every observation.
inline std::vector<Observation> synthetic_observations(std::size_t count, std::uint64_t seed = 1) {
    SimRng rng(seed);
    std::vector<Observation> obs(count);
    for (std::size_t i = 0; i < count; ++i) {
        auto& o = obs[i];
        o.timestamp_ms = static_cast<std::int64_t>(i) * 33;
        const auto level = static_cast<std::uint8_t>(rng.next() % 256);
        o.frame = LumaFrame::filled(kLumaFrameWidth, kLumaFrameHeight, {level, level, level});
        if (i % 200 >= 190) continue;
        const double cx = 0.25 + 0.5 * rng.uniform();
        const double cy = 0.25 + 0.5 * rng.uniform();
        const double w = 0.1 + 0.4 * rng.uniform();
        const double dy = 0.04 * (rng.uniform() - 0.5);
        o.landmarks = FaceLandmarks{{cx, cy}, {cx - 0.35 * w, cy - dy}, {cx + 0.35 * w, cy + dy}, {cx, cy}, w, 1.3 * w};
    }
    return obs;
}

inline LatencyStats measure_step_latency(std::size_t iterations, std::uint64_t seed = 1) {
    const auto observations = synthetic_observations(iterations, seed);
    GuidanceEngine engine;
    std::vector<double> samples;
    samples.reserve(iterations);
    for (const auto& o : observations) {
        const auto start = std::chrono::steady_clock::now();
        const StepResult r = engine.step(o);
        const auto stop = std::chrono::steady_clock::now();
        (void)r;
        samples.push_back(std::chrono::duration<double, std::nano>(stop - start).count());
    }
    return summarize_latency(std::move(samples));
}

}  // namespace frameguide
