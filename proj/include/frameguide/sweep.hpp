#pragma once

// Parameter sweeps over many simulated users. Runs are independent and may
// execute on several threads; results always come back in input order.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

#include "frameguide/simulator.hpp"

namespace frameguide {

/// Grid over the region where every compliant user is expected to converge:
/// compliance >= 0.3, noise <= 0.01, reaction <= 5 frames, |x| <= 0.4,
/// y in [0.2, 0.7], width in [0.10, 0.55], |tilt| <= 30 degrees.
inline std::vector<UserModel> convergence_grid() {
    std::vector<UserModel> grid;
    std::uint64_t seed = 1;
    for (double compliance : {0.3, 0.65, 1.0}) {
        for (double noise : {0.0, 0.01}) {
            for (int reaction : {0, 5}) {
                for (double x : {-0.4, -0.2, 0.0, 0.2, 0.4}) {
                    for (double y : {0.2, 0.45, 0.7}) {
                        for (double w : {0.10, 0.30, 0.55}) {
                            for (double tilt : {-30.0, 0.0, 30.0}) {
                                UserModel u;
                                u.x_offset = x;
                                u.y_center = y;
                                u.face_width = w;
                                u.tilt_deg = tilt;
                                u.compliance = compliance;
                                u.reaction_frames = reaction;
                                u.noise_sigma = noise;
                                u.seed = seed++;
                                grid.push_back(u);
                            }
                        }
                    }
                }
            }
        }
    }
    return grid;
}

inline std::vector<TraceSummary> run_sweep(const std::vector<UserModel>& users, const EngineConfig& engine_cfg,
                                           const SimConfig& sim_cfg, unsigned jobs = 0) {
    std::vector<TraceSummary> out(users.size());
    if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
    jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(users.size(), 1)));

    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(jobs);
    auto worker = [&](unsigned id) {
        try {
            for (std::size_t i = next++; i < users.size(); i = next++) {
                out[i] = run(users[i], engine_cfg, sim_cfg).summary;
            }
        } catch (...) {
            errors[id] = std::current_exception();
        }
    };
    std::vector<std::thread> pool;
    for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker, j);
    worker(0);
    for (auto& t : pool) t.join();
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return out;
}

}  // namespace frameguide
