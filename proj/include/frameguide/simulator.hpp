#pragma once

// Headless closed loop: a synthetic user is projected to landmarks, the
// engine analyzes them and speaks, and the user acts on each spoken
// instruction after a reaction delay.
//
// The synthetic user acts on one instruction at a time and only on the axis
// it names, moving `compliance` of the way to that axis's target. Noise is
// observation jitter around the true pose (it does not accumulate): sigma
// in frame-fraction units for position and width, and sigma radians for
// tilt.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "frameguide/engine.hpp"
#include "frameguide/error.hpp"
#include "frameguide/rng.hpp"
#include "frameguide/snapshot.hpp"
#include "frameguide/trace.hpp"

namespace frameguide {

struct UserModel {
    double x_offset = 0.0;
    double y_center = 0.42;
    double face_width = 0.30;
    double tilt_deg = 0.0;
    double compliance = 0.5;
    int reaction_frames = 3;
    double noise_sigma = 0.005;
    std::uint64_t seed = 0;

    UserSnapshot pose() const { return {x_offset, y_center, face_width, tilt_deg}; }

    void validate() const {
        if (!(compliance >= 0.0 && compliance <= 1.0)) throw ConfigError("compliance must lie in [0, 1]");
        if (reaction_frames < 0) throw ConfigError("reaction_frames must be non-negative");
        if (!(noise_sigma >= 0.0)) throw ConfigError("noise_sigma must be non-negative");
        if (!(face_width > 0.0)) throw ConfigError("face_width must be positive");
        if (!(std::abs(tilt_deg) < 90.0)) throw ConfigError("tilt_deg must lie in (-90, 90)");
    }
};

/// Anthropometric ratios used to place landmarks around the nose.
struct FaceGeometry {
    double eye_half_separation = 0.35;  // times face width
    double bbox_aspect = 1.3;           // bbox height / width
};

struct SimConfig {
    std::int64_t frame_interval_ms = 33;
    std::size_t max_cycles = 40;
    std::size_t convergence_hold_frames = 30;
    /// Hard stop for runs that neither converge nor exhaust the event budget.
    std::size_t max_frames = 200000;
    FaceGeometry geometry;

    void validate() const {
        if (frame_interval_ms <= 0) throw ConfigError("frame_interval_ms must be positive");
        if (max_cycles < 1) throw ConfigError("max_cycles must be at least 1");
        if (convergence_hold_frames < 1) throw ConfigError("convergence_hold_frames must be at least 1");
        if (max_frames < 1) throw ConfigError("max_frames must be at least 1");
    }
};

/// Landmarks for a pose. Eyes sit on a line through the nose rotated by the
/// tilt (positive = image-right eye lower); out-of-frame values are clamped.
inline FaceLandmarks project(const UserSnapshot& pose, const FaceGeometry& geom = {}) {
    auto clamp01 = [](double v) { return std::clamp(v, 0.0, 1.0); };
    const double cx = 0.5 + pose.x_offset;
    const double cy = pose.y_center;
    const double width = std::clamp(pose.face_width, 1e-3, 1.0);
    const double half = geom.eye_half_separation * width;
    const double rad = pose.tilt_deg * std::numbers::pi / 180.0;
    const double dx = half * std::cos(rad);
    const double dy = half * std::sin(rad);
    FaceLandmarks lm;
    lm.nose = {clamp01(cx), clamp01(cy)};
    lm.left_eye_outer = {clamp01(cx - dx), clamp01(cy - dy)};
    lm.right_eye_outer = {clamp01(cx + dx), clamp01(cy + dy)};
    lm.bbox_center = {clamp01(cx), clamp01(cy)};
    lm.bbox_width = width;
    lm.bbox_height = std::clamp(geom.bbox_aspect * width, 1e-3, 1.0);
    return lm;
}

/// The pose after acting on `key` with the given compliance.
inline UserSnapshot respond(UserSnapshot pose, std::string_view key, double compliance,
                            const SpatialThresholds& t) {
    if (key == msg::kTooFar || key == msg::kTooClose) {
        const double target = 0.5 * (t.distance_far_width + t.distance_near_width);
        pose.face_width += compliance * (target - pose.face_width);
    } else if (key == msg::kTooFarLeft || key == msg::kTooFarRight) {
        pose.x_offset -= compliance * pose.x_offset;
    } else if (key == msg::kTooHigh || key == msg::kTooLow) {
        pose.y_center += compliance * (t.vertical_ideal - pose.y_center);
    } else if (key == msg::kTiltedClockwise || key == msg::kTiltedCounterClockwise) {
        pose.tilt_deg -= compliance * pose.tilt_deg;
    }
    return pose;
}

inline SessionTrace run(const UserModel& user, const EngineConfig& engine_cfg, const SimConfig& sim_cfg,
                        const MessageCatalog& catalog = MessageCatalog::builtin()) {
    user.validate();
    sim_cfg.validate();
    GuidanceEngine engine(engine_cfg, catalog);
    SimRng rng(user.seed);

    struct PendingResponse {
        std::string key;
        std::size_t due_frame;
    };

    SessionTrace trace;
    trace.summary.seed = user.seed;
    UserSnapshot pose = user.pose();
    std::optional<PendingResponse> pending;

    for (std::size_t frame = 0; frame < sim_cfg.max_frames; ++frame) {
        if (pending && frame >= pending->due_frame) {
            pose = respond(pose, pending->key, user.compliance, engine_cfg.spatial);
            pending.reset();
        }

        UserSnapshot seen = pose;
        if (user.noise_sigma > 0.0) {
            seen.x_offset += rng.gaussian(0.0, user.noise_sigma);
            seen.y_center += rng.gaussian(0.0, user.noise_sigma);
            seen.face_width += rng.gaussian(0.0, user.noise_sigma);
            seen.tilt_deg += rng.gaussian(0.0, user.noise_sigma) * 180.0 / std::numbers::pi;
        }

        Observation obs;
        obs.timestamp_ms = static_cast<std::int64_t>(frame) * sim_cfg.frame_interval_ms;
        obs.landmarks = project(seen, sim_cfg.geometry);
        StepResult r = engine.step(obs);

        if (r.event && trace.summary.cycles_used == sim_cfg.max_cycles) break;

        TraceRecord rec;
        rec.frame = frame;
        rec.timestamp_ms = obs.timestamp_ms;
        rec.user = pose;
        rec.landmarks = obs.landmarks;
        rec.observed = r.observed;
        rec.selected = r.selected;
        rec.event = r.event;
        rec.suppressed = r.suppressed;
        rec.state = r.state;
        trace.records.push_back(std::move(rec));

        if (r.event) {
            ++trace.summary.cycles_used;
            pending = PendingResponse{r.event->key, frame + 1 + static_cast<std::size_t>(user.reaction_frames)};
        }
        if (tail_all_ok(trace.records, sim_cfg.convergence_hold_frames)) {
            trace.summary.converged = true;
            break;
        }
    }
    trace.summary.frames_used = trace.records.size();
    return trace;
}

/// Drives the engine from recorded frames. `converged` reports whether the
/// recording ends with `hold_frames` aligned frames.
inline SessionTrace replay(const std::vector<SnapshotFrame>& frames, const EngineConfig& engine_cfg,
                           const MessageCatalog& catalog = MessageCatalog::builtin(),
                           std::size_t hold_frames = SimConfig{}.convergence_hold_frames) {
    GuidanceEngine engine(engine_cfg, catalog);
    SessionTrace trace;
    for (std::size_t i = 0; i < frames.size(); ++i) {
        const auto& f = frames[i];
        Observation obs{f.timestamp_ms, f.landmarks, std::nullopt};
        StepResult r;
        try {
            r = engine.step(obs);
        } catch (const ContractViolation& e) {
            if (f.line == 0) throw;
            throw ParseError(f.line, e.what());
        }
        TraceRecord rec;
        rec.frame = i;
        rec.timestamp_ms = f.timestamp_ms;
        rec.landmarks = f.landmarks;
        rec.observed = r.observed;
        rec.selected = r.selected;
        rec.event = r.event;
        rec.suppressed = r.suppressed;
        rec.state = r.state;
        if (r.event) ++trace.summary.cycles_used;
        trace.records.push_back(std::move(rec));
    }
    trace.summary.frames_used = trace.records.size();
    trace.summary.converged = tail_all_ok(trace.records, hold_frames);
    return trace;
}

}  // namespace frameguide
