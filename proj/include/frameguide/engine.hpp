#pragma once

// Guidance decision layer.
//
// `step` folds one observation into the engine state and yields at most one
// spoken event. Time comes only from the caller's timestamps; the engine never
// reads a clock. One global speech window covers every utterance, and a face
// counts as lost only after a run of consecutive frames without landmarks.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "frameguide/catalog.hpp"
#include "frameguide/error.hpp"
#include "frameguide/luminance.hpp"
#include "frameguide/spatial.hpp"

namespace frameguide {

struct EngineConfig {
    SpatialThresholds spatial;
    LightingThresholds lighting;
    std::int64_t speech_debounce_ms = 4000;
    int noface_frame_debounce = 10;
    std::string locale = "en";

    void validate() const {
        spatial.validate();
        lighting.validate();
        if (speech_debounce_ms <= 0) throw ConfigError("speech_debounce_ms must be positive");
        if (noface_frame_debounce < 1) throw ConfigError("noface_frame_debounce must be at least 1");
    }
};

struct EngineState {
    std::optional<std::int64_t> last_utterance_ms;
    int consecutive_noface_frames = 0;
    std::optional<std::int64_t> last_lighting_sample_ms;
    Lighting current_lighting = Lighting::Unknown;
    bool presence_confirmed = false;
    std::optional<AlignmentState> last_announced_state;
    /// Latest correction selected while the speech window was closed.
    std::optional<std::string> pending_message;
    /// Set once the aligned confirmation has been spoken for the current
    /// run of all-Ok frames.
    bool aligned_announced = false;
    std::optional<std::int64_t> last_step_ms;

    friend bool operator==(const EngineState&, const EngineState&) = default;
};

enum class Severity { Assertive, Polite };

constexpr std::string_view to_string(Severity s) noexcept {
    return s == Severity::Assertive ? "Assertive" : "Polite";
}

struct GuidanceEvent {
    std::string key;
    std::string text;
    Severity severity = Severity::Polite;
    std::int64_t timestamp_ms = 0;

    friend bool operator==(const GuidanceEvent&, const GuidanceEvent&) = default;
};

struct Observation {
    std::int64_t timestamp_ms = 0;
    std::optional<FaceLandmarks> landmarks;
    std::optional<LumaFrame> frame;
};

struct StepResult {
    EngineState state;
    std::optional<GuidanceEvent> event;
    /// Raw per-frame analysis (presence before hysteresis).
    AlignmentState observed;
    /// Correction chosen this step, whether spoken or held back.
    std::optional<std::string> selected;
    bool suppressed = false;
};

/// Spatial corrections and presence loss interrupt; status updates queue.
inline Severity severity_for(std::string_view key) noexcept {
    if (key == msg::kAligned || key == msg::kTooDark || key == msg::kTooBright ||
        key == msg::kWaitingForCamera) {
        return Severity::Polite;
    }
    return Severity::Assertive;
}

/// Highest-priority problem in `a`, in the order
/// presence > distance > horizontal > vertical > tilt > lighting > aligned.
/// Returns the aligned key for an all-Ok state unless it was already spoken.
inline std::optional<std::string> select_correction(const AlignmentState& a,
                                                    bool aligned_announced = false) {
    auto key = [](std::string_view k) { return std::optional<std::string>(std::string(k)); };
    if (a.presence == Presence::Lost) return key(msg::kNoFace);
    switch (a.distance) {
        case Distance::TooFar: return key(msg::kTooFar);
        case Distance::TooClose: return key(msg::kTooClose);
        case Distance::Ok: break;
    }
    switch (a.horizontal) {
        case Horizontal::TooLeft: return key(msg::kTooFarLeft);
        case Horizontal::TooRight: return key(msg::kTooFarRight);
        case Horizontal::Centered: break;
    }
    switch (a.vertical) {
        case Vertical::TooHigh: return key(msg::kTooHigh);
        case Vertical::TooLow: return key(msg::kTooLow);
        case Vertical::Ok: break;
    }
    switch (a.tilt) {
        case Tilt::TiltedClockwise: return key(msg::kTiltedClockwise);
        case Tilt::TiltedCounterClockwise: return key(msg::kTiltedCounterClockwise);
        case Tilt::Level: break;
    }
    switch (a.lighting) {
        case Lighting::TooDark: return key(msg::kTooDark);
        case Lighting::TooBright: return key(msg::kTooBright);
        case Lighting::Ok:
        case Lighting::Unknown: break;
    }
    if (aligned_announced) return std::nullopt;
    return key(msg::kAligned);
}

inline bool speech_window_open(const EngineState& s, std::int64_t now_ms, const EngineConfig& cfg) noexcept {
    return !s.last_utterance_ms || now_ms - *s.last_utterance_ms >= cfg.speech_debounce_ms;
}

inline StepResult step(const EngineState& state, const Observation& obs, const EngineConfig& cfg,
                       const MessageCatalog& catalog) {
    if (state.last_step_ms && obs.timestamp_ms < *state.last_step_ms) {
        throw ContractViolation("timestamp " + std::to_string(obs.timestamp_ms) + " precedes " +
                                std::to_string(*state.last_step_ms));
    }

    StepResult out;
    EngineState& next = out.state;
    next = state;
    next.last_step_ms = obs.timestamp_ms;

    if (obs.frame && should_sample(obs.timestamp_ms, state.last_lighting_sample_ms, cfg.lighting)) {
        next.current_lighting = lighting_status(mean_luma(*obs.frame), cfg.lighting);
        next.last_lighting_sample_ms = obs.timestamp_ms;
    }

    out.observed = analyze(obs.landmarks, next.current_lighting, cfg.spatial);

    bool decided = true;
    if (obs.landmarks) {
        next.consecutive_noface_frames = 0;
        next.presence_confirmed = true;
    } else {
        ++next.consecutive_noface_frames;
        if (next.consecutive_noface_frames >= cfg.noface_frame_debounce) {
            next.presence_confirmed = false;
        } else {
            // Short dropout: hold everything, say nothing.
            decided = false;
        }
    }

    if (decided) {
        if (!out.observed.all_ok()) next.aligned_announced = false;
        out.selected = select_correction(out.observed, next.aligned_announced);
    }

    if (!out.selected) {
        next.pending_message.reset();
        return out;
    }

    if (!speech_window_open(state, obs.timestamp_ms, cfg)) {
        next.pending_message = out.selected;
        out.suppressed = true;
        return out;
    }

    GuidanceEvent ev;
    ev.key = *out.selected;
    ev.text = resolve_message(ev.key, cfg.locale, catalog);
    ev.severity = severity_for(ev.key);
    ev.timestamp_ms = obs.timestamp_ms;
    out.event = std::move(ev);

    next.last_utterance_ms = obs.timestamp_ms;
    next.pending_message.reset();
    next.last_announced_state = out.observed;
    if (*out.selected == msg::kAligned) next.aligned_announced = true;
    return out;
}

/// Convenience driver owning one session's state. The catalog must outlive
/// the engine.
class GuidanceEngine {
public:
    explicit GuidanceEngine(EngineConfig cfg = {},
                            const MessageCatalog& catalog = MessageCatalog::builtin())
        : cfg_(std::move(cfg)), catalog_(&catalog) {
        cfg_.validate();
    }

    StepResult step(const Observation& obs) {
        StepResult r = frameguide::step(state_, obs, cfg_, *catalog_);
        state_ = r.state;
        return r;
    }

    const EngineState& state() const noexcept { return state_; }
    const EngineConfig& config() const noexcept { return cfg_; }
    const MessageCatalog& catalog() const noexcept { return *catalog_; }
    void reset() { state_ = EngineState{}; }

private:
    EngineConfig cfg_;
    const MessageCatalog* catalog_;
    EngineState state_;
};

}  // namespace frameguide
