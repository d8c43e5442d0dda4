#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "frameguide/engine.hpp"

using namespace frameguide;

namespace {

FaceLandmarks centered() {
    return FaceLandmarks{{0.5, 0.42}, {0.395, 0.42}, {0.605, 0.42}, {0.5, 0.42}, 0.30, 0.39};
}

FaceLandmarks too_left() {
    auto lm = centered();
    lm.nose.x = 0.30;
    return lm;
}

Observation face(std::int64_t t, const FaceLandmarks& lm = centered()) { return {t, lm, std::nullopt}; }
Observation noface(std::int64_t t) { return {t, std::nullopt, std::nullopt}; }

AlignmentState all_ok_state() {
    AlignmentState a;
    a.presence = Presence::Detected;
    return a;
}

}  // namespace

TEST(SelectCorrection, PriorityOrder) {
    AlignmentState lost;
    lost.presence = Presence::Lost;
    EXPECT_EQ(select_correction(lost), "no_face");

    EXPECT_EQ(select_correction(all_ok_state()), "aligned");
    EXPECT_EQ(select_correction(all_ok_state(), true), std::nullopt);

    auto a = all_ok_state();
    a.horizontal = Horizontal::TooLeft;
    a.tilt = Tilt::TiltedClockwise;
    EXPECT_EQ(select_correction(a), "too_far_left");

    a.distance = Distance::TooFar;
    EXPECT_EQ(select_correction(a), "too_far");

    auto b = all_ok_state();
    b.vertical = Vertical::TooLow;
    b.tilt = Tilt::TiltedCounterClockwise;
    b.lighting = Lighting::TooDark;
    EXPECT_EQ(select_correction(b), "too_low");
    b.vertical = Vertical::Ok;
    EXPECT_EQ(select_correction(b), "tilted_counter_clockwise");
    b.tilt = Tilt::Level;
    EXPECT_EQ(select_correction(b), "too_dark");
    EXPECT_EQ(select_correction(b, true), "too_dark");
}

TEST(Severity, SpatialAndPresenceInterrupt) {
    for (auto k : {"no_face", "too_far", "too_close", "too_far_left", "too_far_right", "too_high", "too_low",
                   "tilted_clockwise", "tilted_counter_clockwise"}) {
        EXPECT_EQ(severity_for(k), Severity::Assertive) << k;
    }
    for (auto k : {"aligned", "too_dark", "too_bright", "waiting_for_camera"}) {
        EXPECT_EQ(severity_for(k), Severity::Polite) << k;
    }
}

TEST(Engine, PresenceLossNeedsTenAbsentFrames) {
    GuidanceEngine engine;
    for (int i = 0; i < 9; ++i) {
        const auto r = engine.step(noface(i * 33));
        EXPECT_FALSE(r.event) << "frame " << i;
        EXPECT_FALSE(r.selected);
    }
    const auto r = engine.step(noface(9 * 33));
    ASSERT_TRUE(r.event);
    EXPECT_EQ(r.event->key, "no_face");
    EXPECT_EQ(r.event->severity, Severity::Assertive);
    EXPECT_EQ(r.event->text, "No face detected. Please adjust the camera.");
}

TEST(Engine, SingleFaceFrameResetsNoFaceCounter) {
    GuidanceEngine engine;
    std::int64_t t = 0;
    for (int i = 0; i < 9; ++i) engine.step(noface(t += 33));
    EXPECT_EQ(engine.state().consecutive_noface_frames, 9);
    engine.step(face(t += 33));
    EXPECT_EQ(engine.state().consecutive_noface_frames, 0);
    for (int i = 0; i < 9; ++i) EXPECT_FALSE(engine.step(noface(t += 5000)).event);
    EXPECT_TRUE(engine.step(noface(t += 5000)).event);
}

TEST(Engine, SpeechWindowIsFourSeconds) {
    {
        GuidanceEngine engine;
        EXPECT_TRUE(engine.step(face(0, too_left())).event);
        const auto r = engine.step(face(3999, too_left()));
        EXPECT_FALSE(r.event);
        EXPECT_TRUE(r.suppressed);
        EXPECT_EQ(r.state.pending_message, "too_far_left");
    }
    {
        GuidanceEngine engine;
        EXPECT_TRUE(engine.step(face(0, too_left())).event);
        const auto r = engine.step(face(4000, too_left()));
        ASSERT_TRUE(r.event);
        EXPECT_EQ(r.event->timestamp_ms, 4000);
        EXPECT_FALSE(r.state.pending_message);
    }
}

TEST(Engine, DistanceOutranksHorizontal) {
    GuidanceEngine engine;
    auto lm = too_left();
    lm.bbox_width = 0.10;
    const auto r = engine.step(face(0, lm));
    ASSERT_TRUE(r.event);
    EXPECT_EQ(r.event->key, "too_far");
}

TEST(Engine, AlignedConfirmedOncePerTransition) {
    GuidanceEngine engine;
    std::vector<std::string> keys;
    std::int64_t t = 0;
    auto drive = [&](const FaceLandmarks& lm, int frames) {
        for (int i = 0; i < frames; ++i, t += 100) {
            if (auto r = engine.step(face(t, lm)); r.event) keys.push_back(r.event->key);
        }
    };
    drive(centered(), 100);  // 10 s aligned
    drive(too_left(), 30);
    drive(centered(), 100);
    EXPECT_EQ(keys, (std::vector<std::string>{"aligned", "too_far_left", "aligned"}));
}

TEST(Engine, AlignedConfirmationWaitsForSpeechWindow) {
    GuidanceEngine engine;
    ASSERT_TRUE(engine.step(face(0, too_left())).event);
    const auto held = engine.step(face(1000));
    EXPECT_FALSE(held.event);
    EXPECT_EQ(held.state.pending_message, "aligned");
    const auto spoken = engine.step(face(4000));
    ASSERT_TRUE(spoken.event);
    EXPECT_EQ(spoken.event->key, "aligned");
    EXPECT_EQ(spoken.event->severity, Severity::Polite);
    EXPECT_FALSE(engine.step(face(9000)).event);
}

TEST(Engine, LatestSuppressedCorrectionWins) {
    GuidanceEngine engine;
    ASSERT_TRUE(engine.step(face(0, too_left())).event);
    auto right = centered();
    right.nose.x = 0.8;
    EXPECT_EQ(engine.step(face(1000, right)).state.pending_message, "too_far_right");
    auto low = centered();
    low.bbox_center.y = 0.7;
    EXPECT_EQ(engine.step(face(2000, low)).state.pending_message, "too_low");
    const auto r = engine.step(face(4000, right));
    ASSERT_TRUE(r.event);
    EXPECT_EQ(r.event->key, "too_far_right");  // re-evaluated, not the stale pending one
}

TEST(Engine, ShortDropoutDoesNotRepeatAlignedConfirmation) {
    GuidanceEngine engine;
    std::int64_t t = 0;
    ASSERT_TRUE(engine.step(face(t)).event);
    for (int i = 0; i < 5; ++i) EXPECT_FALSE(engine.step(noface(t += 2000)).event);
    EXPECT_FALSE(engine.step(face(t += 2000)).event);
}

TEST(Engine, TimestampRegressionIsRejected) {
    GuidanceEngine engine;
    engine.step(face(100));
    EXPECT_THROW(engine.step(face(99)), ContractViolation);
    EXPECT_NO_THROW(engine.step(face(100)));
}

TEST(Engine, LightingSampledOnCadence) {
    GuidanceEngine engine;
    Observation o = face(0);
    o.frame = LumaFrame::filled(64, 48, {10, 10, 10});
    auto r = engine.step(o);
    EXPECT_EQ(r.state.current_lighting, Lighting::TooDark);
    EXPECT_EQ(r.state.last_lighting_sample_ms, 0);
    ASSERT_TRUE(r.event);
    EXPECT_EQ(r.event->key, "too_dark");
    EXPECT_EQ(r.event->severity, Severity::Polite);

    o.timestamp_ms = 1999;
    o.frame = LumaFrame::filled(64, 48, {128, 128, 128});
    r = engine.step(o);
    EXPECT_EQ(r.state.current_lighting, Lighting::TooDark);  // stale until the next sample

    o.timestamp_ms = 2000;
    r = engine.step(o);
    EXPECT_EQ(r.state.current_lighting, Lighting::Ok);
    EXPECT_EQ(r.state.last_lighting_sample_ms, 2000);

    // No frame: classification carries over.
    r = engine.step(face(6000));
    EXPECT_EQ(r.state.current_lighting, Lighting::Ok);
}

TEST(Engine, GeometryOutranksLighting) {
    GuidanceEngine engine;
    Observation o = face(0, too_left());
    o.frame = LumaFrame::filled(64, 48, {250, 250, 250});
    const auto r = engine.step(o);
    ASSERT_TRUE(r.event);
    EXPECT_EQ(r.event->key, "too_far_left");
    EXPECT_EQ(r.observed.lighting, Lighting::TooBright);
}

TEST(Engine, UnresolvableKeyIsCatalogError) {
    MessageCatalog sparse;
    sparse.add("aligned", "en", "ok");
    GuidanceEngine engine(EngineConfig{}, sparse);
    EXPECT_THROW(engine.step(face(0, too_left())), CatalogError);
}

TEST(Engine, LocaleSelectsText) {
    EngineConfig cfg;
    cfg.locale = "ne";
    GuidanceEngine engine(cfg);
    const auto r = engine.step(face(0));
    ASSERT_TRUE(r.event);
    EXPECT_EQ(r.event->text, resolve_message("aligned", "ne", MessageCatalog::builtin()));
    GuidanceEngine fallback(cfg);
    const auto f = fallback.step(face(0, too_left()));
    EXPECT_EQ(f.event->text, "Move left a little.");
}

TEST(Engine, ConfigValidation) {
    EngineConfig cfg;
    cfg.noface_frame_debounce = 0;
    EXPECT_THROW(GuidanceEngine{cfg}, ConfigError);
    cfg = {};
    cfg.speech_debounce_ms = 0;
    EXPECT_THROW(GuidanceEngine{cfg}, ConfigError);
}

// Random walks over face/no-face/misaligned frames with irregular spacing.
class EngineProperties : public ::testing::TestWithParam<std::uint64_t> {
protected:
    std::vector<Observation> random_session(std::size_t n) {
        std::mt19937_64 gen(GetParam());
        std::uniform_real_distribution<double> x(0.1, 0.9), w(0.05, 0.6), dy(-0.1, 0.1);
        std::uniform_int_distribution<int> gap(0, 400), kind(0, 9);
        std::vector<Observation> out;
        std::int64_t t = 0;
        for (std::size_t i = 0; i < n; ++i) {
            t += gap(gen);
            if (kind(gen) < 3) {
                out.push_back(noface(t));
                continue;
            }
            const double cx = x(gen), cy = x(gen), width = w(gen), d = dy(gen);
            FaceLandmarks lm{{cx, cy}, {std::clamp(cx - 0.1, 0.0, 1.0), cy}, {std::clamp(cx + 0.1, 0.0, 1.0), std::clamp(cy + d, 0.0, 1.0)},
                             {cx, cy}, width, std::min(1.0, 1.3 * width)};
            Observation o = face(t, lm);
            if (kind(gen) == 0) o.frame = LumaFrame::filled(4, 3, {static_cast<std::uint8_t>(gen() % 256), 0, 0});
            out.push_back(o);
        }
        return out;
    }
};

TEST_P(EngineProperties, EventsRespectSpeechWindowAndAreDeterministic) {
    const auto session = random_session(5000);
    GuidanceEngine a, b;
    std::optional<std::int64_t> last;
    std::int64_t last_sample = -1;
    for (const auto& o : session) {
        const auto ra = a.step(o);
        const auto rb = b.step(o);
        EXPECT_EQ(ra.event, rb.event);
        EXPECT_EQ(ra.state, rb.state);
        if (ra.event) {
            if (last) {
                EXPECT_GE(ra.event->timestamp_ms - *last, 4000);
            }
            last = ra.event->timestamp_ms;
        }
        if (ra.state.last_lighting_sample_ms && *ra.state.last_lighting_sample_ms != last_sample) {
            if (last_sample >= 0) {
                EXPECT_GE(*ra.state.last_lighting_sample_ms - last_sample, 2000);
            }
            last_sample = *ra.state.last_lighting_sample_ms;
        }
        if (o.landmarks) {
            EXPECT_EQ(ra.state.consecutive_noface_frames, 0);
        }
    }
}

INSTANTIATE_TEST_SUITE_P(Seeds, EngineProperties, ::testing::Values(1u, 2u, 3u, 42u));

TEST(Engine, StepIsPureTransition) {
    const EngineConfig cfg;
    const EngineState s0;
    const auto r1 = step(s0, face(0, too_left()), cfg, MessageCatalog::builtin());
    const auto r2 = step(s0, face(0, too_left()), cfg, MessageCatalog::builtin());
    EXPECT_EQ(r1.state, r2.state);
    EXPECT_EQ(r1.event, r2.event);
    EXPECT_EQ(s0, EngineState{});
}
