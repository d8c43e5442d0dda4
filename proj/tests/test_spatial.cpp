#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "frameguide/spatial.hpp"

using namespace frameguide;

namespace {

// Centered, level, mid-distance face.
FaceLandmarks centered() {
    return FaceLandmarks{{0.5, 0.42}, {0.395, 0.42}, {0.605, 0.42}, {0.5, 0.42}, 0.30, 0.39};
}

FaceLandmarks with_nose_x(double x) {
    auto lm = centered();
    lm.nose.x = x;
    return lm;
}

FaceLandmarks with_eyes(Point2 left, Point2 right) {
    auto lm = centered();
    lm.left_eye_outer = left;
    lm.right_eye_outer = right;
    return lm;
}

FaceLandmarks mirrored(const FaceLandmarks& lm) {
    auto flip = [](Point2 p) { return Point2{1.0 - p.x, p.y}; };
    // Reflection swaps which eye is on the image left.
    return FaceLandmarks{flip(lm.nose), flip(lm.right_eye_outer), flip(lm.left_eye_outer),
                         flip(lm.bbox_center), lm.bbox_width, lm.bbox_height};
}

}  // namespace

TEST(Horizontal, ClassifiesAgainstCenterBand) {
    const SpatialThresholds t;
    EXPECT_EQ(horizontal_status(with_nose_x(0.50), t), Horizontal::Centered);
    EXPECT_EQ(horizontal_status(with_nose_x(0.30), t), Horizontal::TooLeft);
    EXPECT_EQ(horizontal_status(with_nose_x(0.62), t), Horizontal::Centered);
    EXPECT_EQ(horizontal_status(with_nose_x(0.38), t), Horizontal::Centered);
    EXPECT_EQ(horizontal_status(with_nose_x(0.621), t), Horizontal::TooRight);
    EXPECT_EQ(horizontal_status(with_nose_x(0.379), t), Horizontal::TooLeft);
}

TEST(Vertical, UsesBoxCenterNotNose) {
    const SpatialThresholds t;
    auto lm = centered();
    lm.nose.y = 0.05;
    EXPECT_EQ(vertical_status(lm, t), Vertical::Ok);
    lm.bbox_center.y = 0.20;
    EXPECT_EQ(vertical_status(lm, t), Vertical::TooHigh);
    lm.bbox_center.y = 0.60;  // 0.60 - 0.42 = 0.18 > 0.12
    EXPECT_EQ(vertical_status(lm, t), Vertical::TooLow);
}

TEST(Tilt, MatchesHandComputedArctangent) {
    const SpatialThresholds t;
    auto level = tilt_status(with_eyes({0.4, 0.5}, {0.6, 0.5}), t);
    EXPECT_EQ(level.status, Tilt::Level);
    EXPECT_DOUBLE_EQ(level.angle_deg, 0.0);

    auto cw = tilt_status(with_eyes({0.4, 0.50}, {0.6, 0.55}), t);
    EXPECT_EQ(cw.status, Tilt::TiltedClockwise);
    EXPECT_NEAR(cw.angle_deg, 14.036243467926479, 1e-12);

    auto small = tilt_status(with_eyes({0.4, 0.50}, {0.6, 0.52}), t);
    EXPECT_EQ(small.status, Tilt::Level);
    EXPECT_NEAR(small.angle_deg, 5.710593137499642, 1e-12);

    auto ccw = tilt_status(with_eyes({0.4, 0.55}, {0.6, 0.50}), t);
    EXPECT_EQ(ccw.status, Tilt::TiltedCounterClockwise);
    EXPECT_NEAR(ccw.angle_deg, -14.036243467926479, 1e-12);
}

TEST(Tilt, AngleIsFoldedIntoHalfOpenRange) {
    // Vertical eye line.
    EXPECT_DOUBLE_EQ(eye_line_angle_deg(with_eyes({0.5, 0.4}, {0.5, 0.6})), 90.0);
    EXPECT_DOUBLE_EQ(eye_line_angle_deg(with_eyes({0.5, 0.6}, {0.5, 0.4})), 90.0);
    // Swapped eyes read the same line.
    EXPECT_NEAR(eye_line_angle_deg(with_eyes({0.6, 0.55}, {0.4, 0.50})), 14.036243467926479, 1e-12);
}

TEST(Tilt, CoincidentEyesAreInvalid) {
    EXPECT_THROW(tilt_status(with_eyes({0.5, 0.5}, {0.5, 0.5}), SpatialThresholds{}), InvalidLandmarks);
}

TEST(TiltRule, IsStrictAtTolerance) {
    const SpatialThresholds t;
    EXPECT_EQ(classify_tilt(7.99, t), Tilt::Level);
    EXPECT_EQ(classify_tilt(8.0, t), Tilt::TiltedClockwise);
    EXPECT_EQ(classify_tilt(-8.0, t), Tilt::TiltedCounterClockwise);
}

TEST(Distance, BandIsInclusive) {
    const SpatialThresholds t;
    auto lm = centered();
    lm.bbox_width = 0.30;
    EXPECT_EQ(distance_status(lm, t), Distance::Ok);
    lm.bbox_width = 0.10;
    EXPECT_EQ(distance_status(lm, t), Distance::TooFar);
    lm.bbox_width = 0.18;
    EXPECT_EQ(distance_status(lm, t), Distance::Ok);
    lm.bbox_width = 0.45;
    EXPECT_EQ(distance_status(lm, t), Distance::Ok);
    lm.bbox_width = 0.46;
    EXPECT_EQ(distance_status(lm, t), Distance::TooClose);
}

TEST(Analyze, AbsentLandmarksMeanLost) {
    const auto a = analyze(std::nullopt, Lighting::Ok, SpatialThresholds{});
    EXPECT_EQ(a.presence, Presence::Lost);
    EXPECT_EQ(a.lighting, Lighting::Ok);
    EXPECT_FALSE(a.geometry_ok());
}

TEST(Analyze, CenteredFaceIsAllOk) {
    const auto a = analyze(centered(), Lighting::Unknown, SpatialThresholds{});
    EXPECT_EQ(a.presence, Presence::Detected);
    EXPECT_EQ(a.horizontal, Horizontal::Centered);
    EXPECT_EQ(a.vertical, Vertical::Ok);
    EXPECT_EQ(a.tilt, Tilt::Level);
    EXPECT_EQ(a.distance, Distance::Ok);
    EXPECT_TRUE(a.all_ok());
}

TEST(Analyze, ReportsIndependentAxesTogether) {
    auto lm = centered();
    lm.nose.x = 0.30;
    lm.bbox_width = 0.10;
    const auto a = analyze(lm, Lighting::Unknown, SpatialThresholds{});
    EXPECT_EQ(a.horizontal, Horizontal::TooLeft);
    EXPECT_EQ(a.distance, Distance::TooFar);
    EXPECT_EQ(a.vertical, Vertical::Ok);
    EXPECT_EQ(a.tilt, Tilt::Level);
}

TEST(Analyze, RejectsOutOfRangeLandmarks) {
    auto lm = centered();
    lm.nose.x = 1.2;
    EXPECT_THROW(analyze(lm, Lighting::Unknown, SpatialThresholds{}), InvalidLandmarks);
    lm = centered();
    lm.bbox_width = 0.0;
    EXPECT_THROW(analyze(lm, Lighting::Unknown, SpatialThresholds{}), InvalidLandmarks);
    lm = centered();
    lm.right_eye_outer = lm.left_eye_outer;
    EXPECT_THROW(analyze(lm, Lighting::Unknown, SpatialThresholds{}), InvalidLandmarks);
}

TEST(Thresholds, ValidateRejectsInvertedBands) {
    SpatialThresholds t;
    t.distance_far_width = 0.5;
    EXPECT_THROW(t.validate(), ConfigError);
    t = {};
    t.vertical_ideal = 1.0;
    EXPECT_THROW(t.validate(), ConfigError);
    EXPECT_NO_THROW(SpatialThresholds{}.validate());
}

// Property checks over random valid landmark sets.
class SpatialProperties : public ::testing::Test {
protected:
    FaceLandmarks random_landmarks() {
        std::uniform_real_distribution<double> unit(0.05, 0.95);
        std::uniform_real_distribution<double> width(0.02, 0.9);
        FaceLandmarks lm;
        lm.nose = {unit(gen_), unit(gen_)};
        lm.left_eye_outer = {unit(gen_), unit(gen_)};
        do {
            lm.right_eye_outer = {unit(gen_), unit(gen_)};
        } while (lm.right_eye_outer == lm.left_eye_outer);
        lm.bbox_center = {unit(gen_), unit(gen_)};
        lm.bbox_width = width(gen_);
        lm.bbox_height = width(gen_);
        return lm;
    }

    std::mt19937_64 gen_{20261014};
};

TEST_F(SpatialProperties, ClassificationIsPure) {
    const SpatialThresholds t;
    for (int i = 0; i < 2000; ++i) {
        const auto lm = random_landmarks();
        EXPECT_EQ(analyze(lm, Lighting::Ok, t), analyze(lm, Lighting::Ok, t));
    }
}

TEST_F(SpatialProperties, WiderHorizontalToleranceNeverDecenters) {
    SpatialThresholds narrow, wide;
    wide.horizontal_tolerance = 0.2;
    for (int i = 0; i < 2000; ++i) {
        const auto lm = random_landmarks();
        if (horizontal_status(lm, narrow) == Horizontal::Centered) {
            EXPECT_EQ(horizontal_status(lm, wide), Horizontal::Centered);
        }
    }
}

TEST_F(SpatialProperties, MirroringSwapsLeftRightAndTiltSense) {
    const SpatialThresholds t;
    auto swap_h = [](Horizontal h) {
        return h == Horizontal::TooLeft ? Horizontal::TooRight : h == Horizontal::TooRight ? Horizontal::TooLeft : h;
    };
    auto swap_t = [](Tilt v) {
        return v == Tilt::TiltedClockwise          ? Tilt::TiltedCounterClockwise
               : v == Tilt::TiltedCounterClockwise ? Tilt::TiltedClockwise
                                                   : v;
    };
    for (int i = 0; i < 2000; ++i) {
        const auto lm = random_landmarks();
        const auto a = analyze(lm, Lighting::Unknown, t);
        const auto b = analyze(mirrored(lm), Lighting::Unknown, t);
        EXPECT_EQ(b.horizontal, swap_h(a.horizontal));
        EXPECT_EQ(b.tilt, swap_t(a.tilt)) << "angle " << a.tilt_deg;
        EXPECT_EQ(b.vertical, a.vertical);
        EXPECT_EQ(b.distance, a.distance);
    }
}
