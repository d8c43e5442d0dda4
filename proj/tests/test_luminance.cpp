#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "frameguide/luminance.hpp"

using namespace frameguide;

TEST(MeanLuma, BlackAndWhiteFrames) {
    EXPECT_DOUBLE_EQ(mean_luma(LumaFrame::filled(64, 48, {0, 0, 0})), 0.0);
    EXPECT_NEAR(mean_luma(LumaFrame::filled(64, 48, {255, 255, 255})), 255.0, 1e-9);
}

TEST(MeanLuma, PureChannelsUseBt601Weights) {
    // 0.299 * 255, 0.587 * 255, 0.114 * 255 by hand.
    EXPECT_NEAR(mean_luma(LumaFrame::filled(64, 48, {255, 0, 0})), 76.245, 1e-6);
    EXPECT_NEAR(mean_luma(LumaFrame::filled(64, 48, {0, 255, 0})), 149.685, 1e-6);
    EXPECT_NEAR(mean_luma(LumaFrame::filled(64, 48, {0, 0, 255})), 29.07, 1e-6);
}

TEST(MeanLuma, InterleavedBufferMatchesFrame) {
    std::mt19937 gen(5);
    LumaFrame f{8, 6, {}};
    std::vector<std::uint8_t> rgb;
    for (int i = 0; i < 48; ++i) {
        Rgb p{static_cast<std::uint8_t>(gen()), static_cast<std::uint8_t>(gen()), static_cast<std::uint8_t>(gen())};
        f.pixels.push_back(p);
        rgb.insert(rgb.end(), {p.r, p.g, p.b});
    }
    EXPECT_DOUBLE_EQ(mean_luma(rgb, 8, 6), mean_luma(f));
}

TEST(MeanLuma, RejectsEmptyOrMismatchedFrames) {
    EXPECT_THROW(mean_luma(LumaFrame{}), InvalidFrame);
    EXPECT_THROW(mean_luma(LumaFrame{2, 2, std::vector<Rgb>(3)}), InvalidFrame);
    std::vector<std::uint8_t> rgb(10);
    EXPECT_THROW(mean_luma(rgb, 2, 2), InvalidFrame);
    EXPECT_THROW(mean_luma(rgb, 0, 2), InvalidFrame);
}

TEST(MeanLuma, ConstantColorIsSizeIndependent) {
    const Rgb c{12, 200, 77};
    const double expected = 0.299 * 12 + 0.587 * 200 + 0.114 * 77;
    for (auto [w, h] : {std::pair{1, 1}, {64, 48}, {3, 17}, {640, 480}}) {
        EXPECT_NEAR(mean_luma(LumaFrame::filled(w, h, c)), expected, 1e-9) << w << "x" << h;
    }
}

TEST(Lighting, ClassifiesBands) {
    const LightingThresholds t;
    EXPECT_EQ(lighting_status(0.0, t), Lighting::TooDark);
    EXPECT_EQ(lighting_status(39.99, t), Lighting::TooDark);
    EXPECT_EQ(lighting_status(40.0, t), Lighting::Ok);
    EXPECT_EQ(lighting_status(128.0, t), Lighting::Ok);
    EXPECT_EQ(lighting_status(220.0, t), Lighting::Ok);
    EXPECT_EQ(lighting_status(255.0, t), Lighting::TooBright);
}

TEST(Lighting, SamplingCadence) {
    const LightingThresholds t;
    EXPECT_TRUE(should_sample(0, std::nullopt, t));
    EXPECT_FALSE(should_sample(1999, 0, t));
    EXPECT_TRUE(should_sample(2000, 0, t));
    EXPECT_TRUE(should_sample(5000, 2500, t));
}

TEST(Lighting, ThresholdValidation) {
    LightingThresholds t;
    t.dark_below = 230;
    EXPECT_THROW(t.validate(), ConfigError);
    t = {};
    t.sample_interval_ms = 0;
    EXPECT_THROW(t.validate(), ConfigError);
}
