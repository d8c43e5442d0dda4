#pragma once

// Frame luminance per ITU-R BT.601 and the lighting classifier built on it.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "frameguide/error.hpp"
#include "frameguide/spatial.hpp"

namespace frameguide {

inline constexpr int kLumaFrameWidth = 64;
inline constexpr int kLumaFrameHeight = 48;

struct Rgb {
    std::uint8_t r = 0;
    std::uint8_t g = 0;
    std::uint8_t b = 0;

    friend bool operator==(const Rgb&, const Rgb&) = default;
};

/// Row-major RGB frame. The capture side downsamples to 64x48 but any
/// positive size is accepted.
struct LumaFrame {
    int width = 0;
    int height = 0;
    std::vector<Rgb> pixels;

    static LumaFrame filled(int width, int height, Rgb color) {
        return LumaFrame{width, height,
                         std::vector<Rgb>(static_cast<std::size_t>(width) * height, color)};
    }
};

struct LightingThresholds {
    double dark_below = 40.0;
    double bright_above = 220.0;
    std::int64_t sample_interval_ms = 2000;

    void validate() const {
        if (!(dark_below >= 0.0 && dark_below < bright_above && bright_above <= 255.0)) {
            throw ConfigError("lighting thresholds must satisfy 0 <= dark < bright <= 255");
        }
        if (sample_interval_ms <= 0) throw ConfigError("sample_interval_ms must be positive");
    }
};

inline constexpr double luma(double r, double g, double b) noexcept {
    return 0.299 * r + 0.587 * g + 0.114 * b;
}

inline constexpr double luma(Rgb p) noexcept { return luma(p.r, p.g, p.b); }

/// Mean luma of an interleaved RGB buffer (3 bytes per pixel).
inline double mean_luma(std::span<const std::uint8_t> rgb, int width, int height) {
    if (width <= 0 || height <= 0) throw InvalidFrame("frame has no pixels");
    const auto count = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
    if (rgb.size() != count * 3) throw InvalidFrame("pixel buffer size does not match width x height");
    double sum = 0.0;
    for (std::size_t i = 0; i < rgb.size(); i += 3) sum += luma(rgb[i], rgb[i + 1], rgb[i + 2]);
    return sum / static_cast<double>(count);
}

inline double mean_luma(const LumaFrame& frame) {
    if (frame.width <= 0 || frame.height <= 0 || frame.pixels.empty()) {
        throw InvalidFrame("frame has no pixels");
    }
    if (frame.pixels.size() != static_cast<std::size_t>(frame.width) * frame.height) {
        throw InvalidFrame("pixel count does not match width x height");
    }
    double sum = 0.0;
    for (const Rgb& p : frame.pixels) sum += luma(p);
    return sum / static_cast<double>(frame.pixels.size());
}

inline Lighting lighting_status(double mean, const LightingThresholds& t) noexcept {
    if (mean < t.dark_below) return Lighting::TooDark;
    if (mean > t.bright_above) return Lighting::TooBright;
    return Lighting::Ok;
}

inline bool should_sample(std::int64_t now_ms, std::optional<std::int64_t> last_sample_ms,
                          const LightingThresholds& t) noexcept {
    return !last_sample_ms || now_ms - *last_sample_ms >= t.sample_interval_ms;
}

}  // namespace frameguide
