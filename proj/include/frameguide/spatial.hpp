#pragma once

// Per-frame face framing analysis.
//
// Coordinates are normalized image coordinates as the landmark detector
// reports them: x in [0,1] from the left edge, y in [0,1] from the top edge
// (y grows downward). Every classifier here is a pure function of its inputs.

#include <cmath>
#include <numbers>
#include <optional>
#include <string_view>

#include "frameguide/error.hpp"

namespace frameguide {

/// Comparisons against a threshold treat values within this distance of the
/// threshold as equal to it, so that e.g. 0.38 - 0.5 lands on the +-0.12 band
/// despite binary rounding.
inline constexpr double kBoundaryEpsilon = 1e-9;

struct Point2 {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point2&, const Point2&) = default;
};

/// Detector landmark indices used by the rules below.
namespace landmark_index {
inline constexpr int kNoseTip = 1;
inline constexpr int kLeftEyeOuter = 33;
inline constexpr int kRightEyeOuter = 263;
}  // namespace landmark_index

/// The subset of a face mesh the spatial rules need. "left" and "right" are
/// image-left and image-right.
struct FaceLandmarks {
    Point2 nose;
    Point2 left_eye_outer;
    Point2 right_eye_outer;
    Point2 bbox_center;
    double bbox_width = 0.0;
    double bbox_height = 0.0;

    friend bool operator==(const FaceLandmarks&, const FaceLandmarks&) = default;
};

struct SpatialThresholds {
    double horizontal_tolerance = 0.12;
    double vertical_ideal = 0.42;
    double vertical_tolerance = 0.12;
    double tilt_tolerance_deg = 8.0;
    double distance_far_width = 0.18;
    double distance_near_width = 0.45;

    void validate() const {
        if (!(horizontal_tolerance > 0.0) || !(vertical_tolerance > 0.0) ||
            !(tilt_tolerance_deg > 0.0)) {
            throw ConfigError("spatial tolerances must be positive");
        }
        if (!(vertical_ideal > 0.0 && vertical_ideal < 1.0)) {
            throw ConfigError("vertical_ideal must lie in (0, 1)");
        }
        if (!(distance_far_width > 0.0 && distance_far_width < distance_near_width)) {
            throw ConfigError("distance bands must satisfy 0 < far_width < near_width");
        }
    }
};

enum class Horizontal { TooLeft, Centered, TooRight };
enum class Vertical { TooHigh, Ok, TooLow };
enum class Tilt { Level, TiltedClockwise, TiltedCounterClockwise };
enum class Distance { TooFar, Ok, TooClose };
enum class Presence { Detected, Lost };
enum class Lighting { TooDark, Ok, TooBright, Unknown };

/// One frame's classification. When `presence` is Lost the geometric axes
/// hold their aligned values and carry no information.
struct AlignmentState {
    Horizontal horizontal = Horizontal::Centered;
    Vertical vertical = Vertical::Ok;
    Tilt tilt = Tilt::Level;
    Distance distance = Distance::Ok;
    Presence presence = Presence::Lost;
    Lighting lighting = Lighting::Unknown;
    double tilt_deg = 0.0;

    bool geometry_ok() const noexcept {
        return presence == Presence::Detected && horizontal == Horizontal::Centered &&
               vertical == Vertical::Ok && tilt == Tilt::Level && distance == Distance::Ok;
    }

    /// Geometry aligned and lighting not known to be bad.
    bool all_ok() const noexcept {
        return geometry_ok() && (lighting == Lighting::Ok || lighting == Lighting::Unknown);
    }

    friend bool operator==(const AlignmentState&, const AlignmentState&) = default;
};

constexpr std::string_view to_string(Horizontal v) noexcept {
    switch (v) {
        case Horizontal::TooLeft: return "TooLeft";
        case Horizontal::Centered: return "Centered";
        case Horizontal::TooRight: return "TooRight";
    }
    return "?";
}

constexpr std::string_view to_string(Vertical v) noexcept {
    switch (v) {
        case Vertical::TooHigh: return "TooHigh";
        case Vertical::Ok: return "Ok";
        case Vertical::TooLow: return "TooLow";
    }
    return "?";
}

constexpr std::string_view to_string(Tilt v) noexcept {
    switch (v) {
        case Tilt::Level: return "Level";
        case Tilt::TiltedClockwise: return "TiltedClockwise";
        case Tilt::TiltedCounterClockwise: return "TiltedCounterClockwise";
    }
    return "?";
}

constexpr std::string_view to_string(Distance v) noexcept {
    switch (v) {
        case Distance::TooFar: return "TooFar";
        case Distance::Ok: return "Ok";
        case Distance::TooClose: return "TooClose";
    }
    return "?";
}

constexpr std::string_view to_string(Presence v) noexcept {
    return v == Presence::Detected ? "Detected" : "Lost";
}

constexpr std::string_view to_string(Lighting v) noexcept {
    switch (v) {
        case Lighting::TooDark: return "TooDark";
        case Lighting::Ok: return "Ok";
        case Lighting::TooBright: return "TooBright";
        case Lighting::Unknown: return "Unknown";
    }
    return "?";
}

namespace detail {

inline bool in_unit(double v) noexcept { return v >= 0.0 && v <= 1.0; }

inline bool in_unit(const Point2& p) noexcept { return in_unit(p.x) && in_unit(p.y); }

}  // namespace detail

inline void validate(const FaceLandmarks& lm) {
    if (!detail::in_unit(lm.nose) || !detail::in_unit(lm.left_eye_outer) ||
        !detail::in_unit(lm.right_eye_outer) || !detail::in_unit(lm.bbox_center)) {
        throw InvalidLandmarks("landmark outside the unit square");
    }
    if (!(lm.bbox_width > 0.0 && lm.bbox_width <= 1.0) ||
        !(lm.bbox_height > 0.0 && lm.bbox_height <= 1.0)) {
        throw InvalidLandmarks("bounding box size must lie in (0, 1]");
    }
    if (lm.left_eye_outer == lm.right_eye_outer) {
        throw InvalidLandmarks("outer eye points coincide");
    }
}

inline Horizontal horizontal_status(const FaceLandmarks& lm, const SpatialThresholds& t) {
    const double offset = lm.nose.x - 0.5;
    const double band = t.horizontal_tolerance + kBoundaryEpsilon;
    if (offset < -band) return Horizontal::TooLeft;
    if (offset > band) return Horizontal::TooRight;
    return Horizontal::Centered;
}

/// TooHigh means the face sits too close to the top of the frame.
inline Vertical vertical_status(const FaceLandmarks& lm, const SpatialThresholds& t) {
    const double offset = lm.bbox_center.y - t.vertical_ideal;
    const double band = t.vertical_tolerance + kBoundaryEpsilon;
    if (offset < -band) return Vertical::TooHigh;
    if (offset > band) return Vertical::TooLow;
    return Vertical::Ok;
}

/// Eye-line angle in degrees, folded into (-90, 90]. Positive when the
/// image-right eye sits lower in the image.
inline double eye_line_angle_deg(const FaceLandmarks& lm) {
    if (lm.left_eye_outer == lm.right_eye_outer) {
        throw InvalidLandmarks("outer eye points coincide");
    }
    const double dx = lm.right_eye_outer.x - lm.left_eye_outer.x;
    const double dy = lm.right_eye_outer.y - lm.left_eye_outer.y;
    double deg = std::atan2(dy, dx) * 180.0 / std::numbers::pi;
    if (deg > 90.0) deg -= 180.0;
    if (deg <= -90.0) deg += 180.0;
    return deg;
}

/// The tilt rule is strict: an angle equal to the tolerance is already tilted.
inline Tilt classify_tilt(double angle_deg, const SpatialThresholds& t) noexcept {
    if (std::abs(angle_deg) < t.tilt_tolerance_deg - kBoundaryEpsilon) return Tilt::Level;
    return angle_deg > 0.0 ? Tilt::TiltedClockwise : Tilt::TiltedCounterClockwise;
}

struct TiltReading {
    Tilt status;
    double angle_deg;
};

inline TiltReading tilt_status(const FaceLandmarks& lm, const SpatialThresholds& t) {
    const double angle = eye_line_angle_deg(lm);
    return {classify_tilt(angle, t), angle};
}

inline Distance distance_status(const FaceLandmarks& lm, const SpatialThresholds& t) {
    if (lm.bbox_width < t.distance_far_width - kBoundaryEpsilon) return Distance::TooFar;
    if (lm.bbox_width > t.distance_near_width + kBoundaryEpsilon) return Distance::TooClose;
    return Distance::Ok;
}

/// Raw, pre-debounce classification of one frame. Absent landmarks give
/// presence Lost; the presence hysteresis lives in the guidance engine.
inline AlignmentState analyze(const std::optional<FaceLandmarks>& landmarks, Lighting lighting,
                              const SpatialThresholds& t) {
    AlignmentState s;
    s.lighting = lighting;
    if (!landmarks) {
        s.presence = Presence::Lost;
        return s;
    }
    validate(*landmarks);
    const auto tilt = tilt_status(*landmarks, t);
    s.presence = Presence::Detected;
    s.horizontal = horizontal_status(*landmarks, t);
    s.vertical = vertical_status(*landmarks, t);
    s.tilt = tilt.status;
    s.tilt_deg = tilt.angle_deg;
    s.distance = distance_status(*landmarks, t);
    return s;
}

}  // namespace frameguide
