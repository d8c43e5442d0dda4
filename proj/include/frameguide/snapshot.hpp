#pragma once

// Landmark snapshot files: one frame per line.
//
//   <timestamp_ms> <nose x y> <eyeL x y> <eyeR x y> <bbox cx cy w h>
//   <timestamp_ms> NOFACE
//
// Fields are separated by whitespace or commas. Blank lines and text after
// '#' are ignored.

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "frameguide/error.hpp"
#include "frameguide/spatial.hpp"
#include "frameguide/text_format.hpp"

namespace frameguide {

struct SnapshotFrame {
    std::int64_t timestamp_ms = 0;
    std::optional<FaceLandmarks> landmarks;
    /// 1-based source line, 0 when the frame was built in memory.
    std::size_t line = 0;
};

inline SnapshotFrame parse_snapshot_line(std::string_view raw, std::size_t line_no) {
    const auto fields = text::tokens(text::strip_comment(raw));
    if (fields.empty()) throw ParseError(line_no, "empty record");
    SnapshotFrame f;
    f.line = line_no;
    const auto ts = text::parse_int(fields[0]);
    if (!ts || *ts < 0) throw ParseError(line_no, "bad timestamp '" + std::string(fields[0]) + "'");
    f.timestamp_ms = *ts;
    if (fields.size() == 2 && fields[1] == "NOFACE") return f;
    if (fields.size() != 11) {
        throw ParseError(line_no, "expected NOFACE or 10 landmark values, got " +
                                      std::to_string(fields.size() - 1) + " fields");
    }
    double v[10];
    for (int i = 0; i < 10; ++i) {
        const auto d = text::parse_double(fields[i + 1]);
        if (!d) throw ParseError(line_no, "bad number '" + std::string(fields[i + 1]) + "'");
        v[i] = *d;
    }
    FaceLandmarks lm{{v[0], v[1]}, {v[2], v[3]}, {v[4], v[5]}, {v[6], v[7]}, v[8], v[9]};
    try {
        validate(lm);
    } catch (const InvalidLandmarks& e) {
        throw ParseError(line_no, e.what());
    }
    f.landmarks = lm;
    return f;
}

inline std::vector<SnapshotFrame> read_snapshots(std::istream& in) {
    std::vector<SnapshotFrame> frames;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (text::trim(text::strip_comment(line)).empty()) continue;
        frames.push_back(parse_snapshot_line(line, line_no));
    }
    return frames;
}

inline std::string format_snapshot(const SnapshotFrame& f) {
    std::string s = std::to_string(f.timestamp_ms);
    if (!f.landmarks) return s + " NOFACE";
    const auto& lm = *f.landmarks;
    for (double v : {lm.nose.x, lm.nose.y, lm.left_eye_outer.x, lm.left_eye_outer.y, lm.right_eye_outer.x,
                     lm.right_eye_outer.y, lm.bbox_center.x, lm.bbox_center.y, lm.bbox_width, lm.bbox_height}) {
        s += ' ';
        s += text::fixed(v);
    }
    return s;
}

inline void write_snapshots(std::ostream& out, const std::vector<SnapshotFrame>& frames) {
    for (const auto& f : frames) out << format_snapshot(f) << '\n';
}

}  // namespace frameguide
