#pragma once

// Session traces: the per-frame record of a live, replayed or simulated run,
// and its stable text serialization (golden files compare these bytes).
//
// Line layout after the "# frameguide trace v1" header:
//
//   f=<n> t=<ms> [user=<x>,<y>,<w>,<tilt>] obs=<10 values>|NOFACE
//     | h=.. v=.. tilt=..(<deg>) d=.. p=.. l=..
//     | sel=<key>|- out=emit:<severity>|held|-
//     | state=lu:..,nf:..,ls:..,light:..,pc:..,aa:..,pend:..
//
// (one physical line per record), then a single summary line
//
//   converged=<bool> cycles=<n> frames=<n> seed=<s>

#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "frameguide/engine.hpp"
#include "frameguide/text_format.hpp"

namespace frameguide {

struct UserSnapshot {
    double x_offset = 0.0;
    double y_center = 0.0;
    double face_width = 0.0;
    double tilt_deg = 0.0;

    friend bool operator==(const UserSnapshot&, const UserSnapshot&) = default;
};

struct TraceRecord {
    std::size_t frame = 0;
    std::int64_t timestamp_ms = 0;
    std::optional<UserSnapshot> user;
    std::optional<FaceLandmarks> landmarks;
    AlignmentState observed;
    std::optional<std::string> selected;
    std::optional<GuidanceEvent> event;
    bool suppressed = false;
    EngineState state;
};

struct TraceSummary {
    bool converged = false;
    std::size_t cycles_used = 0;
    std::size_t frames_used = 0;
    std::optional<std::uint64_t> seed;
};

struct SessionTrace {
    std::vector<TraceRecord> records;
    TraceSummary summary;

    std::vector<GuidanceEvent> events() const {
        std::vector<GuidanceEvent> out;
        for (const auto& r : records) {
            if (r.event) out.push_back(*r.event);
        }
        return out;
    }
};

/// True when the last `hold_frames` records exist and are all aligned.
inline bool tail_all_ok(const std::vector<TraceRecord>& records, std::size_t hold_frames) {
    if (hold_frames == 0 || records.size() < hold_frames) return false;
    for (std::size_t i = records.size() - hold_frames; i < records.size(); ++i) {
        if (!records[i].observed.all_ok()) return false;
    }
    return true;
}

namespace detail {

inline std::string opt_ms(const std::optional<std::int64_t>& v) {
    return v ? std::to_string(*v) : std::string("-");
}

}  // namespace detail

inline std::string state_digest(const EngineState& s) {
    std::string d = "lu:" + detail::opt_ms(s.last_utterance_ms);
    d += ",nf:" + std::to_string(s.consecutive_noface_frames);
    d += ",ls:" + detail::opt_ms(s.last_lighting_sample_ms);
    d += ",light:";
    d += to_string(s.current_lighting);
    d += ",pc:";
    d += s.presence_confirmed ? '1' : '0';
    d += ",aa:";
    d += s.aligned_announced ? '1' : '0';
    d += ",pend:" + s.pending_message.value_or("-");
    return d;
}

inline std::string format_record(const TraceRecord& r) {
    std::string s = "f=" + std::to_string(r.frame) + " t=" + std::to_string(r.timestamp_ms);
    if (r.user) {
        s += " user=" + text::fixed(r.user->x_offset) + ',' + text::fixed(r.user->y_center) + ',' +
             text::fixed(r.user->face_width) + ',' + text::fixed(r.user->tilt_deg);
    }
    s += " obs=";
    if (r.landmarks) {
        const auto& lm = *r.landmarks;
        bool first = true;
        for (double v : {lm.nose.x, lm.nose.y, lm.left_eye_outer.x, lm.left_eye_outer.y, lm.right_eye_outer.x,
                         lm.right_eye_outer.y, lm.bbox_center.x, lm.bbox_center.y, lm.bbox_width,
                         lm.bbox_height}) {
            if (!first) s += ',';
            s += text::fixed(v);
            first = false;
        }
    } else {
        s += "NOFACE";
    }
    const auto& a = r.observed;
    s += " | ";
    if (a.presence == Presence::Detected) {
        s += "h=";
        s += to_string(a.horizontal);
        s += " v=";
        s += to_string(a.vertical);
        s += " tilt=";
        s += to_string(a.tilt);
        s += '(' + text::fixed(a.tilt_deg, 3) + ')';
        s += " d=";
        s += to_string(a.distance);
    } else {
        s += "h=- v=- tilt=- d=-";
    }
    s += " p=";
    s += to_string(a.presence);
    s += " l=";
    s += to_string(a.lighting);
    s += " | sel=" + r.selected.value_or("-");
    s += " out=";
    if (r.event) {
        s += "emit:";
        s += to_string(r.event->severity);
    } else {
        s += r.suppressed ? "held" : "-";
    }
    s += " | state=" + state_digest(r.state);
    return s;
}

inline std::string format_summary(const TraceSummary& s) {
    std::string out = "converged=";
    out += s.converged ? "true" : "false";
    out += " cycles=" + std::to_string(s.cycles_used);
    out += " frames=" + std::to_string(s.frames_used);
    out += " seed=" + (s.seed ? std::to_string(*s.seed) : std::string("none"));
    return out;
}

inline void write_trace(std::ostream& out, const SessionTrace& trace) {
    out << "# frameguide trace v1\n";
    for (const auto& r : trace.records) out << format_record(r) << '\n';
    out << format_summary(trace.summary) << '\n';
}

inline std::string trace_to_string(const SessionTrace& trace) {
    std::ostringstream os;
    write_trace(os, trace);
    return os.str();
}

}  // namespace frameguide
