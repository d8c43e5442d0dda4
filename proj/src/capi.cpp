#include "frameguide/frameguide_c.h"

#include <cstring>
#include <sstream>
#include <string>

#include "frameguide/catalog.hpp"
#include "frameguide/engine.hpp"

struct fg_session {
    frameguide::MessageCatalog catalog;
    frameguide::EngineConfig config;
    frameguide::EngineState state;
    std::string last_error;
};

namespace {

thread_local std::string g_init_error;

template <typename Fn>
int guarded(fg_session* s, Fn&& fn) {
    try {
        return fn();
    } catch (const frameguide::ContractViolation& e) {
        s->last_error = e.what();
        return FG_ERR_CONTRACT;
    } catch (const frameguide::InvalidLandmarks& e) {
        s->last_error = e.what();
        return FG_ERR_LANDMARKS;
    } catch (const frameguide::InvalidFrame& e) {
        s->last_error = e.what();
        return FG_ERR_FRAME;
    } catch (const frameguide::CatalogError& e) {
        s->last_error = e.what();
        return FG_ERR_CATALOG;
    } catch (const frameguide::ConfigError& e) {
        s->last_error = e.what();
        return FG_ERR_CONFIG;
    } catch (const std::exception& e) {
        s->last_error = e.what();
        return FG_ERR_INVALID_ARGUMENT;
    }
}

bool copy_cstr(const std::string& src, char* dst, std::size_t cap) {
    if (src.size() + 1 > cap) return false;
    std::memcpy(dst, src.c_str(), src.size() + 1);
    return true;
}

}  // namespace

extern "C" {

void fg_default_config(fg_config* out) {
    if (!out) return;
    const frameguide::EngineConfig d;
    *out = fg_config{};
    out->horizontal_tolerance = d.spatial.horizontal_tolerance;
    out->vertical_ideal = d.spatial.vertical_ideal;
    out->vertical_tolerance = d.spatial.vertical_tolerance;
    out->tilt_tolerance_deg = d.spatial.tilt_tolerance_deg;
    out->distance_far_width = d.spatial.distance_far_width;
    out->distance_near_width = d.spatial.distance_near_width;
    out->dark_below = d.lighting.dark_below;
    out->bright_above = d.lighting.bright_above;
    out->sample_interval_ms = d.lighting.sample_interval_ms;
    out->speech_debounce_ms = d.speech_debounce_ms;
    out->noface_frame_debounce = d.noface_frame_debounce;
    copy_cstr(d.locale, out->locale, sizeof out->locale);
}

fg_session* fg_init(const fg_config* cfg, const char* catalog_json) {
    try {
        auto* s = new fg_session{frameguide::MessageCatalog::builtin(), {}, {}, {}};
        if (cfg) {
            auto& c = s->config;
            c.spatial.horizontal_tolerance = cfg->horizontal_tolerance;
            c.spatial.vertical_ideal = cfg->vertical_ideal;
            c.spatial.vertical_tolerance = cfg->vertical_tolerance;
            c.spatial.tilt_tolerance_deg = cfg->tilt_tolerance_deg;
            c.spatial.distance_far_width = cfg->distance_far_width;
            c.spatial.distance_near_width = cfg->distance_near_width;
            c.lighting.dark_below = cfg->dark_below;
            c.lighting.bright_above = cfg->bright_above;
            c.lighting.sample_interval_ms = cfg->sample_interval_ms;
            c.speech_debounce_ms = cfg->speech_debounce_ms;
            c.noface_frame_debounce = cfg->noface_frame_debounce;
            c.locale.assign(cfg->locale, strnlen(cfg->locale, sizeof cfg->locale));
        }
        try {
            s->config.validate();
            if (catalog_json) {
                std::istringstream in(catalog_json);
                s->catalog = frameguide::MessageCatalog::load(in);
            }
        } catch (...) {
            delete s;
            throw;
        }
        g_init_error.clear();
        return s;
    } catch (const std::exception& e) {
        g_init_error = e.what();
        return nullptr;
    }
}

const char* fg_init_error(void) { return g_init_error.c_str(); }

void fg_free(fg_session* session) { delete session; }

int fg_step(fg_session* session, int64_t timestamp_ms, const double* landmarks, const uint8_t* rgb,
            int32_t width, int32_t height, fg_event* out_event, fg_alignment* out_alignment) {
    if (!session) return FG_ERR_INVALID_ARGUMENT;
    if (!out_event) {
        session->last_error = "out_event must not be NULL";
        return FG_ERR_INVALID_ARGUMENT;
    }
    return guarded(session, [&]() -> int {
        frameguide::Observation obs;
        obs.timestamp_ms = timestamp_ms;
        if (landmarks) {
            const double* v = landmarks;
            obs.landmarks = frameguide::FaceLandmarks{{v[0], v[1]}, {v[2], v[3]}, {v[4], v[5]}, {v[6], v[7]}, v[8], v[9]};
        }
        // Only materialize the frame when the engine will sample it.
        if (rgb && frameguide::should_sample(timestamp_ms, session->state.last_lighting_sample_ms,
                                             session->config.lighting)) {
            if (width <= 0 || height <= 0) throw frameguide::InvalidFrame("frame has no pixels");
            frameguide::LumaFrame frame;
            frame.width = width;
            frame.height = height;
            const auto count = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
            frame.pixels.resize(count);
            for (std::size_t i = 0; i < count; ++i) frame.pixels[i] = {rgb[3 * i], rgb[3 * i + 1], rgb[3 * i + 2]};
            obs.frame = std::move(frame);
        }

        auto r = frameguide::step(session->state, obs, session->config, session->catalog);

        if (out_alignment) {
            const auto& a = r.observed;
            *out_alignment = fg_alignment{static_cast<int32_t>(a.horizontal), static_cast<int32_t>(a.vertical),
                                          static_cast<int32_t>(a.tilt),       static_cast<int32_t>(a.distance),
                                          static_cast<int32_t>(a.presence),   static_cast<int32_t>(a.lighting),
                                          a.tilt_deg};
        }
        if (!r.event) {
            session->state = std::move(r.state);
            return FG_OK;
        }
        fg_event ev{};
        ev.timestamp_ms = r.event->timestamp_ms;
        ev.severity = r.event->severity == frameguide::Severity::Assertive ? FG_ASSERTIVE : FG_POLITE;
        if (!copy_cstr(r.event->key, ev.key, sizeof ev.key) || !copy_cstr(r.event->text, ev.text, sizeof ev.text)) {
            session->last_error = "event text exceeds the fixed event buffer";
            return FG_ERR_BUFFER;
        }
        session->state = std::move(r.state);
        *out_event = ev;
        return FG_EVENT;
    });
}

int fg_resolve(const fg_session* session, const char* key, const char* locale, char* buffer, size_t capacity) {
    if (!session || !key || !buffer) return FG_ERR_INVALID_ARGUMENT;
    auto* s = const_cast<fg_session*>(session);
    return guarded(s, [&]() -> int {
        const std::string text =
            frameguide::resolve_message(key, locale ? std::string_view(locale) : session->config.locale, session->catalog);
        if (!copy_cstr(text, buffer, capacity)) {
            s->last_error = "buffer too small";
            return FG_ERR_BUFFER;
        }
        return static_cast<int>(text.size());
    });
}

const char* fg_last_error(const fg_session* session) { return session ? session->last_error.c_str() : ""; }

}  // extern "C"
