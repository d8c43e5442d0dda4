/*
 * Flat C entry points for embedding the guidance engine (browser module,
 * FFI bindings). All data crosses the boundary as plain structs, fixed-size
 * arrays and caller-owned buffers; no C++ types leak through.
 *
 * Landmark arrays hold 10 doubles in this order:
 *   nose x, nose y, left-eye-outer x, y, right-eye-outer x, y,
 *   bbox center x, bbox center y, bbox width, bbox height
 * A NULL landmark pointer means no face was detected this frame.
 *
 * Luma frames are interleaved RGB bytes, width * height * 3 long, or NULL
 * when the caller has no frame for this step.
 */
#ifndef FRAMEGUIDE_C_H
#define FRAMEGUIDE_C_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

enum fg_status {
    FG_OK = 0,
    FG_EVENT = 1,
    FG_ERR_INVALID_ARGUMENT = -1,
    FG_ERR_CONTRACT = -2,
    FG_ERR_LANDMARKS = -3,
    FG_ERR_FRAME = -4,
    FG_ERR_CATALOG = -5,
    FG_ERR_CONFIG = -6,
    FG_ERR_BUFFER = -7
};

enum fg_severity { FG_ASSERTIVE = 0, FG_POLITE = 1 };

typedef struct fg_config {
    double horizontal_tolerance;
    double vertical_ideal;
    double vertical_tolerance;
    double tilt_tolerance_deg;
    double distance_far_width;
    double distance_near_width;
    double dark_below;
    double bright_above;
    int64_t sample_interval_ms;
    int64_t speech_debounce_ms;
    int32_t noface_frame_debounce;
    char locale[16];
} fg_config;

#define FG_KEY_CAPACITY 32
#define FG_TEXT_CAPACITY 512

typedef struct fg_event {
    int64_t timestamp_ms;
    int32_t severity; /* enum fg_severity */
    char key[FG_KEY_CAPACITY];
    char text[FG_TEXT_CAPACITY];
} fg_event;

/* Raw per-frame classification. Enum values follow the declaration order
 * of the C++ enums: horizontal {TooLeft, Centered, TooRight}, vertical
 * {TooHigh, Ok, TooLow}, tilt {Level, Clockwise, CounterClockwise}, distance
 * {TooFar, Ok, TooClose}, presence {Detected, Lost}, lighting {TooDark, Ok,
 * TooBright, Unknown}. */
typedef struct fg_alignment {
    int32_t horizontal;
    int32_t vertical;
    int32_t tilt;
    int32_t distance;
    int32_t presence;
    int32_t lighting;
    double tilt_deg;
} fg_alignment;

typedef struct fg_session fg_session;

void fg_default_config(fg_config* out);

/* cfg and catalog_json may be NULL for defaults. Returns NULL on invalid
 * configuration or catalog; fg_init_error() then describes why. */
fg_session* fg_init(const fg_config* cfg, const char* catalog_json);
const char* fg_init_error(void);
void fg_free(fg_session* session);

/* Returns FG_EVENT when *out_event was filled, FG_OK when nothing was said,
 * or a negative fg_status. out_alignment may be NULL. */
int fg_step(fg_session* session, int64_t timestamp_ms, const double* landmarks, const uint8_t* rgb,
            int32_t width, int32_t height, fg_event* out_event, fg_alignment* out_alignment);

/* Writes the NUL-terminated text for key in locale (NULL = session locale).
 * Returns the text length in bytes, or a negative fg_status. */
int fg_resolve(const fg_session* session, const char* key, const char* locale, char* buffer, size_t capacity);

/* Message for the last failed call on this session. */
const char* fg_last_error(const fg_session* session);

#ifdef __cplusplus
}
#endif

#endif /* FRAMEGUIDE_C_H */
