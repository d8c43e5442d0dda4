#pragma once

// Localized guidance text.
//
// Keys name the condition in detector image space ("too_far_left" means the
// nose sits left of center in the camera image). The English text speaks in
// the user's own body frame: a face on the camera's left belongs to a user
// displaced toward their right, so the instruction is to move left.

#include <istream>
#include <map>
#include <string>
#include <string_view>
#include <utility>

#include <json.hpp>

#include "frameguide/error.hpp"

namespace frameguide {

namespace msg {
inline constexpr std::string_view kNoFace = "no_face";
inline constexpr std::string_view kTooFar = "too_far";
inline constexpr std::string_view kTooClose = "too_close";
inline constexpr std::string_view kTooFarLeft = "too_far_left";
inline constexpr std::string_view kTooFarRight = "too_far_right";
inline constexpr std::string_view kTooHigh = "too_high";
inline constexpr std::string_view kTooLow = "too_low";
inline constexpr std::string_view kTiltedClockwise = "tilted_clockwise";
inline constexpr std::string_view kTiltedCounterClockwise = "tilted_counter_clockwise";
inline constexpr std::string_view kTooDark = "too_dark";
inline constexpr std::string_view kTooBright = "too_bright";
inline constexpr std::string_view kAligned = "aligned";
inline constexpr std::string_view kWaitingForCamera = "waiting_for_camera";
}  // namespace msg

using Placeholders = std::map<std::string, std::string, std::less<>>;

class MessageCatalog {
public:
    explicit MessageCatalog(std::string default_locale = "en")
        : default_locale_(std::move(default_locale)) {}

    const std::string& default_locale() const noexcept { return default_locale_; }

    void add(std::string key, std::string locale, std::string text) {
        entries_[std::move(key)][std::move(locale)] = std::move(text);
    }

    bool contains(std::string_view key) const { return entries_.find(key) != entries_.end(); }

    /// Template for (key, locale), falling back to the default locale.
    const std::string& lookup(std::string_view key, std::string_view locale) const {
        const auto it = entries_.find(key);
        if (it == entries_.end()) throw CatalogError("unknown message key '" + std::string(key) + "'");
        const auto& by_locale = it->second;
        if (auto hit = by_locale.find(locale); hit != by_locale.end() && !hit->second.empty()) {
            return hit->second;
        }
        if (auto hit = by_locale.find(default_locale_); hit != by_locale.end() && !hit->second.empty()) {
            return hit->second;
        }
        throw CatalogError("message key '" + std::string(key) + "' has no text in default locale '" +
                           default_locale_ + "'");
    }

    /// Every key must resolve in the default locale.
    void validate() const {
        for (const auto& [key, by_locale] : entries_) {
            auto hit = by_locale.find(default_locale_);
            if (hit == by_locale.end() || hit->second.empty()) {
                throw CatalogError("message key '" + key + "' missing default-locale text");
            }
        }
    }

    const std::map<std::string, std::map<std::string, std::string, std::less<>>, std::less<>>&
    entries() const noexcept {
        return entries_;
    }

    friend bool operator==(const MessageCatalog&, const MessageCatalog&) = default;

    /// The catalog shipped with the library ("en" complete, partial "ne").
    static const MessageCatalog& builtin();

    /// Reads the JSON catalog format:
    ///   {"default_locale": "en", "messages": {"key": {"en": "...", "ne": "..."}}}
    static MessageCatalog from_json(const nlohmann::json& doc) {
        if (!doc.is_object() || !doc.contains("messages") || !doc["messages"].is_object()) {
            throw CatalogError("catalog must be an object with a 'messages' object");
        }
        MessageCatalog cat(doc.value("default_locale", std::string("en")));
        for (const auto& [key, by_locale] : doc["messages"].items()) {
            if (!by_locale.is_object()) throw CatalogError("entry '" + key + "' must map locale to text");
            for (const auto& [locale, text] : by_locale.items()) {
                if (!text.is_string()) throw CatalogError("entry '" + key + "/" + locale + "' is not text");
                cat.add(key, locale, text.get<std::string>());
            }
        }
        cat.validate();
        return cat;
    }

    static MessageCatalog load(std::istream& in) {
        nlohmann::json doc;
        try {
            in >> doc;
        } catch (const nlohmann::json::exception& e) {
            throw CatalogError(std::string("catalog is not valid JSON: ") + e.what());
        }
        return from_json(doc);
    }

    nlohmann::json to_json() const {
        nlohmann::json messages = nlohmann::json::object();
        for (const auto& [key, by_locale] : entries_) {
            for (const auto& [locale, text] : by_locale) messages[key][locale] = text;
        }
        return {{"default_locale", default_locale_}, {"messages", messages}};
    }

private:
    std::string default_locale_;
    std::map<std::string, std::map<std::string, std::string, std::less<>>, std::less<>> entries_;
};

inline const MessageCatalog& MessageCatalog::builtin() {
    static const MessageCatalog catalog = [] {
        MessageCatalog c("en");
        const std::pair<std::string_view, std::string_view> en[] = {
            {msg::kNoFace, "No face detected. Please adjust the camera."},
            {msg::kTooFar, "Move closer to the camera."},
            {msg::kTooClose, "Move back from the camera."},
            {msg::kTooFarLeft, "Move left a little."},
            {msg::kTooFarRight, "Move right a little."},
            {msg::kTooHigh, "Lower your face a little, or tilt the camera up."},
            {msg::kTooLow, "Raise your face a little, or tilt the camera down."},
            {msg::kTiltedClockwise, "Your head is tilted toward your left shoulder. Straighten it."},
            {msg::kTiltedCounterClockwise, "Your head is tilted toward your right shoulder. Straighten it."},
            {msg::kTooDark, "The room is too dark. Add some light in front of you."},
            {msg::kTooBright, "The image is too bright. Reduce light behind or in front of you."},
            {msg::kAligned, "Face centered and correctly sized."},
            {msg::kWaitingForCamera, "Waiting for camera."},
        };
        for (const auto& [key, text] : en) c.add(std::string(key), "en", std::string(text));
        c.add(std::string(msg::kNoFace), "ne", "अनुहार देखिएन। कृपया क्यामेरा मिलाउनुहोस्।");
        c.add(std::string(msg::kAligned), "ne", "अनुहार बीचमा छ।");
        c.add(std::string(msg::kWaitingForCamera), "ne", "क्यामेराको प्रतीक्षा गर्दै।");
        return c;
    }();
    return catalog;
}

/// Resolves `key` for `locale` and substitutes `{name}` placeholders.
inline std::string resolve_message(std::string_view key, std::string_view locale,
                                   const MessageCatalog& catalog, const Placeholders& values = {}) {
    const std::string& tmpl = catalog.lookup(key, locale);
    std::string out;
    out.reserve(tmpl.size());
    for (std::size_t i = 0; i < tmpl.size(); ++i) {
        if (tmpl[i] != '{') {
            out.push_back(tmpl[i]);
            continue;
        }
        const auto close = tmpl.find('}', i);
        if (close == std::string::npos) throw CatalogError("unterminated placeholder in '" + std::string(key) + "'");
        const std::string_view name(tmpl.data() + i + 1, close - i - 1);
        const auto it = values.find(name);
        if (it == values.end()) {
            throw CatalogError("no value for placeholder '{" + std::string(name) + "}' in '" +
                               std::string(key) + "'");
        }
        out += it->second;
        i = close;
    }
    if (out.empty()) throw CatalogError("message '" + std::string(key) + "' resolved to empty text");
    return out;
}

}  // namespace frameguide
