#pragma once

// JSON configuration covering every threshold and weight. Any section or key
// may be omitted; omitted values keep their defaults. Unknown keys are
// rejected so typos do not silently fall back to defaults.
//
//   {
//     "spatial":    {"horizontal_tolerance": 0.12, "vertical_ideal": 0.42, "vertical_tolerance": 0.12,
//                    "tilt_tolerance_deg": 8.0, "distance_far_width": 0.18, "distance_near_width": 0.45},
//     "lighting":   {"dark_below": 40, "bright_above": 220, "sample_interval_ms": 2000},
//     "engine":     {"speech_debounce_ms": 4000, "noface_frame_debounce": 10, "locale": "en"},
//     "scoring":    {"weights": {"L_d": 1, ...}, "theta": 0.5, "steps_max": 20,
//                    "friction": {"alpha": 0.2, "beta": 0.2, "gamma": 0.2, "delta": 0.2, "epsilon": 0.2}},
//     "simulation": {"frame_interval_ms": 33, "max_cycles": 40, "convergence_hold_frames": 30,
//                    "max_frames": 200000, "eye_half_separation": 0.35, "bbox_aspect": 1.3}
//   }

#include <functional>
#include <istream>
#include <map>
#include <set>
#include <string>

#include <json.hpp>

#include "frameguide/acb.hpp"
#include "frameguide/engine.hpp"
#include "frameguide/error.hpp"
#include "frameguide/simulator.hpp"

namespace frameguide {

struct AppConfig {
    EngineConfig engine;
    acb::ScoringConfig scoring;
    SimConfig simulation;
    bool theta_from_config = false;
};

namespace detail {

using Setter = std::function<void(const nlohmann::json&)>;

inline void apply_section(const nlohmann::json& doc, const char* section,
                          const std::map<std::string, Setter>& setters) {
    if (!doc.contains(section)) return;
    const auto& obj = doc.at(section);
    if (!obj.is_object()) throw ConfigError(std::string("section '") + section + "' must be an object");
    for (const auto& [key, value] : obj.items()) {
        const auto it = setters.find(key);
        if (it == setters.end()) throw ConfigError(std::string("unknown key '") + section + "." + key + "'");
        try {
            it->second(value);
        } catch (const nlohmann::json::exception&) {
            throw ConfigError(std::string("wrong type for '") + section + "." + key + "'");
        }
    }
}

template <typename T>
Setter set(T& field) {
    return [&field](const nlohmann::json& v) { field = v.get<T>(); };
}

}  // namespace detail

inline AppConfig config_from_json(const nlohmann::json& doc) {
    if (!doc.is_object()) throw ConfigError("configuration must be a JSON object");
    static const std::set<std::string> sections = {"spatial", "lighting", "engine", "scoring", "simulation"};
    for (const auto& [key, _] : doc.items()) {
        if (!sections.count(key)) throw ConfigError("unknown section '" + key + "'");
    }

    AppConfig cfg;
    auto& sp = cfg.engine.spatial;
    detail::apply_section(doc, "spatial",
                          {{"horizontal_tolerance", detail::set(sp.horizontal_tolerance)},
                           {"vertical_ideal", detail::set(sp.vertical_ideal)},
                           {"vertical_tolerance", detail::set(sp.vertical_tolerance)},
                           {"tilt_tolerance_deg", detail::set(sp.tilt_tolerance_deg)},
                           {"distance_far_width", detail::set(sp.distance_far_width)},
                           {"distance_near_width", detail::set(sp.distance_near_width)}});
    auto& li = cfg.engine.lighting;
    detail::apply_section(doc, "lighting",
                          {{"dark_below", detail::set(li.dark_below)},
                           {"bright_above", detail::set(li.bright_above)},
                           {"sample_interval_ms", detail::set(li.sample_interval_ms)}});
    auto& en = cfg.engine;
    detail::apply_section(doc, "engine",
                          {{"speech_debounce_ms", detail::set(en.speech_debounce_ms)},
                           {"noface_frame_debounce", detail::set(en.noface_frame_debounce)},
                           {"locale", detail::set(en.locale)}});

    auto& sc = cfg.scoring;
    detail::apply_section(
        doc, "scoring",
        {{"theta",
          [&](const nlohmann::json& v) {
              sc.theta = v.get<double>();
              cfg.theta_from_config = true;
          }},
         {"steps_max", detail::set(sc.steps_max)},
         {"weights",
          [&](const nlohmann::json& v) {
              acb::Weights w;
              w.fill(0.0);
              if (v.is_array()) {
                  if (v.size() != acb::kDimensionCount) throw ConfigError("scoring.weights needs 8 entries");
                  for (std::size_t i = 0; i < w.size(); ++i) w[i] = v[i].get<double>();
              } else if (v.is_object()) {
                  for (const auto& [sym, val] : v.items()) {
                      const auto d = acb::dimension_from_symbol(sym);
                      if (!d) throw ConfigError("unknown weight dimension '" + sym + "'");
                      w[acb::index(*d)] = val.get<double>();
                  }
              } else {
                  throw ConfigError("scoring.weights must be an array or an object");
              }
              sc.weights = w;
          }},
         {"friction", [&](const nlohmann::json& v) {
              detail::apply_section(nlohmann::json{{"friction", v}}, "friction",
                                    {{"alpha", detail::set(sc.friction.deployment)},
                                     {"beta", detail::set(sc.friction.cognitive)},
                                     {"gamma", detail::set(sc.friction.complexity)},
                                     {"delta", detail::set(sc.friction.offline_gap)},
                                     {"epsilon", detail::set(sc.friction.infrastructure)}});
          }}});

    auto& sim = cfg.simulation;
    detail::apply_section(doc, "simulation",
                          {{"frame_interval_ms", detail::set(sim.frame_interval_ms)},
                           {"max_cycles", detail::set(sim.max_cycles)},
                           {"convergence_hold_frames", detail::set(sim.convergence_hold_frames)},
                           {"max_frames", detail::set(sim.max_frames)},
                           {"eye_half_separation", detail::set(sim.geometry.eye_half_separation)},
                           {"bbox_aspect", detail::set(sim.geometry.bbox_aspect)}});

    cfg.engine.validate();
    cfg.scoring.validate();
    cfg.simulation.validate();
    return cfg;
}

inline AppConfig load_config(std::istream& in) {
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("configuration is not valid JSON: ") + e.what());
    }
    return config_from_json(doc);
}

}  // namespace frameguide
