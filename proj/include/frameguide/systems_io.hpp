#pragma once

// Systems descriptor files and score reports.
//
// A descriptor file lists named constraint vectors, one block per system:
//
//   [Probe 1 (AI-Gen)]
//   L_d = 0.05
//   ...
//   C_x = 2
//   notes = URL load
//
// All eight dimensions are required; `notes` is optional. Names must be
// unique. '#' starts a comment except inside `notes`.

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "frameguide/acb.hpp"
#include "frameguide/error.hpp"
#include "frameguide/text_format.hpp"

namespace frameguide::acb {

inline std::vector<SystemDescriptor> read_systems(std::istream& in) {
    std::vector<SystemDescriptor> systems;
    std::vector<std::set<Dimension>> seen;
    std::vector<std::size_t> header_lines;
    std::set<std::string, std::less<>> names;

    auto finish = [&] {
        if (systems.empty()) return;
        if (seen.back().size() != kDimensionCount) {
            std::string missing;
            for (Dimension d : kDimensions) {
                if (!seen.back().count(d)) missing += (missing.empty() ? "" : ", ") + std::string(symbol(d));
            }
            throw ParseError(header_lines.back(), "system '" + systems.back().name + "' lacks " + missing);
        }
    };

    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = text::trim(raw);
        if (line.empty() || line.front() == '#') continue;
        if (line.front() == '[') {
            if (line.back() != ']') throw ParseError(line_no, "unterminated system header");
            finish();
            std::string name(text::trim(line.substr(1, line.size() - 2)));
            if (name.empty()) throw ParseError(line_no, "empty system name");
            if (!names.insert(name).second) throw ParseError(line_no, "duplicate system name '" + name + "'");
            systems.push_back({name, {}, {}});
            seen.emplace_back();
            header_lines.push_back(line_no);
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) throw ParseError(line_no, "expected 'key = value'");
        if (systems.empty()) throw ParseError(line_no, "field before any [system] header");
        const std::string_view key = text::trim(line.substr(0, eq));
        std::string_view value = text::trim(line.substr(eq + 1));
        if (key == "notes") {
            systems.back().notes = std::string(value);
            continue;
        }
        const auto dim = dimension_from_symbol(key);
        if (!dim) throw ParseError(line_no, "unknown field '" + std::string(key) + "'");
        value = text::trim(text::strip_comment(value));
        const auto v = text::parse_double(value);
        if (!v) throw ParseError(line_no, "bad number '" + std::string(value) + "'");
        if (!seen.back().insert(*dim).second) {
            throw ParseError(line_no, "duplicate field '" + std::string(key) + "'");
        }
        try {
            systems.back().kappa.set(*dim, *v);
            systems.back().kappa.validate();
        } catch (const DomainError& e) {
            throw ParseError(line_no, e.what());
        }
    }
    finish();
    return systems;
}

inline void write_systems(std::ostream& out, std::span<const SystemDescriptor> systems) {
    bool first = true;
    for (const auto& s : systems) {
        if (!first) out << '\n';
        first = false;
        out << '[' << s.name << "]\n";
        for (Dimension d : kDimensions) {
            out << symbol(d) << " = ";
            if (d == Dimension::InteractionComplexity) {
                out << s.kappa.interaction_steps;
            } else {
                out << text::fixed(s.kappa[d], 2);
            }
            out << '\n';
        }
        if (!s.notes.empty()) out << "notes = " << s.notes << '\n';
    }
}

struct SystemScore {
    std::string name;
    double utility = 0.0;
    double friction = 0.0;
    double acs = 0.0;
    bool on_frontier = false;
};

struct ScoreReport {
    std::vector<SystemScore> rows;
    BoundaryResult boundary;
    double theta = 0.5;
    bool theta_is_default = true;
};

inline ScoreReport score_systems(std::span<const SystemDescriptor> systems, const AbilityProfile& profile,
                                 const Environment& env, const ScoringConfig& cfg, bool theta_is_default) {
    cfg.validate();
    profile.validate();
    env.validate();
    ScoreReport report;
    report.boundary = acb_contains(systems, profile, env, cfg);
    report.theta = cfg.theta;
    report.theta_is_default = theta_is_default;
    const auto frontier = pareto_indices(systems);
    for (std::size_t i = 0; i < systems.size(); ++i) {
        const auto& s = systems[i];
        report.rows.push_back({s.name, utility(s.kappa, profile, env, cfg), friction(s.kappa, cfg),
                               acs(s.kappa, cfg),
                               std::binary_search(frontier.begin(), frontier.end(), i)});
    }
    return report;
}

namespace detail {

inline std::string pad(std::string s, std::size_t width) {
    if (s.size() < width) s.append(width - s.size(), ' ');
    return s;
}

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

inline std::string theta_line(const ScoreReport& r) {
    std::string s = "acb theta=" + text::fixed(r.theta, 3);
    s += r.theta_is_default ? " (default, not calibrated)" : " (user supplied)";
    s += " contains=";
    s += r.boundary.contains ? "true" : "false";
    s += " best=\"" + r.boundary.best_system + "\" U=" + text::fixed(r.boundary.best_utility, 4);
    return s;
}

}  // namespace detail

inline void write_score_text(std::ostream& out, const ScoreReport& r) {
    std::size_t w = 6;
    for (const auto& row : r.rows) w = std::max(w, row.name.size());
    out << detail::pad("system", w) << "  " << detail::pad("U", 8) << detail::pad("F", 8)
        << detail::pad("ACS", 8) << "frontier\n";
    for (const auto& row : r.rows) {
        out << detail::pad(row.name, w) << "  " << detail::pad(text::fixed(row.utility, 4), 8)
            << detail::pad(text::fixed(row.friction, 4), 8) << detail::pad(text::fixed(row.acs, 4), 8)
            << (row.on_frontier ? "yes" : "no") << '\n';
    }
    out << detail::theta_line(r) << '\n';
}

inline void write_score_csv(std::ostream& out, const ScoreReport& r) {
    out << "system,U,F,ACS,frontier\n";
    for (const auto& row : r.rows) {
        out << detail::csv_field(row.name) << ',' << text::fixed(row.utility, 6) << ','
            << text::fixed(row.friction, 6) << ',' << text::fixed(row.acs, 6) << ','
            << (row.on_frontier ? 1 : 0) << '\n';
    }
    out << "# " << detail::theta_line(r) << '\n';
}

/// Constraint matrix: one row per dimension, one column per system, followed
/// by the derived scores.
inline void write_matrix_text(std::ostream& out, std::span<const SystemDescriptor> systems,
                              const ScoreReport& r) {
    std::size_t label_w = 10;
    for (Dimension d : kDimensions) {
        label_w = std::max(label_w, label(d).size() + symbol(d).size() + 3);
    }
    std::vector<std::size_t> col_w;
    for (const auto& s : systems) col_w.push_back(std::max<std::size_t>(s.name.size(), 8));

    out << detail::pad("Constraint", label_w);
    for (std::size_t i = 0; i < systems.size(); ++i) out << "  " << detail::pad(systems[i].name, col_w[i]);
    out << '\n';
    for (Dimension d : kDimensions) {
        out << detail::pad(std::string(label(d)) + " (" + std::string(symbol(d)) + ")", label_w);
        for (std::size_t i = 0; i < systems.size(); ++i) {
            const std::string v = d == Dimension::InteractionComplexity
                                      ? std::to_string(systems[i].kappa.interaction_steps) + " steps"
                                      : text::fixed(systems[i].kappa[d], 2);
            out << "  " << detail::pad(v, col_w[i]);
        }
        out << '\n';
    }
    auto derived = [&](const char* name, auto get) {
        out << detail::pad(name, label_w);
        for (std::size_t i = 0; i < r.rows.size(); ++i) out << "  " << detail::pad(get(r.rows[i]), col_w[i]);
        out << '\n';
    };
    derived("Utility (U)", [](const SystemScore& s) { return text::fixed(s.utility, 4); });
    derived("Friction (F)", [](const SystemScore& s) { return text::fixed(s.friction, 4); });
    derived("Capability Score (ACS)", [](const SystemScore& s) { return text::fixed(s.acs, 4); });
    derived("Pareto frontier", [](const SystemScore& s) { return std::string(s.on_frontier ? "yes" : "no"); });
    out << detail::theta_line(r) << '\n';
}

inline void write_matrix_csv(std::ostream& out, std::span<const SystemDescriptor> systems, const ScoreReport& r) {
    out << "constraint";
    for (const auto& s : systems) out << ',' << detail::csv_field(s.name);
    out << '\n';
    for (Dimension d : kDimensions) {
        out << detail::csv_field(std::string(label(d)) + " (" + std::string(symbol(d)) + ")");
        for (const auto& s : systems) {
            out << ',';
            if (d == Dimension::InteractionComplexity) {
                out << s.kappa.interaction_steps;
            } else {
                out << text::fixed(s.kappa[d], 2);
            }
        }
        out << '\n';
    }
    out << "Utility (U)";
    for (const auto& row : r.rows) out << ',' << text::fixed(row.utility, 6);
    out << "\nFriction (F)";
    for (const auto& row : r.rows) out << ',' << text::fixed(row.friction, 6);
    out << "\nCapability Score (ACS)";
    for (const auto& row : r.rows) out << ',' << text::fixed(row.acs, 6);
    out << "\nPareto frontier";
    for (const auto& row : r.rows) out << ',' << (row.on_frontier ? 1 : 0);
    out << "\n# " << detail::theta_line(r) << '\n';
}

}  // namespace frameguide::acb
