#pragma once

// Accessibility capability scoring: constraint vectors, weighted utility,
// capability-boundary membership, friction, the capability score and the
// Pareto frontier over constraint vectors.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "frameguide/error.hpp"

namespace frameguide::acb {

/// Constraint dimensions in vector order.
enum class Dimension : std::size_t {
    DeploymentLatency,         // L_d, cost
    CognitiveLoad,             // L_c, cost
    InfrastructureDependency,  // D_i, cost
    OfflinePersistence,        // P_o, benefit
    InteractionComplexity,     // C_x, steps, cost
    Adaptability,              // A_d, benefit
    AssistiveCompatibility,    // A_c, benefit
    Localization,              // L_z, benefit
};

inline constexpr std::size_t kDimensionCount = 8;

inline constexpr std::array<Dimension, kDimensionCount> kDimensions = {
    Dimension::DeploymentLatency,  Dimension::CognitiveLoad,        Dimension::InfrastructureDependency,
    Dimension::OfflinePersistence, Dimension::InteractionComplexity, Dimension::Adaptability,
    Dimension::AssistiveCompatibility, Dimension::Localization,
};

constexpr std::size_t index(Dimension d) noexcept { return static_cast<std::size_t>(d); }

constexpr std::string_view symbol(Dimension d) noexcept {
    constexpr std::array<std::string_view, kDimensionCount> names = {"L_d", "L_c", "D_i", "P_o",
                                                                     "C_x", "A_d", "A_c", "L_z"};
    return names[index(d)];
}

constexpr std::string_view label(Dimension d) noexcept {
    constexpr std::array<std::string_view, kDimensionCount> names = {
        "Deployment Latency",  "Cognitive Load", "Infrastructure Dep.", "Offline Persistence",
        "Interaction Complexity", "Adaptability", "Assistive Compat.",   "Localization"};
    return names[index(d)];
}

/// Lower is better for cost dimensions.
constexpr bool is_cost(Dimension d) noexcept {
    return d == Dimension::DeploymentLatency || d == Dimension::CognitiveLoad ||
           d == Dimension::InfrastructureDependency || d == Dimension::InteractionComplexity;
}

inline std::optional<Dimension> dimension_from_symbol(std::string_view s) {
    for (Dimension d : kDimensions) {
        if (symbol(d) == s) return d;
    }
    return std::nullopt;
}

struct ConstraintVector {
    double deployment_latency = 0.0;
    double cognitive_load = 0.0;
    double infrastructure_dependency = 0.0;
    double offline_persistence = 0.0;
    std::uint32_t interaction_steps = 0;
    double adaptability = 0.0;
    double assistive_compatibility = 0.0;
    double localization = 0.0;

    double operator[](Dimension d) const noexcept {
        switch (d) {
            case Dimension::DeploymentLatency: return deployment_latency;
            case Dimension::CognitiveLoad: return cognitive_load;
            case Dimension::InfrastructureDependency: return infrastructure_dependency;
            case Dimension::OfflinePersistence: return offline_persistence;
            case Dimension::InteractionComplexity: return static_cast<double>(interaction_steps);
            case Dimension::Adaptability: return adaptability;
            case Dimension::AssistiveCompatibility: return assistive_compatibility;
            case Dimension::Localization: return localization;
        }
        return 0.0;
    }

    /// Sets a unit-interval dimension; steps are set through `interaction_steps`.
    void set(Dimension d, double v) {
        switch (d) {
            case Dimension::DeploymentLatency: deployment_latency = v; break;
            case Dimension::CognitiveLoad: cognitive_load = v; break;
            case Dimension::InfrastructureDependency: infrastructure_dependency = v; break;
            case Dimension::OfflinePersistence: offline_persistence = v; break;
            case Dimension::InteractionComplexity:
                if (!(v >= 0.0) || v != std::floor(v) || v > 4294967295.0) {
                    throw DomainError("C_x must be a natural number");
                }
                interaction_steps = static_cast<std::uint32_t>(v);
                break;
            case Dimension::Adaptability: adaptability = v; break;
            case Dimension::AssistiveCompatibility: assistive_compatibility = v; break;
            case Dimension::Localization: localization = v; break;
        }
    }

    void validate() const {
        for (Dimension d : kDimensions) {
            if (d == Dimension::InteractionComplexity) continue;
            const double v = (*this)[d];
            if (!(v >= 0.0 && v <= 1.0)) {
                throw DomainError(std::string(symbol(d)) + " must lie in [0, 1]");
            }
        }
    }

    friend bool operator==(const ConstraintVector&, const ConstraintVector&) = default;
};

struct AbilityProfile {
    double visual = 1.0;
    double motor = 1.0;
    double cognitive = 1.0;
    double hearing = 1.0;

    void validate() const {
        for (double v : {visual, motor, cognitive, hearing}) {
            if (!(v >= 0.0 && v <= 1.0)) throw DomainError("ability profile values must lie in [0, 1]");
        }
    }
};

struct Environment {
    double bandwidth = 1.0;
    bool hardware_capable = true;
    double connectivity = 1.0;

    void validate() const {
        if (!(bandwidth >= 0.0 && bandwidth <= 1.0) || !(connectivity >= 0.0 && connectivity <= 1.0)) {
            throw DomainError("environment values must lie in [0, 1]");
        }
    }
};

struct FrictionCoefficients {
    double deployment = 0.2;      // alpha, on L_d
    double cognitive = 0.2;       // beta, on L_c
    double complexity = 0.2;      // gamma, on normalized C_x
    double offline_gap = 0.2;     // delta, on 1 - P_o
    double infrastructure = 0.2;  // epsilon, on D_i

    double sum() const noexcept { return deployment + cognitive + complexity + offline_gap + infrastructure; }
};

using Weights = std::array<double, kDimensionCount>;

struct ScoringConfig {
    /// Explicit per-dimension weights. Unset means weights derived from the
    /// profile and environment (see `effective_weights`).
    std::optional<Weights> weights;
    double theta = 0.5;
    FrictionCoefficients friction;
    /// Steps normalizer for C_x.
    double steps_max = 20.0;

    void validate() const {
        if (weights) {
            double z = 0.0;
            for (double w : *weights) {
                if (!(w >= 0.0)) throw ConfigError("weights must be non-negative");
                z += w;
            }
            if (!(z > 0.0)) throw ConfigError("weights must not all be zero");
        }
        if (!(theta >= 0.0 && theta <= 1.0)) throw ConfigError("theta must lie in [0, 1]");
        for (double c : {friction.deployment, friction.cognitive, friction.complexity, friction.offline_gap,
                         friction.infrastructure}) {
            if (!(c >= 0.0)) throw ConfigError("friction coefficients must be non-negative");
        }
        if (!(friction.sum() > 0.0)) throw ConfigError("friction coefficients must not all be zero");
        if (!(steps_max >= 1.0)) throw ConfigError("steps_max must be at least 1");
    }
};

struct SystemDescriptor {
    std::string name;
    ConstraintVector kappa;
    std::string notes;
};

/// Unit weights, raised for offline persistence as connectivity drops and for
/// cognitive load as cognitive ability drops. Explicit weights win.
inline Weights effective_weights(const AbilityProfile& profile, const Environment& env, const ScoringConfig& cfg) {
    if (cfg.weights) return *cfg.weights;
    Weights w;
    w.fill(1.0);
    w[index(Dimension::OfflinePersistence)] = 1.0 + (1.0 - env.connectivity);
    w[index(Dimension::CognitiveLoad)] = 1.0 + (1.0 - profile.cognitive);
    return w;
}

/// phi_i: 1 - v for unit-interval costs, v for benefits, 1 / (1 + steps /
/// steps_max) for interaction steps. The profile and environment act through
/// the weights, not here.
inline double component_utility(Dimension d, double value, const AbilityProfile& /*profile*/,
                                const Environment& /*env*/, double steps_max = 20.0) {
    if (d == Dimension::InteractionComplexity) {
        if (!(value >= 0.0)) throw DomainError("C_x must be non-negative");
        if (!(steps_max >= 1.0)) throw ConfigError("steps_max must be at least 1");
        return 1.0 / (1.0 + value / steps_max);
    }
    if (!(value >= 0.0 && value <= 1.0)) throw DomainError(std::string(symbol(d)) + " must lie in [0, 1]");
    return is_cost(d) ? 1.0 - value : value;
}

inline double utility(const ConstraintVector& kappa, const AbilityProfile& profile, const Environment& env,
                      const ScoringConfig& cfg) {
    kappa.validate();
    const Weights w = effective_weights(profile, env, cfg);
    double z = 0.0;
    double total = 0.0;
    for (Dimension d : kDimensions) {
        const double wi = w[index(d)];
        if (!(wi >= 0.0)) throw ConfigError("weights must be non-negative");
        z += wi;
        total += wi * component_utility(d, kappa[d], profile, env, cfg.steps_max);
    }
    if (!(z > 0.0)) throw ConfigError("normalization constant is zero");
    return total / z;
}

/// C_x / steps_max, capped at 1.
inline double normalized_steps(const ConstraintVector& kappa, const ScoringConfig& cfg) {
    return std::min(1.0, static_cast<double>(kappa.interaction_steps) / cfg.steps_max);
}

inline double friction(const ConstraintVector& kappa, const ScoringConfig& cfg) {
    const auto& c = cfg.friction;
    return c.deployment * kappa.deployment_latency + c.cognitive * kappa.cognitive_load +
           c.complexity * normalized_steps(kappa, cfg) + c.offline_gap * (1.0 - kappa.offline_persistence) +
           c.infrastructure * kappa.infrastructure_dependency;
}

inline double acs(const ConstraintVector& kappa, const ScoringConfig& cfg) {
    return 1.0 - friction(kappa, cfg) * (1.0 - kappa.adaptability) * (1.0 - kappa.assistive_compatibility);
}

struct BoundaryResult {
    bool contains = false;
    std::string best_system;
    double best_utility = 0.0;
};

/// Whether (profile, env) lies inside the capability boundary of `systems`:
/// some system reaches utility >= theta. Ties go to the earlier system.
inline BoundaryResult acb_contains(std::span<const SystemDescriptor> systems, const AbilityProfile& profile,
                                   const Environment& env, const ScoringConfig& cfg) {
    if (systems.empty()) throw DomainError("system set is empty");
    BoundaryResult r;
    bool first = true;
    for (const auto& s : systems) {
        const double u = utility(s.kappa, profile, env, cfg);
        if (first || u > r.best_utility) {
            r.best_utility = u;
            r.best_system = s.name;
            first = false;
        }
    }
    r.contains = r.best_utility >= cfg.theta;
    return r;
}

/// `a` is at least as good as `b` on every dimension and strictly better on one.
inline bool dominates(const ConstraintVector& a, const ConstraintVector& b) noexcept {
    bool strictly = false;
    for (Dimension d : kDimensions) {
        const double av = a[d];
        const double bv = b[d];
        const bool better = is_cost(d) ? av < bv : av > bv;
        const bool worse = is_cost(d) ? av > bv : av < bv;
        if (worse) return false;
        strictly = strictly || better;
    }
    return strictly;
}

/// Indices of non-dominated systems, in input order.
///
/// Block-nested-loop skyline: one pass keeps a window of mutually
/// non-dominated candidates. A candidate evicted from the window never needs
/// re-checking because dominance is transitive.
inline std::vector<std::size_t> pareto_indices(std::span<const SystemDescriptor> systems) {
    std::vector<std::size_t> window;
    for (std::size_t i = 0; i < systems.size(); ++i) {
        const auto& candidate = systems[i].kappa;
        bool dominated = false;
        for (std::size_t w : window) {
            if (dominates(systems[w].kappa, candidate)) {
                dominated = true;
                break;
            }
        }
        if (dominated) continue;
        std::erase_if(window, [&](std::size_t w) { return dominates(candidate, systems[w].kappa); });
        window.push_back(i);
    }
    std::sort(window.begin(), window.end());
    return window;
}

inline std::vector<SystemDescriptor> pareto_frontier(std::span<const SystemDescriptor> systems) {
    std::vector<SystemDescriptor> out;
    for (std::size_t i : pareto_indices(systems)) out.push_back(systems[i]);
    return out;
}

}  // namespace frameguide::acb
