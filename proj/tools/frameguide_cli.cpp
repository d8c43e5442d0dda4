// frameguide: analysis, simulation, scoring and benchmarking from the shell.
//
// Exit codes: 0 success, 1 runtime error, 2 usage or parse error,
// 3 simulation did not converge.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "frameguide/frameguide.hpp"

namespace fg = frameguide;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNotConverged = 3;

constexpr const char* kConfigEnv = "FRAMEGUIDE_CONFIG";

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open '" + path + "'");
    return in;
}

fg::AppConfig load_app_config(const std::string& flag_path) {
    std::string path = flag_path;
    if (path.empty()) {
        if (const char* env = std::getenv(kConfigEnv); env && *env) path = env;
    }
    if (path.empty()) return {};
    auto in = open_input(path);
    return fg::load_config(in);
}

fg::MessageCatalog load_catalog(const std::string& path) {
    if (path.empty()) return fg::MessageCatalog::builtin();
    auto in = open_input(path);
    return fg::MessageCatalog::load(in);
}

void write_output(const std::string& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot write '" + path + "'");
    out << bytes;
}

std::string analysis_line(const fg::SnapshotFrame& f, const fg::AlignmentState& a) {
    std::string s = "t=" + std::to_string(f.timestamp_ms);
    if (a.presence == fg::Presence::Detected) {
        s += " h=";
        s += fg::to_string(a.horizontal);
        s += " v=";
        s += fg::to_string(a.vertical);
        s += " tilt=";
        s += fg::to_string(a.tilt);
        s += " d=";
        s += fg::to_string(a.distance);
        s += " presence=Detected";
    } else {
        s += " h=- v=- tilt=- d=- presence=Lost(raw)";
    }
    s += " lighting=";
    s += fg::to_string(a.lighting);
    s += " angle=" + fg::text::fixed(a.tilt_deg, 3);
    return s;
}

struct CommonOptions {
    std::string config_path;
};

struct ScoreOptions {
    std::string systems_path;
    std::vector<double> profile;
    std::vector<double> env;
    std::vector<double> weights;
    std::optional<double> theta;
    std::string format = "text";
};

fg::acb::ScoreReport build_report(const ScoreOptions& o, const fg::AppConfig& cfg,
                                  std::vector<fg::acb::SystemDescriptor>& systems) {
    auto in = open_input(o.systems_path);
    systems = fg::acb::read_systems(in);
    if (systems.empty()) throw fg::ParseError(0, "systems file defines no systems");

    fg::acb::AbilityProfile profile;
    if (!o.profile.empty()) profile = {o.profile[0], o.profile[1], o.profile[2], o.profile[3]};
    fg::acb::Environment env;
    if (!o.env.empty()) {
        if (o.env[1] != 0.0 && o.env[1] != 1.0) throw UsageError("--env hardware flag must be 0 or 1");
        env = {o.env[0], o.env[1] == 1.0, o.env[2]};
    }
    fg::acb::ScoringConfig scoring = cfg.scoring;
    if (!o.weights.empty()) {
        fg::acb::Weights w;
        std::copy(o.weights.begin(), o.weights.end(), w.begin());
        scoring.weights = w;
    }
    bool theta_default = !cfg.theta_from_config;
    if (o.theta) {
        scoring.theta = *o.theta;
        theta_default = false;
    }
    try {
        profile.validate();
        env.validate();
        scoring.validate();
    } catch (const fg::Error& e) {
        throw UsageError(e.what());
    }
    return fg::acb::score_systems(systems, profile, env, scoring, theta_default);
}

void add_score_flags(CLI::App* cmd, ScoreOptions& o) {
    cmd->add_option("systems", o.systems_path, "Systems descriptor file")->required();
    cmd->add_option("--profile", o.profile, "Ability profile a_v,a_m,a_c,a_h")->expected(4)->delimiter(',');
    cmd->add_option("--env", o.env, "Environment bandwidth,hardware(0|1),connectivity")->expected(3)->delimiter(',');
    cmd->add_option("--weights", o.weights, "Eight weights in L_d,L_c,D_i,P_o,C_x,A_d,A_c,L_z order")
        ->expected(8)
        ->delimiter(',');
    cmd->add_option("--theta", o.theta, "Utility threshold for boundary membership");
    cmd->add_option("--format", o.format, "text or csv")->check(CLI::IsMember({"text", "csv"}));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"frameguide: webcam framing guidance engine and accessibility scoring"};
    app.require_subcommand(1);

    CommonOptions common;
    app.add_option("--config", common.config_path,
                   std::string("JSON configuration file (default: $") + kConfigEnv + ")");

    // analyze
    auto* analyze = app.add_subcommand("analyze", "Classify every frame of a landmark snapshot file");
    std::string analyze_path;
    analyze->add_option("snapshots", analyze_path, "Landmark snapshot file")->required();

    // replay
    auto* replay_cmd = app.add_subcommand("replay", "Drive the engine from a landmark snapshot file");
    std::string replay_path, replay_trace, catalog_path, locale;
    replay_cmd->add_option("snapshots", replay_path, "Landmark snapshot file")->required();
    replay_cmd->add_option("--trace", replay_trace, "Write the session trace here ('-' for stdout)");
    replay_cmd->add_option("--catalog", catalog_path, "Message catalog JSON");
    replay_cmd->add_option("--locale", locale, "Locale for spoken text");

    // simulate
    auto* simulate = app.add_subcommand("simulate", "Run the closed-loop synthetic user");
    fg::UserModel user;
    std::string sim_trace;
    bool sweep = false;
    unsigned jobs = 0;
    std::optional<std::int64_t> frame_interval;
    std::optional<std::size_t> max_cycles, hold_frames;
    simulate->add_option("--x-offset", user.x_offset, "Nose x offset from center");
    simulate->add_option("--y-center", user.y_center, "Face center y");
    simulate->add_option("--face-width", user.face_width, "Face width as a frame fraction");
    simulate->add_option("--tilt", user.tilt_deg, "Head tilt in degrees");
    simulate->add_option("--compliance", user.compliance, "Fraction of each correction applied")
        ->check(CLI::Range(0.0, 1.0));
    simulate->add_option("--reaction-frames", user.reaction_frames, "Frames before responding")
        ->check(CLI::NonNegativeNumber);
    simulate->add_option("--noise", user.noise_sigma, "Per-frame jitter std-dev")->check(CLI::NonNegativeNumber);
    simulate->add_option("--seed", user.seed, "Noise seed");
    simulate->add_option("--frame-interval", frame_interval, "Milliseconds per frame");
    simulate->add_option("--max-cycles", max_cycles, "Guidance event budget");
    simulate->add_option("--hold-frames", hold_frames, "Aligned frames required for convergence");
    simulate->add_option("--trace", sim_trace, "Write the session trace here ('-' for stdout)");
    simulate->add_flag("--sweep", sweep, "Run the built-in convergence grid instead of one user");
    simulate->add_option("--jobs", jobs, "Worker threads for --sweep (0 = all cores)");

    // score / report
    auto* score = app.add_subcommand("score", "Utility, friction, capability score and frontier per system");
    ScoreOptions score_opts;
    add_score_flags(score, score_opts);
    auto* report = app.add_subcommand("report", "Constraint matrix with derived scores");
    ScoreOptions report_opts;
    add_score_flags(report, report_opts);

    // bench
    auto* bench = app.add_subcommand("bench", "Engine step latency over synthetic frames");
    long long iterations = 10000;
    bench->add_option("--iterations", iterations, "Number of steps to time");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        const fg::AppConfig cfg = load_app_config(common.config_path);

        if (*analyze) {
            auto in = open_input(analyze_path);
            const auto frames = fg::read_snapshots(in);
            for (const auto& f : frames) {
                const auto a = fg::analyze(f.landmarks, fg::Lighting::Unknown, cfg.engine.spatial);
                std::cout << analysis_line(f, a) << '\n';
            }
            return kExitOk;
        }

        if (*replay_cmd) {
            fg::EngineConfig engine_cfg = cfg.engine;
            if (!locale.empty()) engine_cfg.locale = locale;
            const auto catalog = load_catalog(catalog_path);
            auto in = open_input(replay_path);
            const auto frames = fg::read_snapshots(in);
            const auto trace = fg::replay(frames, engine_cfg, catalog, cfg.simulation.convergence_hold_frames);
            const std::string bytes = fg::trace_to_string(trace);
            if (replay_trace == "-") {
                std::cout << bytes;
            } else {
                if (!replay_trace.empty()) write_output(replay_trace, bytes);
                for (const auto& ev : trace.events()) {
                    std::cout << "t=" << ev.timestamp_ms << ' ' << fg::to_string(ev.severity) << ' ' << ev.key
                              << ": " << ev.text << '\n';
                }
                std::cout << fg::format_summary(trace.summary) << '\n';
            }
            return kExitOk;
        }

        if (*simulate) {
            fg::SimConfig sim_cfg = cfg.simulation;
            if (frame_interval) sim_cfg.frame_interval_ms = *frame_interval;
            if (max_cycles) sim_cfg.max_cycles = *max_cycles;
            if (hold_frames) sim_cfg.convergence_hold_frames = *hold_frames;
            try {
                sim_cfg.validate();
                user.validate();
            } catch (const fg::ConfigError& e) {
                throw UsageError(e.what());
            }

            if (sweep) {
                const auto grid = fg::convergence_grid();
                const auto results = fg::run_sweep(grid, cfg.engine, sim_cfg, jobs);
                std::size_t converged = 0;
                for (std::size_t i = 0; i < grid.size(); ++i) {
                    const auto& u = grid[i];
                    std::cout << "x=" << fg::text::fixed(u.x_offset, 2) << " y=" << fg::text::fixed(u.y_center, 2)
                              << " w=" << fg::text::fixed(u.face_width, 2) << " tilt=" << fg::text::fixed(u.tilt_deg, 1)
                              << " compliance=" << fg::text::fixed(u.compliance, 2) << " reaction=" << u.reaction_frames
                              << " noise=" << fg::text::fixed(u.noise_sigma, 3) << ' '
                              << fg::format_summary(results[i]) << '\n';
                    converged += results[i].converged ? 1 : 0;
                }
                std::cout << "sweep runs=" << grid.size() << " converged=" << converged << '\n';
                return converged == grid.size() ? kExitOk : kExitNotConverged;
            }

            const auto trace = fg::run(user, cfg.engine, sim_cfg);
            const std::string bytes = fg::trace_to_string(trace);
            if (sim_trace == "-") {
                std::cout << bytes;
            } else {
                if (!sim_trace.empty()) write_output(sim_trace, bytes);
                std::cout << fg::format_summary(trace.summary) << '\n';
            }
            return trace.summary.converged ? kExitOk : kExitNotConverged;
        }

        if (*score || *report) {
            const ScoreOptions& o = *score ? score_opts : report_opts;
            std::vector<fg::acb::SystemDescriptor> systems;
            const auto r = build_report(o, cfg, systems);
            if (*score) {
                o.format == "csv" ? fg::acb::write_score_csv(std::cout, r) : fg::acb::write_score_text(std::cout, r);
            } else {
                o.format == "csv" ? fg::acb::write_matrix_csv(std::cout, systems, r)
                                  : fg::acb::write_matrix_text(std::cout, systems, r);
            }
            return kExitOk;
        }

        if (*bench) {
            if (iterations < 1) throw UsageError("--iterations must be at least 1");
            const auto stats = fg::measure_step_latency(static_cast<std::size_t>(iterations));
            std::cout << "steps=" << stats.samples << " median_us=" << fg::text::fixed(stats.median_ns / 1000.0, 3)
                      << " p99_us=" << fg::text::fixed(stats.p99_ns / 1000.0, 3)
                      << " max_us=" << fg::text::fixed(stats.max_ns / 1000.0, 3) << '\n';
            return kExitOk;
        }
    } catch (const UsageError& e) {
        std::cerr << "frameguide: " << e.what() << '\n';
        return kExitUsage;
    } catch (const fg::ParseError& e) {
        std::cerr << "frameguide: parse error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const fg::ConfigError& e) {
        std::cerr << "frameguide: configuration error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const fg::CatalogError& e) {
        std::cerr << "frameguide: catalog error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "frameguide: " << e.what() << '\n';
        return kExitRuntime;
    }
    return kExitUsage;
}
