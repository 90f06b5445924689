// Batch front end: every command reads a JSON configuration, runs one
// analysis and writes CSV/JSON artifacts. Exit codes: 0 success, 2 invalid
// configuration or arguments, 3 numerical failure, 64 usage error.

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cablewrench/config.hpp"
#include "cablewrench/errors.hpp"
#include "cablewrench/export.hpp"
#include "cablewrench/log.hpp"
#include "cablewrench/search.hpp"
#include "cablewrench/trajectory.hpp"
#include "cablewrench/workspace.hpp"

namespace cw = cablewrench;
namespace fs = std::filesystem;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_invalid = 2;
constexpr int exit_numerical = 3;
constexpr int exit_usage = 64;

std::ofstream open_out(const fs::path& dir, const std::string& name) {
    fs::create_directories(dir);
    const fs::path p = dir / name;
    std::ofstream os(p);
    if (!os) throw cw::Error("cannot write " + p.string());
    return os;
}

cw::GridSpec grid_from(const cw::RobotConfig& cfg, const std::vector<int>& override_iv) {
    cw::GridSpec g = cfg.grid;
    if (!override_iv.empty()) {
        if (override_iv.size() != 3)
            throw cw::ValidationError("--grid expects three interval counts, e.g. 9,9,9");
        g.intervals = {override_iv[0], override_iv[1], override_iv[2]};
        g.validate();
    }
    return g;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Kinetostatics, workspace analysis and cable-arrangement search for a\n"
                 "cable-suspended platform carrying a cable-loop-driven spherical wrist."};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir = "out";
    int threads = 0;
    std::vector<int> grid_override;
    long long seed = 0; // reserved for tooling that samples; analyses are deterministic

    std::function<int()> run;

    auto add_common = [&](CLI::App* cmd, bool needs_config) {
        auto* opt = cmd->add_option("-c,--config", config_path, "configuration JSON file");
        if (needs_config) opt->required();
        cmd->add_option("-o,--out", out_dir, "output directory (default: out)");
        cmd->add_option("--seed", seed, "reserved; analyses are deterministic");
    };

    // counts: closed-form sizes of the arrangement space
    {
        auto* cmd = app.add_subcommand("counts", "arrangement space sizes");
        auto ne = std::make_shared<int>(8);
        auto nc = std::make_shared<int>(8);
        auto na = std::make_shared<int>(15);
        auto nsc = std::make_shared<int>(2);
        auto nasc = std::make_shared<int>(9);
        cmd->add_option("--n-e", *ne, "number of frame exits");
        cmd->add_option("--n-c", *nc, "number of cables");
        cmd->add_option("--n-a", *na, "number of platform anchors");
        cmd->add_option("--n-sc", *nsc, "number of simple cables");
        cmd->add_option("--n-asc", *nasc, "number of candidate anchors for simple cables");
        cmd->callback([&, ne, nc, na, nsc, nasc]() {
            run = [=]() {
                const auto c = cw::count_arrangements(*ne, *nc, *na, *nsc, *nasc);
                std::cout << "N_e = " << c.exit_choices << "\n"
                          << "N_a = " << c.anchor_orderings << "\n"
                          << "N_c = " << c.combined << "\n"
                          << "N_CL = " << c.loop_constrained << "\n";
                return exit_ok;
            };
        });
    }

    // ik: cable lengths at one pose
    {
        auto* cmd = app.add_subcommand("ik", "cable lengths at a plate pose");
        add_common(cmd, true);
        auto pose = std::make_shared<std::vector<double>>();
        cmd->add_option("--pose", *pose,
                        "px,py,pz,theta,psi,chi (metres; intrinsic z-y-x angles in degrees)")
            ->delimiter(',')
            ->expected(6)
            ->required();
        cmd->callback([&, pose]() {
            run = [=, &config_path]() {
                const auto cfg = cw::load_config(config_path);
                const auto& v = *pose;
                const cw::EulerZyx e{v[3] * cw::pi / 180.0, v[4] * cw::pi / 180.0,
                                     v[5] * cw::pi / 180.0};
                const cw::Pose p = cw::make_pose({v[0], v[1], v[2]}, e);
                const auto cables = cw::cable_states(cfg.geometry(), cfg.arrangement, p);
                cw::write_cable_lengths_csv(std::cout, cables);
                return exit_ok;
            };
        });
    }

    // wrist-check: conditioning of the wheel layout
    {
        auto* cmd = app.add_subcommand("wrist-check", "wrist contact geometry and conditioning");
        add_common(cmd, true);
        cmd->callback([&]() {
            run = [&]() {
                const auto cfg = cw::load_config(config_path);
                const auto wrist = cfg.geometry().wrist;
                const auto contacts = cw::contact_geometry(wrist);
                for (int i = 0; i < 3; ++i) {
                    const auto& c = contacts[static_cast<std::size_t>(i)];
                    std::cout << "contact " << (i + 1) << ": point=("
                              << cw::format_number(c.point.x()) << ","
                              << cw::format_number(c.point.y()) << ","
                              << cw::format_number(c.point.z()) << ") tangent=("
                              << cw::format_number(c.tangent.x()) << ","
                              << cw::format_number(c.tangent.y()) << ","
                              << cw::format_number(c.tangent.z()) << ")\n";
                }
                const auto jac = cw::wrist_jacobians(wrist);
                const Eigen::JacobiSVD<Eigen::Matrix3d> svd(jac.J);
                const auto& s = svd.singularValues();
                const double cond = s(0) / s(2);
                std::cout << "det(A) = " << cw::format_number(jac.A.determinant()) << "\n"
                          << "singular_values(J) = " << cw::format_number(s(0)) << " "
                          << cw::format_number(s(1)) << " " << cw::format_number(s(2)) << "\n"
                          << "cond(J) = " << cw::format_number(cond) << "\n"
                          << "isotropic_within_1pct = " << (cond <= 1.01 ? "yes" : "no") << "\n";
                return exit_ok;
            };
        });
    }

    // workspace: feasibility scan over the configured grid
    {
        auto* cmd = app.add_subcommand("workspace", "static workspace scan");
        add_common(cmd, true);
        cmd->add_option("-t,--threads", threads, "worker threads (0 = auto)");
        cmd->add_option("-g,--grid", grid_override, "override grid intervals, e.g. 9,9,9")
            ->delimiter(',');
        cmd->callback([&]() {
            run = [&]() {
                const auto cfg = cw::load_config(config_path);
                cw::WorkspaceOptions opts;
                opts.threads = threads;
                opts.feasibility = cfg.feasibility();
                const auto grid = grid_from(cfg, grid_override);
                const auto ws =
                    cw::static_workspace_ao(cfg.geometry(), cfg.arrangement, cfg.tension_box(),
                                            grid, opts);
                auto csv = open_out(out_dir, "workspace.csv");
                cw::write_workspace_csv(csv, ws);
                auto summary = open_out(out_dir, "workspace_summary.json");
                cw::write_workspace_summary_json(summary, ws);
                std::cout << "ratio = " << cw::format_number(cw::workspace_ratio(ws)) << " ("
                          << ws.n_feasible << " of " << ws.grid.node_count()
                          << " nodes, largest component " << cw::largest_feasible_component(ws)
                          << ")\n";
                return exit_ok;
            };
        });
    }

    // arrangements: enumerate the candidate stream
    {
        auto* cmd = app.add_subcommand("arrangements", "enumerate admissible arrangements");
        add_common(cmd, true);
        auto limit = std::make_shared<std::uint64_t>(0);
        cmd->add_option("--limit", *limit, "stop after this many (0 = all)");
        cmd->callback([&, limit]() {
            run = [=, &config_path, &out_dir]() {
                const auto cfg = cw::load_config(config_path);
                std::vector<cw::CableArrangement> arrs;
                cw::enumerate_arrangements(cfg.geometry(), cfg.classes,
                                           [&](const cw::CableArrangement& a) {
                                               arrs.push_back(a);
                                               return *limit == 0 || arrs.size() < *limit;
                                           });
                auto csv = open_out(out_dir, "arrangements.csv");
                cw::write_arrangements_csv(csv, arrs);
                std::cout << "enumerated " << arrs.size() << " arrangements\n";
                return exit_ok;
            };
        });
    }

    // best-arrangement: two-stage workspace-maximizing search
    {
        auto* cmd = app.add_subcommand("best-arrangement",
                                       "search arrangements for the largest workspace");
        add_common(cmd, true);
        cmd->add_option("-t,--threads", threads, "worker threads (0 = auto)");
        cmd->add_option("-g,--grid", grid_override, "override grid intervals, e.g. 9,9,9")
            ->delimiter(',');
        auto limit = std::make_shared<std::uint64_t>(0);
        cmd->add_option("--limit", *limit, "search only the first N candidates (0 = all)");
        cmd->callback([&, limit]() {
            run = [=, &config_path, &out_dir, &threads, &grid_override]() {
                const auto cfg = cw::load_config(config_path);
                const auto geom = cfg.geometry();
                std::vector<cw::CableArrangement> candidates;
                cw::enumerate_arrangements(geom, cfg.classes,
                                           [&](const cw::CableArrangement& a) {
                                               candidates.push_back(a);
                                               return *limit == 0 ||
                                                      candidates.size() < *limit;
                                           });
                cw::SearchOptions opts;
                opts.coarse_intervals = cfg.search.coarse_intervals;
                opts.prune_slack = cfg.search.prune_slack;
                opts.top_k = cfg.search.top_k;
                opts.threads = threads;
                opts.workspace.feasibility = cfg.feasibility();
                const auto grid = grid_from(cfg, grid_override);
                const auto result =
                    cw::best_arrangement(geom, cfg.tension_box(), grid, candidates, opts);
                auto csv = open_out(out_dir, "ranking.csv");
                cw::write_ranking_csv(csv, result);
                auto js = open_out(out_dir, "ranking.json");
                cw::write_ranking_json(js, result);
                std::cout << "best arrangement: " << cw::arrangement_string(result.best.arrangement)
                          << " ratio=" << cw::format_number(result.best.ratio) << " ("
                          << result.best.n_feasible << " nodes; " << result.finalists << " of "
                          << result.candidates << " candidates reached the full grid)\n";
                return exit_ok;
            };
        });
    }

    // trajectory: quasi-static feasibility along a reference motion
    {
        auto* cmd = app.add_subcommand("trajectory", "sample a reference trajectory");
        add_common(cmd, true);
        auto id = std::make_shared<int>(1);
        cmd->add_option("--id", *id, "1 = sphere rotation, 2 = translation, 3 = combined")
            ->check(CLI::Range(1, 3));
        cmd->callback([&, id]() {
            run = [=, &config_path, &out_dir]() {
                const auto cfg = cw::load_config(config_path);
                const auto geom = cfg.geometry();
                const auto box = cfg.tension_box();
                const auto feas = cfg.feasibility();
                const double dt = cfg.trajectories.dt;
                cw::Trajectory traj;
                if (*id == 1) {
                    const auto& s = cfg.trajectories.rotation;
                    traj = cw::trajectory_sphere_rotation(
                        geom, cfg.arrangement, box,
                        cw::Pose{s.position, Eigen::Matrix3d::Identity()}, s.axis,
                        s.amplitude_deg * cw::pi / 180.0, s.duration, dt, feas);
                } else if (*id == 2) {
                    const auto& s = cfg.trajectories.translation;
                    traj = cw::trajectory_translation(geom, cfg.arrangement, box, s.waypoints,
                                                      s.segment_duration, dt, feas);
                } else {
                    const auto& s = cfg.trajectories.combined;
                    traj = cw::trajectory_vertical_with_rotation(
                        geom, cfg.arrangement, box, s.start, s.z_target, s.axis,
                        s.amplitude_deg * cw::pi / 180.0, s.duration, dt, feas);
                }
                auto csv = open_out(out_dir, "trajectory_" + std::to_string(*id) + ".csv");
                cw::write_trajectory_csv(csv, traj);
                std::cout << "samples=" << traj.samples.size()
                          << " feasible=" << traj.n_feasible
                          << " errors=" << traj.error_samples << "\n";
                return exit_ok;
            };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        return run();
    } catch (const cw::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_invalid;
    } catch (const cw::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_invalid;
    } catch (const cw::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_numerical;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return exit_numerical;
    }
}
