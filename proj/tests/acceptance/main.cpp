// Acceptance gate for the release: every check below guards a numbered
// claim about the toolkit (counting formulas, kinematic identities, solver
// cross-checks, workspace properties, determinism). One line per check;
// exit status is nonzero if any of them fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "cablewrench/arrangement.hpp"
#include "cablewrench/config.hpp"
#include "cablewrench/export.hpp"
#include "cablewrench/search.hpp"
#include "cablewrench/statics.hpp"
#include "cablewrench/trajectory.hpp"
#include "cablewrench/workspace.hpp"
#include "cablewrench/wrist.hpp"

using namespace cablewrench;

namespace {

struct Check {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            if (detail.tellp() > 0) detail << "; ";
            detail << "FAILED: " << what;
        }
    }
    template <class T> void note(const std::string& key, const T& value) {
        if (detail.tellp() > 0) detail << "; ";
        detail << key << "=" << value;
    }
};

int g_failures = 0;

void run(const char* id, const char* name, const std::function<void(Check&)>& body) {
    Check c;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.pass = false;
        c.detail << "exception: " << e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %s %s (%.2f s)%s%s\n", c.pass ? "PASS" : "FAIL", id, name, secs,
                c.detail.tellp() > 0 ? "  " : "", c.detail.str().c_str());
    std::fflush(stdout);
    if (!c.pass) ++g_failures;
}

const RobotConfig& config() {
    static const RobotConfig cfg = load_config(CABLEWRENCH_REFERENCE_CONFIG);
    return cfg;
}

Eigen::Matrix3d rodrigues(const Eigen::Vector3d& axis, double angle) {
    Eigen::Matrix3d k;
    k << 0.0, -axis.z(), axis.y(), axis.z(), 0.0, -axis.x(), -axis.y(), axis.x(), 0.0;
    return Eigen::Matrix3d::Identity() + std::sin(angle) * k + (1.0 - std::cos(angle)) * k * k;
}

Eigen::Vector3d random_unit(std::mt19937_64& rng) {
    std::normal_distribution<double> n(0.0, 1.0);
    Eigen::Vector3d v;
    do {
        v = Eigen::Vector3d(n(rng), n(rng), n(rng));
    } while (v.norm() < 1e-3);
    return v.normalized();
}

WristParams random_wrist(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> a(0.15, 1.35);
    std::uniform_real_distribution<double> b(-0.6, 0.6);
    std::uniform_real_distribution<double> g(-0.3, 0.3);
    std::uniform_real_distribution<double> r(0.02, 0.3);
    WristParams p;
    p.alpha = a(rng);
    p.beta = b(rng);
    p.gamma = {g(rng), 2.0 * pi / 3.0 + g(rng), 4.0 * pi / 3.0 + g(rng)};
    p.sphere_radius = r(rng);
    p.wheel_radius = r(rng);
    p.drum_radius = r(rng);
    return p;
}

} // namespace

int main() {
    std::printf("acceptance checks, reference configuration: %s\n", CABLEWRENCH_REFERENCE_CONFIG);

    // 1. The closed-form count of admissible cable arrangements, both for the
    //    full candidate-anchor set (9 simple-cable anchors) and the restricted
    //    one (3), as exact integers.
    run("01", "arrangement count formulas", [](Check& c) {
        const auto full = count_arrangements(8, 8, 15, 2, 9);
        const auto restricted = count_arrangements(8, 8, 15, 2, 3);
        c.require(full.loop_constrained == 1451520ULL, "N_CL for 9 candidates != 1451520");
        c.require(restricted.loop_constrained == 120960ULL, "N_CL for 3 candidates != 120960");
        c.note("N_CL(9)", full.loop_constrained);
        c.note("N_CL(3)", restricted.loop_constrained);
    });

    // 2. Enumerating the restricted space really yields that many distinct,
    //    admissible arrangements, within a 10 s budget.
    run("02", "restricted enumeration matches the formula", [](Check& c) {
        const auto geom = config().geometry();
        const auto classes = restricted_anchor_classes();
        std::unordered_set<std::string> seen;
        seen.reserve(130000);
        std::uint64_t n = 0;
        std::uint64_t invalid = 0;
        const auto start = std::chrono::steady_clock::now();
        enumerate_arrangements(geom, classes, [&](const CableArrangement& a) {
            seen.insert(arrangement_string(a));
            if (n % 1000 == 0) {
                try {
                    validate_arrangement(a, classes);
                } catch (const std::exception&) {
                    ++invalid;
                }
            }
            ++n;
            return true;
        });
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        c.require(n == 120960ULL, "stream count != 120960");
        c.require(seen.size() == 120960ULL, "arrangements are not pairwise distinct");
        c.require(invalid == 0, "a sampled arrangement failed validation");
        c.require(secs < 10.0, "enumeration exceeded 10 s");
        c.note("count", n);
        c.note("distinct", seen.size());
    });

    // 3. At the published design point (35.2 deg elevation, no roller skew)
    //    the wheel-to-sphere rate map is isotropic to within 1e-2.
    run("03", "wrist isotropy at the design elevation", [](Check& c) {
        WristParams p = config().geometry().wrist;
        const auto jac = wrist_jacobians(p);
        const Eigen::JacobiSVD<Eigen::Matrix3d> svd(jac.J);
        const double cond = svd.singularValues()(0) / svd.singularValues()(2);
        c.require(std::abs(cond - 1.0) <= 1e-2, "cond(J) deviates from 1 by more than 1e-2");
        c.note("alpha_deg", config().wrist.alpha_deg);
        c.note("cond(J)", cond);
    });

    // 4. Power balance between the sphere side and the wheel side: the moment
    //    from loop tensions against any sphere rate equals the wheel torques
    //    against the matching wheel rates, to 1e-10 relative, on 1000 random
    //    wrist instances.
    run("04", "wrist power reciprocity", [](Check& c) {
        std::mt19937_64 rng(90004);
        std::uniform_real_distribution<double> tension(0.0, 20.0);
        std::uniform_real_distribution<double> rate(-3.0, 3.0);
        const LoopPairing pairing = {{{0, 1}, {2, 3}, {4, 5}}};
        double worst = 0.0;
        for (int trial = 0; trial < 1000; ++trial) {
            const WristParams p = random_wrist(rng);
            const auto w_c = cable_loop_matrix(p, pairing);
            const auto w_sw = wrist_wrench_matrix(p, pairing);
            Eigen::VectorXd t(8);
            for (int j = 0; j < 8; ++j) t(j) = tension(rng);
            const Eigen::Vector3d omega(rate(rng), rate(rng), rate(rng));

            const Eigen::Vector3d moment = w_sw * t;
            const Eigen::Vector3d torques = w_c * t;
            const Eigen::Vector3d phidot = omni_wheel_rates(p, omega);
            const double lhs = moment.dot(omega);
            const double rhs = torques.dot(phidot);
            const double err = std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs));
            worst = std::max(worst, err);
        }
        c.require(worst <= 1e-10, "power mismatch above 1e-10 relative");
        c.note("instances", 1000);
        c.note("worst_rel_err", worst);
    });

    // 5. Each loop turns its wheel with torque r_d * (t_i - t_j), reproduced
    //    through the loop matrix to 1e-14 on 100 random draws.
    run("05", "loop torque from the strand tension difference", [](Check& c) {
        std::mt19937_64 rng(90005);
        std::uniform_real_distribution<double> tension(0.0, 20.0);
        std::uniform_real_distribution<double> drum(0.01, 0.1);
        const LoopPairing pairing = {{{2, 7}, {3, 4}, {5, 6}}};
        double worst = 0.0;
        for (int trial = 0; trial < 100; ++trial) {
            WristParams p;
            p.drum_radius = drum(rng);
            Eigen::VectorXd t(8);
            for (int j = 0; j < 8; ++j) t(j) = tension(rng);
            const Eigen::Vector3d torques = cable_loop_matrix(p, pairing) * t;
            for (int k = 0; k < 3; ++k) {
                const auto ku = static_cast<std::size_t>(k);
                const double expect =
                    p.drum_radius * (t(pairing[ku][0]) - t(pairing[ku][1]));
                worst = std::max(worst,
                                 std::abs(torques(k) - expect) / std::max(1.0, std::abs(expect)));
            }
        }
        c.require(worst <= 1e-14, "loop torque identity violated beyond 1e-14");
        c.note("draws", 100);
        c.note("worst_err", worst);
    });

    // 6. The LP-based verdict against the brute-force grid oracle on 100 toy
    //    systems built to be decisively feasible or decisively infeasible.
    //    Instances whose optimum falls inside the margin band
    //    [tol/2, 2 tol] are excused (none should, by construction).
    run("06", "feasibility solver agrees with the grid oracle", [](Check& c) {
        std::mt19937_64 rng(90006);
        std::uniform_real_distribution<double> coef(-2.0, 2.0);
        std::uniform_real_distribution<double> frac(0.1, 0.9);

        FeasibilityOptions opts;
        opts.eps_abs = 0.05;
        const double tol = *opts.eps_abs;

        int agreements = 0, in_band = 0;
        const auto start = std::chrono::steady_clock::now();
        for (int trial = 0; trial < 100; ++trial) {
            const int n = 2 + static_cast<int>(rng() % 2); // 2 or 3 cables
            WrenchSystem sys;
            sys.W.resize(3, n);
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < n; ++j) sys.W(i, j) = coef(rng);
            const TensionBox box = TensionBox::uniform(n, 0.0, 1.0);

            Eigen::VectorXd t_star(n);
            for (int j = 0; j < n; ++j) t_star(j) = frac(rng);
            sys.w_e = -sys.W * t_star;
            if (trial % 2 == 1) {
                // push one row beyond anything the box can compensate
                sys.w_e(1) += sys.W.row(1).cwiseAbs().sum() + 1.0;
            }

            const auto lp = tension_feasible(sys, box, opts);
            if (lp.residual >= tol / 2.0 && lp.residual <= 2.0 * tol) {
                ++in_band;
                continue;
            }
            const auto oracle = feasibility_oracle(sys, box, 151, opts);
            c.require(oracle.result.feasible == lp.feasible,
                      "verdicts differ on a decisive instance");
            ++agreements;
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        c.require(secs < 30.0, "comparison exceeded 30 s");
        c.note("compared", agreements);
        c.note("excused_in_band", in_band);
    });

    // 7a. A massless plate with a box that admits zero tension is feasible at
    //     every node: the workspace ratio is exactly 1.
    run("7a", "massless plate fills the whole grid", [](Check& c) {
        RobotGeometry geom = config().geometry();
        geom.platform_mass = 0.0;
        GridSpec grid = config().grid;
        grid.intervals = {3, 3, 3};
        const auto ws = static_workspace_ao(geom, config().arrangement,
                                            TensionBox::uniform(8, 0.0, 10.0), grid);
        c.require(workspace_ratio(ws) == 1.0, "ratio != 1.0");
        c.note("ratio", workspace_ratio(ws));
    });

    // 7b. A box with zero force capacity cannot hold the plate anywhere.
    run("7b", "zero-capacity box empties the grid", [](Check& c) {
        GridSpec grid = config().grid;
        grid.intervals = {3, 3, 3};
        const auto ws = static_workspace_ao(config().geometry(), config().arrangement,
                                            TensionBox::uniform(8, 0.0, 0.0), grid);
        c.require(workspace_ratio(ws) == 0.0, "ratio != 0.0");
        c.note("ratio", workspace_ratio(ws));
    });

    // 7c. Widening the tension box never shrinks the workspace, node by node.
    run("7c", "workspace grows monotonically with the box", [](Check& c) {
        GridSpec grid = config().grid;
        grid.intervals = {4, 4, 4};
        WorkspaceOptions opts;
        opts.feasibility = config().feasibility();
        const auto geom = config().geometry();
        const auto& arr = config().arrangement;

        const auto tight =
            static_workspace_ao(geom, arr, TensionBox::uniform(8, 20.0, 100.0), grid, opts);
        const auto mid =
            static_workspace_ao(geom, arr, TensionBox::uniform(8, 10.0, 120.0), grid, opts);
        const auto wide =
            static_workspace_ao(geom, arr, TensionBox::uniform(8, 5.0, 150.0), grid, opts);

        bool nested = true;
        for (std::size_t i = 0; i < tight.feasible.size(); ++i) {
            if (tight.feasible[i] && !mid.feasible[i]) nested = false;
            if (mid.feasible[i] && !wide.feasible[i]) nested = false;
        }
        c.require(nested, "a node was lost when the box widened");
        c.require(tight.n_feasible <= mid.n_feasible && mid.n_feasible <= wide.n_feasible,
                  "feasible counts not monotone");
        c.note("n_tight", tight.n_feasible);
        c.note("n_mid", mid.n_feasible);
        c.note("n_wide", wide.n_feasible);
    });

    // 7d. The full reference scan: single-threaded, under a minute, with a
    //     ratio strictly between 0 and 1. The connected-core size is reported
    //     for judgement, not asserted; so is the ratio under the strict
    //     relative tolerance, which exposes how much the documented absolute
    //     tolerance in the reference configuration matters.
    run("7d", "reference workspace scan", [](Check& c) {
        WorkspaceOptions opts;
        opts.threads = 1;
        opts.feasibility = config().feasibility();
        const auto start = std::chrono::steady_clock::now();
        const auto ws = static_workspace_ao(config().geometry(), config().arrangement,
                                            config().tension_box(), config().grid, opts);
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const double ratio = workspace_ratio(ws);
        c.require(secs < 60.0, "scan exceeded 60 s");
        c.require(ratio > 0.0 && ratio < 1.0, "ratio not strictly between 0 and 1");
        c.require(ws.error_nodes == 0, "nodes failed to evaluate");
        c.note("ratio", ratio);
        c.note("largest_component", largest_feasible_component(ws));
        c.note("n_feasible", ws.n_feasible);

        WorkspaceOptions strict;
        strict.threads = 1; // default relative tolerance instead of the configured one
        const auto exact = static_workspace_ao(config().geometry(), config().arrangement,
                                               config().tension_box(), config().grid, strict);
        c.note("strict_tolerance_ratio", workspace_ratio(exact));
    });

    // 8. The two-stage arrangement search returns the identical winner and
    //    ranking for 1, 4 and 8 workers on a 500-candidate slice.
    run("08", "search determinism across worker counts", [](Check& c) {
        const auto geom = config().geometry();
        const auto box = config().tension_box();
        GridSpec grid = config().grid;
        grid.intervals = {5, 5, 5};

        // a spread slice: every 242nd arrangement of the restricted space
        std::vector<CableArrangement> candidates;
        candidates.reserve(500);
        std::uint64_t index = 0;
        enumerate_arrangements(geom, restricted_anchor_classes(),
                               [&](const CableArrangement& a) {
                                   if (index++ % 242 == 0) candidates.push_back(a);
                                   return candidates.size() < 500;
                               });
        c.require(candidates.size() == 500, "candidate slice is not 500 strong");

        SearchOptions opts;
        opts.coarse_intervals = config().search.coarse_intervals;
        opts.prune_slack = config().search.prune_slack;
        opts.top_k = config().search.top_k;
        opts.workspace.feasibility = config().feasibility();

        const auto start = std::chrono::steady_clock::now();
        std::vector<SearchResult> results;
        std::vector<std::string> csvs;
        for (int workers : {1, 4, 8}) {
            opts.threads = workers;
            results.push_back(best_arrangement(geom, box, grid, candidates, opts));
            std::ostringstream os;
            write_ranking_csv(os, results.back());
            csvs.push_back(os.str());
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

        for (std::size_t i = 1; i < results.size(); ++i) {
            c.require(results[i].best.arrangement.exit_of_cable ==
                              results[0].best.arrangement.exit_of_cable &&
                          results[i].best.arrangement.anchor_of_cable ==
                              results[0].best.arrangement.anchor_of_cable,
                      "winner differs between worker counts");
            c.require(results[i].best.ratio == results[0].best.ratio,
                      "winning ratio differs between worker counts");
            c.require(results[i].finalists == results[0].finalists,
                      "finalist count differs between worker counts");
            c.require(csvs[i] == csvs[0], "ranking bytes differ between worker counts");
        }
        c.require(secs < 300.0, "three search runs exceeded 5 minutes");
        c.note("winner", arrangement_string(results[0].best.arrangement));
        c.note("ratio", results[0].best.ratio);
        c.note("finalists", results[0].finalists);
    });

    // 9. Rest-to-rest profiles start and stop truly at rest: velocity and
    //    acceleration vanish at both endpoints, 1000 random profiles.
    run("09", "quintic endpoint conditions", [](Check& c) {
        std::mt19937_64 rng(90009);
        std::uniform_real_distribution<double> val(-10.0, 10.0);
        std::uniform_real_distribution<double> dur(0.05, 30.0);
        double worst = 0.0;
        for (int trial = 0; trial < 1000; ++trial) {
            const double s0 = val(rng), s1 = val(rng), T = dur(rng);
            const QuinticProfile q(s0, s1, T);
            const double d = std::abs(s1 - s0);
            const double scale = std::max({1.0, d / T, d / (T * T)});
            for (const double v :
                 {q.velocity(0.0), q.velocity(T), q.acceleration(0.0), q.acceleration(T)})
                worst = std::max(worst, std::abs(v) / scale);
        }
        c.require(worst <= 1e-10, "endpoint rates above 1e-10 relative");
        c.note("profiles", 1000);
        c.note("worst_rel", worst);
    });

    // 10. The inclination angle read back from a rotation matrix equals the
    //     angle the matrix was built with, and is exactly zero for identity.
    run("10", "inclination angle identity", [](Check& c) {
        std::mt19937_64 rng(90010);
        std::uniform_real_distribution<double> ang(1e-3, pi - 1e-3);
        double worst = 0.0;
        for (int trial = 0; trial < 1000; ++trial) {
            const double phi = ang(rng);
            const double got = rotation_angle(rodrigues(random_unit(rng), phi));
            worst = std::max(worst, std::abs(got - phi));
        }
        c.require(worst <= 1e-10, "angle error above 1e-10");
        c.require(rotation_angle(Eigen::Matrix3d::Identity()) == 0.0,
                  "identity angle not exactly zero");
        c.note("instances", 1000);
        c.note("worst_abs_err", worst);
    });

    // 11. The translation reference trajectory commands identity orientation,
    //     so its inclination is identically zero at every sample. (Hardware
    //     misalignment and friction are outside this model on purpose.)
    run("11", "translation trajectory commands zero inclination", [](Check& c) {
        const auto& t = config().trajectories;
        const Trajectory traj = trajectory_translation(
            config().geometry(), config().arrangement, config().tension_box(),
            t.translation.waypoints, t.translation.segment_duration, t.dt,
            config().feasibility());
        bool all_zero = true;
        for (const auto& s : traj.samples)
            if (s.theta_e != 0.0) all_zero = false;
        c.require(all_zero, "a sample has nonzero commanded inclination");
        c.note("samples", traj.samples.size());
        c.note("n_feasible", traj.n_feasible);
    });

    std::printf("%s: %d failure(s)\n", g_failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED",
                g_failures);
    return g_failures == 0 ? 0 : 1;
}
