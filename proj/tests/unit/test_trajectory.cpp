#include <doctest.h>

#include <cmath>
#include <random>

#include "cablewrench/cdpr.hpp"
#include "cablewrench/errors.hpp"
#include "cablewrench/trajectory.hpp"
#include "helpers.hpp"

using namespace cablewrench;

TEST_CASE("quintic profile endpoint and midpoint values") {
    std::mt19937_64 rng(76001);
    std::uniform_real_distribution<double> val(-10.0, 10.0);
    std::uniform_real_distribution<double> dur(0.1, 20.0);

    for (int trial = 0; trial < 200; ++trial) {
        const double s0 = val(rng), s1 = val(rng), T = dur(rng);
        const QuinticProfile q(s0, s1, T);
        const double scale = std::max({1.0, std::abs(s1 - s0) / T,
                                       std::abs(s1 - s0) / (T * T)});

        CHECK(q.position(0.0) == s0);
        CHECK(q.position(T) == doctest::Approx(s1).epsilon(1e-13));
        CHECK(std::abs(q.velocity(0.0)) <= 1e-12 * scale);
        CHECK(std::abs(q.velocity(T)) <= 1e-12 * scale);
        CHECK(std::abs(q.acceleration(0.0)) <= 1e-12 * scale);
        CHECK(std::abs(q.acceleration(T)) <= 1e-12 * scale);

        // symmetric midpoint, known peak velocity 1.875 (s1-s0)/T
        CHECK(q.position(T / 2.0) == doctest::Approx((s0 + s1) / 2.0).epsilon(1e-12));
        CHECK(q.velocity(T / 2.0) ==
              doctest::Approx(1.875 * (s1 - s0) / T).epsilon(1e-12));
    }
}

TEST_CASE("quintic profile is monotone and clamped") {
    const QuinticProfile q(2.0, 5.0, 4.0);
    double prev = q.position(0.0);
    for (int k = 1; k <= 100; ++k) {
        const double cur = q.position(4.0 * k / 100.0);
        CHECK(cur >= prev - 1e-15);
        prev = cur;
    }
    CHECK(q.position(-3.0) == q.position(0.0));
    CHECK(q.position(99.0) == q.position(4.0));
    CHECK(q.velocity(-1.0) == 0.0);
    CHECK(q.velocity(7.0) == 0.0);

    CHECK_THROWS_AS(QuinticProfile(0.0, 1.0, 0.0), NonPositiveDurationError);
    CHECK_THROWS_AS(QuinticProfile(0.0, 1.0, -2.0), NonPositiveDurationError);
}

TEST_CASE("sample instants") {
    const auto exact = sample_times(1.0, 0.25);
    REQUIRE(exact.size() == 5);
    CHECK(exact[0] == 0.0);
    CHECK(exact[2] == 0.5);
    CHECK(exact.back() == 1.0);

    // a dt that does not divide the duration still ends exactly on it
    const auto ragged = sample_times(1.0, 0.3);
    REQUIRE(ragged.size() == 5);
    CHECK(ragged[3] == doctest::Approx(0.9).epsilon(1e-15));
    CHECK(ragged.back() == 1.0);

    // a dt larger than the duration gives just the two endpoints
    const auto coarse = sample_times(2.0, 5.0);
    REQUIRE(coarse.size() == 2);
    CHECK(coarse[0] == 0.0);
    CHECK(coarse[1] == 2.0);

    CHECK_THROWS_AS(sample_times(0.0, 0.1), NonPositiveDurationError);
    CHECK_THROWS_AS(sample_times(1.0, 0.0), ValidationError);

    // halving dt keeps every shared instant bit-identical
    const auto base = sample_times(10.0, 0.01);
    const auto fine = sample_times(10.0, 0.005);
    REQUIRE(fine.size() == 2 * base.size() - 1);
    for (std::size_t k = 0; k < base.size(); ++k) CHECK(base[k] == fine[2 * k]);
}

TEST_CASE("parked rotation trajectory") {
    const auto& cfg = test_support::reference_config();
    const auto geom = cfg.geometry();
    const Pose pose{Eigen::Vector3d(0.0, 0.0, 2.0), Eigen::Matrix3d::Identity()};

    const Trajectory traj =
        trajectory_sphere_rotation(geom, cfg.arrangement, cfg.tension_box(), pose, Axis::z,
                                   2.0 * pi, 10.0, 0.01, cfg.feasibility());
    REQUIRE(traj.samples.size() == 1001);
    CHECK(traj.error_samples == 0);

    const auto& first = traj.samples.front();
    const auto& last = traj.samples.back();
    CHECK(first.t == 0.0);
    CHECK(last.t == 10.0);

    // plate never moves: pose, lengths and verdict all frozen
    const auto lengths = cable_states(geom, cfg.arrangement, pose);
    for (const auto& s : traj.samples) {
        CHECK(s.pose.position == pose.position);
        CHECK(s.theta_e == 0.0);
        CHECK(s.feasible == first.feasible);
        for (int k = 0; k < 8; ++k)
            CHECK(s.cable_lengths[static_cast<std::size_t>(k)] ==
                  lengths[static_cast<std::size_t>(k)].length);
    }
    CHECK(traj.n_feasible == (first.feasible ? 1001 : 0));
    CHECK(first.feasible); // the reference pose is inside the workspace

    // rest-to-rest: wheel rates vanish at both ends, move in between
    CHECK(first.wheel_rates.isZero(0.0));
    CHECK(last.wheel_rates.cwiseAbs().maxCoeff() < 1e-12);
    const auto& mid = traj.samples[500];
    CHECK(mid.omega.norm() > 0.1);
    CHECK(mid.wheel_rates.cwiseAbs().maxCoeff() > 0.1);
    // spinning about z drives all three wheels identically
    CHECK(mid.wheel_rates(0) == doctest::Approx(mid.wheel_rates(1)).epsilon(1e-12));
    CHECK(mid.wheel_rates(1) == doctest::Approx(mid.wheel_rates(2)).epsilon(1e-12));
}

TEST_CASE("translation trajectory commands zero inclination everywhere") {
    const auto& cfg = test_support::reference_config();
    const auto geom = cfg.geometry();
    const std::vector<Eigen::Vector3d> waypoints = {
        {0.0, 0.0, 2.0}, {0.5, 0.0, 2.0}, {0.5, 0.5, 2.5}};

    const Trajectory traj =
        trajectory_translation(geom, cfg.arrangement, cfg.tension_box(), waypoints, 2.0, 0.01,
                               cfg.feasibility());
    REQUIRE(traj.samples.size() == 401);

    for (const auto& s : traj.samples) {
        CHECK(s.theta_e == 0.0); // identity command: no parasitic term in the model
        CHECK(s.omega.isZero(0.0));
        CHECK(s.wheel_rates.isZero(0.0));
    }

    // waypoints are hit exactly at segment boundaries
    CHECK(traj.samples[0].pose.position == waypoints[0]);
    CHECK(test_support::max_abs(traj.samples[200].pose.position - waypoints[1]) < 1e-12);
    CHECK(test_support::max_abs(traj.samples[400].pose.position - waypoints[2]) < 1e-12);

    // motion pauses at the interior waypoint (rest-to-rest segments)
    const Eigen::Vector3d before = traj.samples[199].pose.position;
    const Eigen::Vector3d after = traj.samples[201].pose.position;
    CHECK(test_support::max_abs(before - waypoints[1]) < 1e-5);
    CHECK(test_support::max_abs(after - waypoints[1]) < 1e-5);

    CHECK_THROWS_AS(trajectory_translation(geom, cfg.arrangement, cfg.tension_box(),
                                           {waypoints[0]}, 2.0, 0.01),
                    ValidationError);
}

TEST_CASE("climb with a simultaneous sphere swing") {
    const auto& cfg = test_support::reference_config();
    const auto geom = cfg.geometry();
    const Eigen::Vector3d start(0.0, 0.0, 1.2);

    const Trajectory traj = trajectory_vertical_with_rotation(
        geom, cfg.arrangement, cfg.tension_box(), start, 2.8, Axis::z, pi, 8.0, 0.01,
        cfg.feasibility());
    REQUIRE(traj.samples.size() == 801);

    const auto& first = traj.samples.front();
    const auto& last = traj.samples.back();
    CHECK(first.pose.position == start);
    CHECK(last.pose.position.z() == doctest::Approx(2.8).epsilon(1e-13));
    for (const auto& s : traj.samples) {
        CHECK(s.pose.position.x() == 0.0);
        CHECK(s.pose.position.y() == 0.0);
        CHECK(s.theta_e == 0.0);
    }
    CHECK(first.wheel_rates.isZero(0.0));
    CHECK(last.wheel_rates.cwiseAbs().maxCoeff() < 1e-12);
    CHECK(traj.n_feasible + (801 - traj.n_feasible) == 801);
    CHECK(traj.n_feasible > 0);
}

TEST_CASE("samples that cannot be evaluated are marked, not fatal") {
    const auto& cfg = test_support::reference_config();
    const auto geom = cfg.geometry();
    const auto arr = cfg.arrangement;
    // park the plate where cable 0's attachment coincides with its exit
    const Eigen::Vector3d bad_pos =
        geom.exit_points[static_cast<std::size_t>(arr.exit_of_cable[0])] -
        geom.anchor_points[static_cast<std::size_t>(arr.anchor_of_cable[0])];
    const Pose pose{bad_pos, Eigen::Matrix3d::Identity()};

    const Trajectory traj = trajectory_sphere_rotation(
        geom, arr, cfg.tension_box(), pose, Axis::z, pi, 1.0, 0.1, cfg.feasibility());
    REQUIRE(traj.samples.size() == 11);
    CHECK(traj.error_samples == 11);
    CHECK(traj.n_feasible == 0);
    for (const auto& s : traj.samples) {
        CHECK_FALSE(s.feasible);
        CHECK(std::isnan(s.cable_lengths[0]));
    }
}

TEST_CASE("axis helper") {
    CHECK(axis_vector(Axis::x) == Eigen::Vector3d(1, 0, 0));
    CHECK(axis_vector(Axis::y) == Eigen::Vector3d(0, 1, 0));
    CHECK(axis_vector(Axis::z) == Eigen::Vector3d(0, 0, 1));
}
