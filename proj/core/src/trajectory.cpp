#include "cablewrench/trajectory.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "cablewrench/errors.hpp"
#include "cablewrench/wrist.hpp"

namespace cablewrench {

QuinticProfile::QuinticProfile(double start, double end, double duration)
    : s0_(start), s1_(end), duration_(duration) {
    if (!(duration > 0.0))
        throw NonPositiveDurationError("profile duration must be positive, got " +
                                       std::to_string(duration));
}

double QuinticProfile::position(double t) const {
    const double tau = std::clamp(t / duration_, 0.0, 1.0);
    const double t3 = tau * tau * tau;
    return s0_ + (s1_ - s0_) * (t3 * (10.0 + tau * (-15.0 + 6.0 * tau)));
}

double QuinticProfile::velocity(double t) const {
    const double tau = std::clamp(t / duration_, 0.0, 1.0);
    const double t2 = tau * tau;
    return (s1_ - s0_) / duration_ * (t2 * (30.0 + tau * (-60.0 + 30.0 * tau)));
}

double QuinticProfile::acceleration(double t) const {
    const double tau = std::clamp(t / duration_, 0.0, 1.0);
    return (s1_ - s0_) / (duration_ * duration_) *
           (tau * (60.0 + tau * (-180.0 + 120.0 * tau)));
}

Eigen::Vector3d axis_vector(Axis axis) {
    switch (axis) {
    case Axis::x: return Eigen::Vector3d::UnitX();
    case Axis::y: return Eigen::Vector3d::UnitY();
    default: return Eigen::Vector3d::UnitZ();
    }
}

std::vector<double> sample_times(double duration, double dt) {
    if (!(duration > 0.0))
        throw NonPositiveDurationError("trajectory duration must be positive");
    if (!(dt > 0.0)) throw ValidationError("trajectory dt must be positive");

    std::vector<double> ts;
    ts.reserve(static_cast<std::size_t>(duration / dt) + 2);
    for (std::int64_t k = 0;; ++k) {
        const double t = static_cast<double>(k) * dt;
        if (t >= duration * (1.0 - 1e-12)) break;
        ts.push_back(t);
    }
    ts.push_back(duration);
    return ts;
}

namespace {

Trajectory evaluate(const RobotGeometry& geom, const CableArrangement& arr, const TensionBox& box,
                    double duration, double dt, const FeasibilityOptions& feas,
                    const std::function<Pose(double)>& pose_at,
                    const std::function<Eigen::Vector3d(double)>& omega_at) {
    validate_geometry(geom);
    box.validate();

    // Pose-independent pieces, hoisted out of the sample loop.
    const Eigen::MatrixXd w_sw = wrist_wrench_matrix(geom.wrist, arr.loops, 8);
    const auto contacts = contact_geometry(geom.wrist);
    Eigen::Matrix3d rate_map; // phidot = rate_map * omega
    for (int i = 0; i < 3; ++i)
        rate_map.row(i) = geom.wrist.sphere_radius / geom.wrist.wheel_radius *
                          contacts[static_cast<std::size_t>(i)]
                              .normal.cross(contacts[static_cast<std::size_t>(i)].tangent)
                              .transpose();

    Trajectory out;
    for (const double t : sample_times(duration, dt)) {
        TrajectorySample s;
        s.t = t;
        s.pose = pose_at(t);
        s.theta_e = rotation_angle(s.pose.rotation);
        s.omega = omega_at(t);
        s.wheel_rates = rate_map * s.omega;
        try {
            const auto cables = cable_states(geom, arr, s.pose);
            for (int k = 0; k < 8; ++k)
                s.cable_lengths[static_cast<std::size_t>(k)] =
                    cables[static_cast<std::size_t>(k)].length;

            WrenchSystem sys;
            sys.W.resize(9, 8);
            sys.W.topRows<6>() = wrench_matrix_tp(geom, arr, s.pose);
            sys.W.bottomRows<3>() = w_sw;
            sys.w_e.resize(9);
            sys.w_e.head<6>() = gravity_wrench_tp(geom, s.pose);
            sys.w_e.tail<3>().setZero();
            s.feasible = tension_feasible(sys, box, feas).feasible;
        } catch (const NumericalError&) {
            s.feasible = false;
            s.cable_lengths.fill(std::numeric_limits<double>::quiet_NaN());
            ++out.error_samples;
        }
        if (s.feasible) ++out.n_feasible;
        out.samples.push_back(s);
    }
    return out;
}

} // namespace

Trajectory trajectory_sphere_rotation(const RobotGeometry& geom, const CableArrangement& arr,
                                      const TensionBox& box, const Pose& pose, Axis axis,
                                      double amplitude, double duration, double dt,
                                      const FeasibilityOptions& feas) {
    const QuinticProfile profile(0.0, amplitude, duration);
    const Eigen::Vector3d u = axis_vector(axis);
    return evaluate(
        geom, arr, box, duration, dt, feas, [&](double) { return pose; },
        [&](double t) { return Eigen::Vector3d(u * profile.velocity(t)); });
}

Trajectory trajectory_translation(const RobotGeometry& geom, const CableArrangement& arr,
                                  const TensionBox& box,
                                  const std::vector<Eigen::Vector3d>& waypoints,
                                  double segment_duration, double dt,
                                  const FeasibilityOptions& feas) {
    if (waypoints.size() < 2)
        throw ValidationError("translation trajectory needs at least two waypoints");
    if (!(segment_duration > 0.0))
        throw NonPositiveDurationError("segment duration must be positive");
    const int n_seg = static_cast<int>(waypoints.size()) - 1;
    const double total = segment_duration * n_seg;
    const QuinticProfile leg(0.0, 1.0, segment_duration);

    return evaluate(
        geom, arr, box, total, dt, feas,
        [&](double t) {
            int k = static_cast<int>(t / segment_duration);
            k = std::clamp(k, 0, n_seg - 1);
            const double local = t - static_cast<double>(k) * segment_duration;
            const double q = leg.position(local);
            const auto ku = static_cast<std::size_t>(k);
            const Eigen::Vector3d p = waypoints[ku] + (waypoints[ku + 1] - waypoints[ku]) * q;
            return Pose{p, Eigen::Matrix3d::Identity()};
        },
        [](double) { return Eigen::Vector3d::Zero(); });
}

Trajectory trajectory_vertical_with_rotation(const RobotGeometry& geom,
                                             const CableArrangement& arr, const TensionBox& box,
                                             const Eigen::Vector3d& start, double z_target,
                                             Axis axis, double amplitude, double duration,
                                             double dt, const FeasibilityOptions& feas) {
    const QuinticProfile climb(start.z(), z_target, duration);
    const QuinticProfile swing(0.0, amplitude, duration);
    const Eigen::Vector3d u = axis_vector(axis);
    return evaluate(
        geom, arr, box, duration, dt, feas,
        [&](double t) {
            return Pose{Eigen::Vector3d(start.x(), start.y(), climb.position(t)),
                        Eigen::Matrix3d::Identity()};
        },
        [&](double t) { return Eigen::Vector3d(u * swing.velocity(t)); });
}

} // namespace cablewrench
