#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "cablewrench/statics.hpp"

namespace cablewrench {

/// Rest-to-rest scalar profile: quintic polynomial with zero velocity and
/// zero acceleration at both ends, s(0) = start, s(T) = end. Evaluation
/// clamps t into [0, T] so callers iterating in floating point cannot step
/// outside the profile. Throws NonPositiveDurationError when duration <= 0.
class QuinticProfile {
public:
    QuinticProfile(double start, double end, double duration);

    double position(double t) const;
    double velocity(double t) const;
    double acceleration(double t) const;

    double start() const { return s0_; }
    double end() const { return s1_; }
    double duration() const { return duration_; }

private:
    double s0_;
    double s1_;
    double duration_;
};

enum class Axis { x, y, z };
Eigen::Vector3d axis_vector(Axis axis);

struct TrajectorySample {
    double t = 0.0;
    Pose pose;
    double theta_e = 0.0; ///< plate inclination: rotation angle of pose.rotation
    Eigen::Vector3d omega = Eigen::Vector3d::Zero();       ///< commanded sphere rate
    Eigen::Vector3d wheel_rates = Eigen::Vector3d::Zero(); ///< phidot realizing omega
    std::array<double, 8> cable_lengths{};
    bool feasible = false; ///< quasi-static tension balance holds at this sample
};

struct Trajectory {
    std::vector<TrajectorySample> samples;
    std::int64_t n_feasible = 0;
    std::int64_t error_samples = 0; ///< samples whose evaluation failed (marked infeasible)
};

/// Sample instants k*dt for k = 0, 1, ... plus the exact end time. Because
/// each instant is the product k*dt (never an accumulated sum), halving dt
/// reproduces the original instants bit-for-bit at the shared indices.
std::vector<double> sample_times(double duration, double dt);

/// Plate parked at `pose`, sphere swung by `amplitude` radians about a body
/// axis with a quintic profile. The sphere's orientation never enters the
/// statics, so feasibility is constant along this trajectory; the point of
/// running it is the wheel-rate history.
Trajectory trajectory_sphere_rotation(const RobotGeometry& geom, const CableArrangement& arr,
                                      const TensionBox& box, const Pose& pose, Axis axis,
                                      double amplitude, double duration, double dt,
                                      const FeasibilityOptions& feas = {});

/// Straight-line translation through the waypoint list at identity plate
/// orientation, one quintic segment per leg, each taking segment_duration.
/// The commanded orientation is identity throughout, so the commanded
/// inclination theta_e is exactly zero at every sample.
Trajectory trajectory_translation(const RobotGeometry& geom, const CableArrangement& arr,
                                  const TensionBox& box,
                                  const std::vector<Eigen::Vector3d>& waypoints,
                                  double segment_duration, double dt,
                                  const FeasibilityOptions& feas = {});

/// Vertical climb from `start` to z_target while the sphere performs a
/// quintic swing of `amplitude` radians about a body axis.
Trajectory trajectory_vertical_with_rotation(const RobotGeometry& geom,
                                             const CableArrangement& arr, const TensionBox& box,
                                             const Eigen::Vector3d& start, double z_target,
                                             Axis axis, double amplitude, double duration,
                                             double dt, const FeasibilityOptions& feas = {});

} // namespace cablewrench
